/* cycsch: exact cyclotomic association schemes over finite commutative
 * rings - C API.
 *
 * All objects are opaque handles created and destroyed by this library.
 * Functions return CCS_OK (0) on success; on failure the per-thread
 * message from ccs_last_error() describes what went wrong. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with ccs_string_free().
 *
 * Handles are immutable after creation and may be shared across threads
 * read-only.
 */
#ifndef CYCSCH_H
#define CYCSCH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ccs_status {
    CCS_OK = 0,
    CCS_ERR_PARSE = 1,
    CCS_ERR_CAP = 2,
    CCS_ERR_INVALID = 3,
    CCS_ERR_INTERNAL = 4
} ccs_status;

typedef struct ccs_ring ccs_ring;
typedef struct ccs_subgroup ccs_subgroup;
typedef struct ccs_scheme ccs_scheme;
typedef struct ccs_group ccs_group;

/* Resource limits; a zero field keeps the built-in default. */
typedef struct ccs_caps {
    int ring_size;            /* max |R| at construction (default 2048) */
    int aut_degree;           /* max degree for automorphism search (default 128) */
    long long group_elements; /* max explicit group size (default 10^6) */
    int unit_group;           /* max |R^x| for subgroup sweeps (default 256) */
    long long stab_elements;  /* max two-point stabilizer size (default 5*10^4) */
} ccs_caps;

/* Message for the most recent failing call on this thread. */
const char* ccs_last_error(void);

/* Frees a string returned by this library. NULL is allowed. */
void ccs_string_free(char* s);

/* ---- rings ---- */

/* Grammar: Z/<n>, GR(<p>^<d>,<r>), GF(<q>), POLY(<q>,<n>), products
 * joined by '*', e.g. "Z/9*GF(3)". */
ccs_status ccs_ring_parse(const char* spec, const ccs_caps* caps, ccs_ring** out);
void ccs_ring_free(ccs_ring* ring);
int ccs_ring_size(const ccs_ring* ring);
/* JSON object: spec, size, characteristic, is_local, residue_field_size,
 * and the unit/radical/socle/teichmuller/principal_units element sets. */
ccs_status ccs_ring_describe(const ccs_ring* ring, char** out_json);
ccs_status ccs_ring_element_name(const ccs_ring* ring, int element, char** out);

/* ---- unit subgroups ---- */

/* Grammar: all | 1 | gens:<e1>,<e2>,... | elems:<e1>,... where entries
 * are element indices or printed forms. */
ccs_status ccs_subgroup_parse(const ccs_ring* ring, const char* spec, ccs_subgroup** out);
void ccs_subgroup_free(ccs_subgroup* k);
int ccs_subgroup_order(const ccs_subgroup* k);
/* Writes the sorted element list; returns CCS_ERR_INVALID if capacity is
 * too small. */
ccs_status ccs_subgroup_elements(const ccs_subgroup* k, int* out, int capacity);
/* JSON array of all subgroups of R^x, each a sorted element array,
 * ordered by (order, elements). */
ccs_status ccs_unit_subgroups(const ccs_ring* ring, const ccs_caps* caps, char** out_json);

/* ---- schemes ---- */

ccs_status ccs_scheme_build(const ccs_ring* ring, const ccs_subgroup* k, ccs_scheme** out);
void ccs_scheme_free(ccs_scheme* scheme);
int ccs_scheme_rank(const ccs_scheme* scheme);
int ccs_scheme_degree(const ccs_scheme* scheme);
/* Color-matrix dump: first line "n k", then n rows of color ids. */
ccs_status ccs_scheme_dump(const ccs_scheme* scheme, char** out_text);

/* ---- automorphism groups ---- */

ccs_status ccs_scheme_aut(const ccs_scheme* scheme, const ccs_caps* caps, ccs_group** out);
void ccs_group_free(ccs_group* group);
long long ccs_group_order(const ccs_group* group);
int ccs_group_degree(const ccs_group* group);
/* Image array of one element (sorted order); capacity must be >= degree. */
ccs_status ccs_group_element(const ccs_group* group, long long index, int* out_images,
                             int capacity);

/* ---- classification and verification ---- */

/* One NormalityVerdict as JSON: ring, K, rank, pure, strongly_pure,
 * theorem, bruteforce, aut_order, agammal_order, witness, consistent. */
ccs_status ccs_classify(const ccs_ring* ring, const ccs_subgroup* k, const ccs_caps* caps,
                        char** out_json);

/* Space-separated list of theorem-suite names. */
const char* ccs_suite_names(void);
/* Runs one suite over the ring (k may be NULL for a sweep over all unit
 * subgroups); JSON report: suite, instance, pass, checked, skipped,
 * failures, note. */
ccs_status ccs_verify_suite(const char* suite, const ccs_ring* ring, const ccs_subgroup* k,
                            const ccs_caps* caps, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CYCSCH_H */
