#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycsch/affine.hpp"
#include "cycsch/ring.hpp"
#include "cycsch/scheme.hpp"
#include "cycsch/sring.hpp"

namespace cycsch {

/// Cyc(K, R): the scheme on R whose basis relations are
/// {(x,y) : y - x in rK} over K-orbit representatives r.
struct CyclotomicScheme {
    RingPtr ring;
    UnitSubgroup k;
    CoherentConfiguration scheme;
    std::vector<int> orbit_rep;  // element -> smallest element of its K-orbit

    int color_of_difference(int r) const;  // color of the relation containing difference r
};

/// Builds Cyc(K, R); verifies the scheme axioms and Gamma(K,R)-invariance.
CyclotomicScheme build_cyc(const UnitSubgroup& k);

/// E(I): same-coset-of-I equivalence; asserts it is a union of colors.
Equivalence ideal_equivalence(const CyclotomicScheme& c, const Ideal& i);

/// Quotient modulo E(I) equals Cyc(pi_I(K), R/I); requires local R and
/// I inside the radical.
bool factor_check(const CyclotomicScheme& c, const Ideal& i);

/// Projects K through a quotient map.
UnitSubgroup project_subgroup(const QuotientMap& q, const UnitSubgroup& k);

struct MultSRing {
    SRing sring;       // over the unit-index group
    GroupPtr unit_group;
    std::vector<int> units;  // unit index -> ring element
};

/// The multiplication S-ring ((C_u)_{R^x})^{R^x_right} as an S-ring over
/// R^x. Asserts that rK (r a unit) and (1+rK) meet R^x are unions of
/// basic sets.
MultSRing multiplication_sring(const CyclotomicScheme& c, const Caps& caps = default_caps());

struct PurityReport {
    bool is_pure = false;
    std::optional<Ideal> witness_ideal;             // nonzero I with 1+I inside K
    std::optional<bool> is_strongly_pure;           // set by strong_purity
    std::vector<std::pair<int, bool>> recursion_trace;  // (ring size, pure) down the socle chain
};

/// Purity by the minimal-ideal reduction: K is impure iff some x in
/// I_0 \ {0} has 1 + Rx inside K. Local rings only.
PurityReport purity(const UnitSubgroup& k);
/// Purity by exhaustive ideal enumeration; the cross-check oracle.
bool purity_exhaustive(const UnitSubgroup& k, const Caps& caps = default_caps());
/// Recursive: pure at every level of the R -> R/I_0 chain.
PurityReport strong_purity(const UnitSubgroup& k);

enum class Verdict { normal, not_normal, not_applicable, skipped };
const char* to_string(Verdict v);

struct GaloisParams {
    long p = 0, d = 0, r = 0;
};
/// Recognizes GR(p^d, r) from the construction descriptor (Z/p^d, GR, GF,
/// POLY(q,1)); nullopt otherwise.
std::optional<GaloisParams> galois_params(const RingSpec& spec);

/// Theorem-based classification for GR(p^d,r), p odd: normal iff
/// (d = 1 and ((p,r) = (3,1) or K != R^x)) or (d > 1 and K does not
/// contain 1 + p^(d-1) R). Everything else: not_applicable.
Verdict classify_normality_theorem(const UnitSubgroup& k);

struct BruteForceResult {
    Verdict verdict = Verdict::skipped;
    std::optional<std::string> aut_order;  // exact decimal, when enumerable
    std::uint64_t agammal_order = 0;
    std::optional<Perm> witness;           // automorphism outside AGammaL_1(R)
    std::optional<PermGroup> stab01;       // Aut(C)_{0,1} when fully enumerated
    std::string note;
};

/// Normality by direct search: Aut(C) factors as Gamma(K,R) * Aut(C)_{0,1}
/// (Gamma acts regularly on the color class of (0,1)), so the scheme is
/// normal iff the two-point stabilizer lies inside AGammaL_1(R)_{0,1}.
/// Rank-2 schemes have Aut(C) = Sym(R) and are handled by order comparison.
BruteForceResult is_normal_bruteforce(const CyclotomicScheme& c, const Caps& caps = default_caps());

struct FkWitnessResult {
    Perm perm;
    bool in_aut = false;
    bool in_agammal = false;
};

/// f_k: multiply principal units by k, fix everything else (k in 1+I,
/// K + I = K). Asserts f_k is an automorphism of the scheme.
FkWitnessResult fk_witness(const CyclotomicScheme& c, const Ideal& i, int k,
                           const Caps& caps = default_caps());

struct NormalityVerdict {
    std::string ring_spec;
    std::vector<int> k_elements;
    int rank = 0;
    std::optional<bool> pure;            // local rings only
    std::optional<bool> strongly_pure;   // local rings only
    Verdict theorem = Verdict::not_applicable;
    Verdict bruteforce = Verdict::skipped;
    std::optional<std::string> aut_order;
    std::uint64_t agammal_order = 0;
    std::optional<std::vector<int>> witness;  // image array
    bool consistent = true;
};

/// Full classification pipeline for one (R, K) pair.
NormalityVerdict classify(const UnitSubgroup& k, const Caps& caps = default_caps());

std::string verdict_to_json(const NormalityVerdict& v);
std::string verdict_to_csv_row(const NormalityVerdict& v);
inline const char* verdict_csv_header() {
    return "ring,K,rank,pure,strongly_pure,theorem,bruteforce,aut_order,agammal_order,consistent";
}

struct ProductCheckReport {
    bool stabilizer_equal = false;
    bool normality_consistent = false;
    std::string details;
    bool pass() const { return stabilizer_equal && normality_consistent; }
};

/// Two-point stabilizer product formula Aut(C)_{0,1} = prod_i Aut(C_i)_{0,1}
/// over the local factors, plus the normality corollary.
ProductCheckReport stabilizer_product_check(const RingPtr& ring, const UnitSubgroup& k,
                                            const Caps& caps = default_caps());

/// Exact decimal string for n!.
std::string factorial_string(int n);

}  // namespace cycsch
