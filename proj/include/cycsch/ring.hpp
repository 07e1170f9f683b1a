#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cycsch/common.hpp"
#include "cycsch/perm.hpp"

namespace cycsch {

/// Construction descriptor for a ring; `to_string` renders the CLI grammar
/// form (`Z/9`, `GR(3^2,2)`, `GF(9)`, `POLY(3,2)`, products with `*`).
struct RingSpec {
    enum class Kind { zmod, galois, trunc_poly, product, quotient, opaque };
    Kind kind = Kind::opaque;
    long p = 0, d = 0, r = 0;  // galois parameters: GR(p^d, r)
    long n = 0;                // zmod modulus / trunc_poly exponent
    long q = 0;                // trunc_poly base field size
    std::vector<RingSpec> factors;
    std::string label;  // quotient / opaque description

    std::string to_string() const;
};

/// Derived multiplicative/additive structure of a ring, computed once at
/// construction. Element sets are sorted index lists. The Teichmuller set
/// and residue field size are only meaningful when is_local.
struct RingStructure {
    std::vector<int> units;
    std::vector<int> radical;
    std::vector<int> socle;            // I_0 = {x in rad : x*rad = 0}
    std::vector<int> teichmuller;      // T = {x in R^x : x^(q-1) = 1}
    std::vector<int> principal_units;  // U = 1 + rad
    std::vector<int> socle_units;      // U_0 = 1 + I_0
    bool is_local = false;
    int residue_field_size = 0;  // q = |R/rad|, 0 when not local
    int characteristic = 0;
    std::vector<int> inverse;  // inverse[x] = x^-1 for units, -1 otherwise
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct Ideal {
    RingPtr parent;
    std::vector<int> elements;  // sorted

    bool is_zero() const { return elements.size() == 1; }
    bool contains(int x) const;
    std::size_t size() const { return elements.size(); }
};

/// Finite commutative ring with identity, given by exact operation tables
/// on elements 0..n-1. Immutable after construction; safe to share across
/// threads read-only.
class FiniteRing {
public:
    int size() const { return n_; }
    int zero() const { return zero_; }
    int one() const { return one_; }

    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int pow(int a, long e) const;           // multiplicative power, e >= 0
    int int_embed(long k) const;            // image of the integer k
    bool is_unit(int a) const { return structure_.inverse[static_cast<std::size_t>(a)] >= 0; }
    std::optional<int> inv(int a) const;

    const RingStructure& structure() const { return structure_; }
    const RingSpec& spec() const { return spec_; }
    std::string spec_string() const { return spec_.to_string(); }
    const std::string& element_name(int a) const { return names_[static_cast<std::size_t>(a)]; }
    std::optional<int> element_by_name(const std::string& name) const;

    // Product access; num_factors() == 1 for rings not built as products.
    int num_factors() const { return factors_.empty() ? 1 : static_cast<int>(factors_.size()); }
    RingPtr factor(int i) const;
    int project(int i, int x) const;     // component in factor i
    int embed_add(int i, int x) const;   // (0,..,x,..,0)
    int embed_mult(int i, int x) const;  // (1,..,x,..,1)

    friend RingPtr make_zmod(long n, const Caps& caps);
    friend RingPtr make_galois(long p, long d, long r, const Caps& caps);
    friend RingPtr make_trunc_poly(long q, long n, const Caps& caps);
    friend RingPtr make_product(std::vector<RingPtr> factors, const Caps& caps);
    friend RingPtr make_from_tables(RingSpec spec, int n, std::vector<std::uint16_t> add,
                                    std::vector<std::uint16_t> mul, std::vector<std::string> names);

private:
    FiniteRing() = default;
    void finish_init();  // neg table, structure, sanity checks

    int n_ = 0;
    int zero_ = 0, one_ = 0;
    std::vector<std::uint16_t> add_, mul_;
    std::vector<std::uint16_t> neg_;
    RingSpec spec_;
    std::vector<std::string> names_;
    RingStructure structure_;
    std::vector<RingPtr> factors_;       // nonempty only for products
    std::vector<long> factor_strides_;   // mixed-radix strides
};

RingPtr make_zmod(long n, const Caps& caps = default_caps());
RingPtr make_galois(long p, long d, long r, const Caps& caps = default_caps());
RingPtr make_trunc_poly(long q, long n, const Caps& caps = default_caps());
RingPtr make_product(std::vector<RingPtr> factors, const Caps& caps = default_caps());
RingPtr make_from_tables(RingSpec spec, int n, std::vector<std::uint16_t> add,
                         std::vector<std::uint16_t> mul, std::vector<std::string> names);

/// Exhaustive ring-axiom check for n <= exhaustive_limit, deterministic
/// sampling beyond. Returns false and fills *violation on failure.
bool verify_ring_axioms(const FiniteRing& ring, std::string* violation = nullptr,
                        int exhaustive_limit = 256);

/// Smallest ideal containing the generators.
Ideal ideal_closure(const RingPtr& ring, std::span<const int> gens);
Ideal principal_ideal(const RingPtr& ring, int x);
Ideal zero_ideal(const RingPtr& ring);

/// All ideals (R-submodules of R+), BFS over one-generator extensions.
std::vector<Ideal> enumerate_ideals(const RingPtr& ring, const Caps& caps = default_caps());
/// Minimal nonzero ideals (R itself for a field).
std::vector<Ideal> minimal_ideals(const RingPtr& ring, const Caps& caps = default_caps());

struct QuotientMap {
    RingPtr source;
    Ideal ideal;
    RingPtr target;
    std::vector<int> projection;  // source element -> target element
};

/// R/I for a proper ideal; cosets indexed by minimal representative.
QuotientMap quotient_ring(const RingPtr& ring, const Ideal& ideal);

/// All table-preserving bijections, by backtracking over images of a ring
/// generating set with full verification.
PermGroup ring_automorphisms(const RingPtr& ring, const Caps& caps = default_caps());

/// Some isomorphism a -> b, or nullopt. Table comparison up to relabeling.
std::optional<Perm> find_ring_isomorphism(const FiniteRing& a, const FiniteRing& b);

struct LocalFactor {
    RingPtr ring;
    std::vector<int> embed_add;   // factor element -> parent element, (0,..,x,..,0)
    std::vector<int> embed_mult;  // factor element -> parent element, (1,..,x,..,1)
};

/// Decomposition into local factors. Uses the stored construction when
/// available, otherwise searches for primitive idempotents.
std::vector<LocalFactor> crt_decompose(const RingPtr& ring, const Caps& caps = default_caps());

}  // namespace cycsch
