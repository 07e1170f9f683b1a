#pragma once

#include <span>
#include <vector>

#include "cycsch/perm.hpp"
#include "cycsch/ring.hpp"

namespace cycsch {

/// A subgroup K of R^x, stored as a sorted element set. Construction
/// verifies multiplicative closure.
class UnitSubgroup {
public:
    UnitSubgroup(RingPtr ring, std::vector<int> elements);
    static UnitSubgroup trivial(RingPtr ring);
    static UnitSubgroup full(RingPtr ring);
    static UnitSubgroup generated(RingPtr ring, std::span<const int> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<int>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }
    bool contains(int x) const;
    bool contains_set(std::span<const int> xs) const;

private:
    RingPtr ring_;
    std::vector<int> elems_;
};

/// The map x -> a*x^sigma + b on a ring, with a a unit and sigma a ring
/// automorphism given as a permutation.
struct AffineSemilinearMap {
    int a = 0;
    int b = 0;
    Perm sigma;
    Perm as_perm(const FiniteRing& ring) const;
};

/// Gamma(A, B) = {x -> a*x + b : a in A, b in B} for an A-invariant
/// additive subgroup B. Order |A|*|B|.
PermGroup gamma_group(const UnitSubgroup& a, std::span<const int> b);

/// Gamma(K, R): all x -> k*x + b over k in K, b in R.
PermGroup gamma_group_full(const UnitSubgroup& k);

/// AGL_1(R): x -> a*x + b over all units a.
PermGroup affine_group(const RingPtr& ring);

/// AGammaL_1(R): x -> a*x^sigma + b over units a, elements b, and ring
/// automorphisms sigma. Distinct triples give distinct maps; this is
/// asserted and deduplication applied regardless.
PermGroup affine_semilinear_group(const RingPtr& ring, const Caps& caps = default_caps());

/// All subgroups of the abelian group R^x, sorted by (order, elements).
std::vector<UnitSubgroup> enumerate_unit_subgroups(const RingPtr& ring,
                                                   const Caps& caps = default_caps());

}  // namespace cycsch
