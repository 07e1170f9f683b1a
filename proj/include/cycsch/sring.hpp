#pragma once

#include <memory>
#include <span>
#include <vector>

#include "cycsch/common.hpp"
#include "cycsch/scheme.hpp"

namespace cycsch {

/// A finite abelian group on elements 0..m-1 with an exact operation table.
class AbelianGroup {
public:
    static AbelianGroup from_table(int m, std::vector<std::uint16_t> op);

    int size() const { return m_; }
    int identity() const { return id_; }
    int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * m_ + b]; }
    int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int power(int a, long e) const;  // e may be negative

    /// The regular permutation representation by right multiplications.
    PermGroup right_regular() const;
    Perm right_multiplication(int g) const;

    bool operator==(const AbelianGroup& other) const {
        return m_ == other.m_ && table_ == other.table_;
    }

private:
    int m_ = 0;
    int id_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inv_;
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

class FiniteRing;
GroupPtr additive_group(const FiniteRing& ring);
/// The unit group on indices into `units` (the sorted unit list).
GroupPtr multiplicative_group(const FiniteRing& ring);

/// All subgroups as sorted element lists, ordered by (order, elements).
std::vector<std::vector<int>> enumerate_subgroups(const AbelianGroup& g,
                                                  const Caps& caps = default_caps());
std::vector<int> subgroup_closure(const AbelianGroup& g, std::span<const int> gens);
bool is_subgroup(const AbelianGroup& g, std::span<const int> h);

/// A Schur ring over an abelian group, represented by its basic-set
/// partition: {1} is a basic set, sets are inverse-closed, and the
/// associated Cayley color matrix is coherent.
class SRing {
public:
    /// Builds from a partition; verifies the S-ring axioms, including
    /// coherence of the Cayley scheme when check_coherence.
    static SRing from_partition(GroupPtr group, std::vector<std::vector<int>> sets,
                                bool check_coherence = true);
    static SRing trivial(GroupPtr group);  // all singletons, rank |G|

    const GroupPtr& group() const { return group_; }
    int rank() const { return static_cast<int>(sets_.size()); }
    const std::vector<std::vector<int>>& basic_sets() const { return sets_; }
    int set_index_of(int x) const { return set_of_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& basic_set_of(int x) const {
        return sets_[static_cast<std::size_t>(set_index_of(x))];
    }
    bool is_trivial() const { return rank() == group_->size(); }

    /// True if the set is a union of basic sets (the empty union counts).
    bool in_star(std::span<const int> xs) const;

    bool operator==(const SRing& other) const {
        return *group_ == *other.group_ && sets_ == other.sets_;
    }

    /// Partition dump: one sorted basic set per line, sets in order.
    std::string dump() const;

private:
    GroupPtr group_;
    std::vector<std::vector<int>> sets_;  // each sorted; list sorted lexicographically
    std::vector<int> set_of_;
};

/// Cayley scheme of an S-ring: (g, h) is colored by the basic set of
/// h * g^-1.
CoherentConfiguration sring_to_cayley(const SRing& a);

/// Inverse direction; requires the right regular representation to act as
/// automorphisms of c.
SRing cayley_to_sring(const CoherentConfiguration& c, GroupPtr group);

/// H is a subgroup that is a union of basic sets.
bool is_a_subgroup(const SRing& a, std::span<const int> h);
/// All A-subgroups, ordered by (order, elements).
std::vector<std::vector<int>> a_subgroups(const SRing& a, const Caps& caps = default_caps());

/// Schur theorem on multipliers. X^(m) = {x^m} for gcd(m,|G|) = 1;
/// X^[p] = {x^p : x in X, |xH meet X| != 0 mod p} with H the p-torsion.
std::vector<int> schur_power_coprime(const SRing& a, std::span<const int> x, long m);
std::vector<int> schur_power_p(const SRing& a, std::span<const int> x, long p);
/// Asserts both statements for every basic set and every valid m and p.
void verify_schur_multipliers(const SRing& a);

/// Restriction to an A-subgroup, as an S-ring over that subgroup
/// (re-indexed along `h`).
SRing sring_restriction(const SRing& a, std::span<const int> h);

/// Smallest S-ring containing a and the given extra subsets of G; routed
/// through the WL engine on the Cayley side.
SRing sring_join(const SRing& a, const std::vector<std::vector<int>>& extra_sets);

/// Aut(A) = Aut(C)_1 where C is the Cayley scheme; explicit group on G.
PermGroup sring_automorphisms(const SRing& a, const Caps& caps = default_caps());

}  // namespace cycsch
