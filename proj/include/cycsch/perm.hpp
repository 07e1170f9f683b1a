#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cycsch/common.hpp"

namespace cycsch {

using Point = std::uint16_t;

/// A permutation of {0,...,n-1} stored by its image array.
/// Composition is left-to-right: (f * g)(x) = g(f(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<Point> images);
    static Perm identity(int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<Point>& images() const { return img_; }

    Perm then(const Perm& g) const;  // x -> g((*this)(x))
    Perm inverse() const;
    bool is_identity() const;

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<Point> img_;
};

/// A permutation group held as its full, sorted element list. Desk scale
/// only: construction errors out beyond `cap` elements.
class PermGroup {
public:
    PermGroup() = default;

    /// Wraps an element list. With verify=true checks the group axioms
    /// (identity present, closure under composition and inverse).
    static PermGroup from_elements(int degree, std::vector<Perm> elems, bool verify = false);

    /// Closure of the generators under composition.
    static PermGroup generated(int degree, std::span<const Perm> gens,
                               std::size_t cap = default_caps().group_elements);

    static PermGroup trivial(int n);
    static PermGroup symmetric(int n, std::size_t cap = default_caps().group_elements);

    int degree() const { return degree_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<Perm>& elements() const { return elems_; }

    bool contains(const Perm& p) const;
    bool contains_group(const PermGroup& sub) const;
    bool equals(const PermGroup& other) const;

    /// Elements fixing every listed point.
    PermGroup pointwise_stabilizer(std::span<const int> points) const;

    /// A small generating set found greedily (closure growth).
    std::vector<Perm> small_generating_set() const;

    /// True if `normal` is a subgroup invariant under conjugation by *this.
    bool normalizes(const PermGroup& normal) const;

    std::vector<int> orbit(int point) const;

    /// Group product {a*b : a in A, b in B} as a sorted deduplicated set;
    /// the result is a group only if one factor normalizes the other.
    static std::vector<Perm> product_set(const PermGroup& a, const PermGroup& b);

private:
    int degree_ = 0;
    std::vector<Perm> elems_;  // sorted, unique
};

/// Partition of a point set or of V x V into classes 0..num_classes-1.
struct RawColoring {
    int degree = 0;
    int num_classes = 0;
    std::vector<int> color;  // degree*degree entries, row-major

    int at(int u, int v) const { return color[static_cast<std::size_t>(u) * degree + v]; }
};

/// Orbits of the componentwise action of G on ordered pairs.
RawColoring two_orbits(const PermGroup& g);

}  // namespace cycsch
