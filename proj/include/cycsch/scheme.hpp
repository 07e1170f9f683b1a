#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cycsch/common.hpp"
#include "cycsch/perm.hpp"

namespace cycsch {

/// A coherent configuration: a color matrix on V x V in canonical form
/// (diagonal colors first, then by first row-major occurrence). Two equal
/// partitions of V x V always produce identical matrices.
class CoherentConfiguration {
public:
    /// Canonicalizes an arbitrary color matrix. Does not verify coherence.
    static CoherentConfiguration from_colors(int degree, std::vector<int> colors);
    static CoherentConfiguration from_raw(const RawColoring& raw);

    int degree() const { return n_; }
    int rank() const { return rank_; }
    int color(int u, int v) const { return colors_[static_cast<std::size_t>(u) * n_ + v]; }
    const std::vector<int>& colors() const { return colors_; }

    bool is_diagonal_color(int c) const { return diag_[static_cast<std::size_t>(c)]; }
    /// Point sets of the diagonal classes, indexed by diagonal color order.
    const std::vector<std::vector<int>>& diagonal_fibers() const { return fibers_; }
    int diagonal_color_of(int v) const { return color(v, v); }

    /// `first line "n k", then n rows of color ids` -- the dump format.
    std::string dump() const;

    bool operator==(const CoherentConfiguration& other) const {
        return n_ == other.n_ && colors_ == other.colors_;
    }

    /// True if {(u,v) : in_relation(u,v)} is a union of color classes.
    bool is_relation(const std::function<bool(int, int)>& in_relation) const;

    /// True if this partition refines `coarser` (every color lies inside one
    /// coarser color), i.e. coarser's relations are relations of *this.
    bool refines(const CoherentConfiguration& coarser) const;

private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<int> colors_;
    std::vector<char> diag_;
    std::vector<std::vector<int>> fibers_;
};

struct AxiomReport {
    bool ok = true;
    std::string violation;
};

/// Scheme axioms: classes nonempty, transpose-closed, diagonal a union of
/// classes, intersection numbers constant. Exhaustive for degree <=
/// exhaustive_limit, deterministic sampling beyond.
AxiomReport check_scheme_axioms(const CoherentConfiguration& c, int exhaustive_limit = 256);

/// Equivalence relation given by a class id per point.
struct Equivalence {
    int degree = 0;
    std::vector<int> cls;

    int num_classes() const;
    std::vector<std::vector<int>> classes() const;  // ordered by smallest member
    static Equivalence from_classes(int degree, const std::vector<std::vector<int>>& classes);
};

/// Coherent (2-dim Weisfeiler-Leman) closure of labelled seed matrices:
/// the coarsest coherent refinement in which every seed value class is a
/// union of colors. Each seed is an n x n integer matrix.
CoherentConfiguration wl_closure(int degree, std::span<const std::vector<int>> seeds);

/// Closure of a relation list given as 0/1 matrices.
CoherentConfiguration wl_closure_relations(int degree, const std::vector<std::vector<char>>& rels);

/// C_{v_1,...,v_s}: closure of C with the listed points individualized.
CoherentConfiguration point_extension(const CoherentConfiguration& c, std::span<const int> points);

/// C_E: closure of C with the class diagonals of E adjoined.
CoherentConfiguration class_extension(const CoherentConfiguration& c, const Equivalence& e);

/// Restriction to U; requires the diagonal of U to be a relation of C.
/// Points keep their relative order.
CoherentConfiguration restriction(const CoherentConfiguration& c, std::span<const int> u);

/// Quotient modulo E in E(C); classes ordered by smallest member.
CoherentConfiguration quotient_scheme(const CoherentConfiguration& c, const Equivalence& e);

/// True if E (as a pair relation) is a union of colors of C.
bool is_scheme_equivalence(const CoherentConfiguration& c, const Equivalence& e);

/// C^G: basis relations are the unions of C-colors over G-orbits on colors.
/// Every element of G must be an isomorphism of C (color-permuting).
CoherentConfiguration invariant_closure(const CoherentConfiguration& c, const PermGroup& g);

/// True if f maps every color class onto a color class.
bool is_color_isomorphism(const CoherentConfiguration& c, const Perm& f);
/// True if f fixes every color class setwise.
bool is_automorphism(const CoherentConfiguration& c, const Perm& f);

/// Individualization-style backtracking over color-preserving bijections.
/// Visits every automorphism exactly once in a deterministic order; the
/// callback returns false to stop the search.
void automorphism_search(const CoherentConfiguration& c,
                         const std::function<bool(const Perm&)>& visit);

/// The full automorphism group as an explicit PermGroup; errors on caps.
PermGroup automorphism_group(const CoherentConfiguration& c, const Caps& caps = default_caps());

/// Induced permutation group on the classes of an invariant equivalence.
PermGroup induced_on_classes(const PermGroup& g, const Equivalence& e);
/// Induced group on an invariant point subset (point order preserved).
PermGroup induced_on_subset(const PermGroup& g, std::span<const int> u);

}  // namespace cycsch
