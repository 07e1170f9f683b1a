#include "cycsch/affine.hpp"

#include <algorithm>
#include <set>

namespace cycsch {

UnitSubgroup::UnitSubgroup(RingPtr ring, std::vector<int> elements)
    : ring_(std::move(ring)), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    require(!elems_.empty(), errc::invalid, "empty subgroup");
    for (int x : elems_)
        require(ring_->is_unit(x), errc::invalid,
                "subgroup element " + ring_->element_name(x) + " is not a unit");
    require(contains(ring_->one()), errc::invalid, "subgroup must contain 1");
    for (int x : elems_)
        for (int y : elems_)
            require(contains(ring_->mul(x, y)), errc::invalid,
                    "set is not multiplicatively closed");
}

UnitSubgroup UnitSubgroup::trivial(RingPtr ring) {
    int one = ring->one();
    return UnitSubgroup(std::move(ring), {one});
}

UnitSubgroup UnitSubgroup::full(RingPtr ring) {
    std::vector<int> units = ring->structure().units;
    return UnitSubgroup(std::move(ring), std::move(units));
}

UnitSubgroup UnitSubgroup::generated(RingPtr ring, std::span<const int> gens) {
    std::set<int> closure{ring->one()};
    std::vector<int> frontier(closure.begin(), closure.end());
    for (int g : gens)
        require(ring->is_unit(g), errc::invalid, "generator is not a unit");
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gens) {
                int y = ring->mul(x, g);
                if (closure.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return UnitSubgroup(std::move(ring), {closure.begin(), closure.end()});
}

bool UnitSubgroup::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool UnitSubgroup::contains_set(std::span<const int> xs) const {
    for (int x : xs)
        if (!contains(x)) return false;
    return true;
}

Perm AffineSemilinearMap::as_perm(const FiniteRing& ring) const {
    std::vector<Point> img(static_cast<std::size_t>(ring.size()));
    for (int x = 0; x < ring.size(); ++x)
        img[static_cast<std::size_t>(x)] = static_cast<Point>(ring.add(ring.mul(a, sigma(x)), b));
    return Perm(std::move(img));
}

PermGroup gamma_group(const UnitSubgroup& a, std::span<const int> b) {
    const FiniteRing& ring = *a.ring();
    std::set<int> bset(b.begin(), b.end());
    for (int k : a.elements())
        for (int x : b)
            require(bset.count(ring.mul(k, x)), errc::invalid, "B is not A-invariant");
    std::vector<Perm> elems;
    elems.reserve(a.order() * bset.size());
    for (int k : a.elements())
        for (int x : bset) {
            std::vector<Point> img(static_cast<std::size_t>(ring.size()));
            for (int v = 0; v < ring.size(); ++v)
                img[static_cast<std::size_t>(v)] = static_cast<Point>(ring.add(ring.mul(k, v), x));
            elems.push_back(Perm(std::move(img)));
        }
    PermGroup g = PermGroup::from_elements(ring.size(), std::move(elems));
    require(g.order() == a.order() * bset.size(), errc::internal,
            "gamma group elements are not distinct");
    return g;
}

PermGroup gamma_group_full(const UnitSubgroup& k) {
    std::vector<int> all(static_cast<std::size_t>(k.ring()->size()));
    for (int i = 0; i < k.ring()->size(); ++i) all[static_cast<std::size_t>(i)] = i;
    return gamma_group(k, all);
}

PermGroup affine_group(const RingPtr& ring) {
    return gamma_group_full(UnitSubgroup::full(ring));
}

PermGroup affine_semilinear_group(const RingPtr& ring, const Caps& caps) {
    PermGroup auts = ring_automorphisms(ring, caps);
    const auto& units = ring->structure().units;
    std::size_t triples = units.size() * static_cast<std::size_t>(ring->size()) * auts.order();
    require(triples <= caps.group_elements, errc::cap, "AGammaL_1 exceeds element cap");
    std::vector<Perm> elems;
    elems.reserve(triples);
    for (const Perm& sigma : auts.elements())
        for (int a : units)
            for (int b = 0; b < ring->size(); ++b)
                elems.push_back(AffineSemilinearMap{a, b, sigma}.as_perm(*ring));
    PermGroup g = PermGroup::from_elements(ring->size(), std::move(elems));
    require(g.order() == triples, errc::internal, "AGammaL_1 triples are not distinct");
    return g;
}

std::vector<UnitSubgroup> enumerate_unit_subgroups(const RingPtr& ring, const Caps& caps) {
    const auto& units = ring->structure().units;
    require(static_cast<int>(units.size()) <= caps.unit_group,
            errc::cap, "unit group above subgroup-sweep cap");
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial{ring->one()};
    seen.insert(trivial);
    queue.push_back(trivial);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> current = queue[head];
        for (int g : units) {
            if (std::binary_search(current.begin(), current.end(), g)) continue;
            std::vector<int> gens = current;
            gens.push_back(g);
            UnitSubgroup ext = UnitSubgroup::generated(ring, gens);
            if (seen.insert(ext.elements()).second) queue.push_back(ext.elements());
        }
    }
    std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<UnitSubgroup> out;
    out.reserve(sorted.size());
    for (auto& elems : sorted) out.push_back(UnitSubgroup(ring, std::move(elems)));
    return out;
}

}  // namespace cycsch
