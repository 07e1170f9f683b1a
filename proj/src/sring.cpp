#include "cycsch/sring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cycsch/ring.hpp"

namespace cycsch {

AbelianGroup AbelianGroup::from_table(int m, std::vector<std::uint16_t> op) {
    require(m >= 1, errc::invalid, "empty group");
    require(op.size() == static_cast<std::size_t>(m) * m, errc::invalid, "table size mismatch");
    AbelianGroup g;
    g.m_ = m;
    g.table_ = std::move(op);
    // identity
    int id = -1;
    for (int e = 0; e < m && id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < m; ++a)
            if (g.op(a, e) != a) {
                ok = false;
                break;
            }
        if (ok) id = e;
    }
    require(id >= 0, errc::invalid, "no identity element");
    g.id_ = id;
    g.inv_.assign(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a) {
        int inv = -1;
        for (int b = 0; b < m; ++b)
            if (g.op(a, b) == id) {
                inv = b;
                break;
            }
        require(inv >= 0, errc::invalid, "element without inverse");
        g.inv_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(inv);
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            require(g.op(a, b) == g.op(b, a), errc::invalid, "group is not abelian");
            for (int c = 0; c < m; ++c)
                require(g.op(g.op(a, b), c) == g.op(a, g.op(b, c)), errc::invalid,
                        "group is not associative");
        }
    return g;
}

int AbelianGroup::power(int a, long e) const {
    if (e < 0) return power(inverse(a), -e);
    int result = id_;
    int base = a;
    while (e) {
        if (e & 1) result = op(result, base);
        base = op(base, base);
        e >>= 1;
    }
    return result;
}

Perm AbelianGroup::right_multiplication(int g) const {
    std::vector<Point> img(static_cast<std::size_t>(m_));
    for (int x = 0; x < m_; ++x) img[static_cast<std::size_t>(x)] = static_cast<Point>(op(x, g));
    return Perm(std::move(img));
}

PermGroup AbelianGroup::right_regular() const {
    std::vector<Perm> elems;
    elems.reserve(static_cast<std::size_t>(m_));
    for (int g = 0; g < m_; ++g) elems.push_back(right_multiplication(g));
    return PermGroup::from_elements(m_, std::move(elems));
}

GroupPtr additive_group(const FiniteRing& ring) {
    const int n = ring.size();
    std::vector<std::uint16_t> op(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            op[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(ring.add(a, b));
    return std::make_shared<AbelianGroup>(AbelianGroup::from_table(n, std::move(op)));
}

GroupPtr multiplicative_group(const FiniteRing& ring) {
    const auto& units = ring.structure().units;
    const int m = static_cast<int>(units.size());
    std::vector<int> pos(static_cast<std::size_t>(ring.size()), -1);
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(units[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint16_t> op(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            op[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>(
                pos[static_cast<std::size_t>(ring.mul(units[static_cast<std::size_t>(a)],
                                                      units[static_cast<std::size_t>(b)]))]);
    return std::make_shared<AbelianGroup>(AbelianGroup::from_table(m, std::move(op)));
}

std::vector<int> subgroup_closure(const AbelianGroup& g, std::span<const int> gens) {
    std::set<int> closure{g.identity()};
    std::vector<int> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int gen : gens) {
                int y = g.op(x, gen);
                if (closure.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

bool is_subgroup(const AbelianGroup& g, std::span<const int> h) {
    if (h.empty()) return false;
    std::set<int> set(h.begin(), h.end());
    if (!set.count(g.identity())) return false;
    for (int a : h)
        for (int b : h)
            if (!set.count(g.op(a, b))) return false;
    return true;
}

std::vector<std::vector<int>> enumerate_subgroups(const AbelianGroup& g, const Caps& caps) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial{g.identity()};
    seen.insert(trivial);
    queue.push_back(trivial);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> current = queue[head];
        for (int x = 0; x < g.size(); ++x) {
            if (std::binary_search(current.begin(), current.end(), x)) continue;
            std::vector<int> gens = current;
            gens.push_back(x);
            std::vector<int> ext = subgroup_closure(g, gens);
            if (seen.insert(ext).second) {
                require(seen.size() <= caps.ideal_count, errc::cap, "subgroup count above cap");
                queue.push_back(ext);
            }
        }
    }
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

SRing SRing::from_partition(GroupPtr group, std::vector<std::vector<int>> sets,
                            bool check_coherence) {
    SRing a;
    a.group_ = std::move(group);
    const int m = a.group_->size();
    for (auto& s : sets) {
        require(!s.empty(), errc::invalid, "empty basic set");
        std::sort(s.begin(), s.end());
    }
    std::sort(sets.begin(), sets.end());
    a.sets_ = std::move(sets);
    a.set_of_.assign(static_cast<std::size_t>(m), -1);
    for (std::size_t i = 0; i < a.sets_.size(); ++i)
        for (int x : a.sets_[i]) {
            require(x >= 0 && x < m && a.set_of_[static_cast<std::size_t>(x)] < 0, errc::invalid,
                    "basic sets do not partition the group");
            a.set_of_[static_cast<std::size_t>(x)] = static_cast<int>(i);
        }
    for (int x = 0; x < m; ++x)
        require(a.set_of_[static_cast<std::size_t>(x)] >= 0, errc::invalid,
                "basic sets do not cover the group");
    require(a.basic_set_of(a.group_->identity()).size() == 1, errc::invalid,
            "identity is not a singleton basic set");
    // inverse closure
    for (const auto& s : a.sets_) {
        std::vector<int> inv;
        inv.reserve(s.size());
        for (int x : s) inv.push_back(a.group_->inverse(x));
        std::sort(inv.begin(), inv.end());
        require(std::binary_search(a.sets_.begin(), a.sets_.end(), inv), errc::invalid,
                "basic sets are not inverse-closed");
    }
    if (check_coherence) {
        AxiomReport rep = check_scheme_axioms(sring_to_cayley(a));
        require(rep.ok, errc::invalid, "Cayley matrix is not coherent: " + rep.violation);
    }
    return a;
}

SRing SRing::trivial(GroupPtr group) {
    std::vector<std::vector<int>> sets;
    for (int x = 0; x < group->size(); ++x) sets.push_back({x});
    return from_partition(std::move(group), std::move(sets), false);
}

bool SRing::in_star(std::span<const int> xs) const {
    std::set<int> ids;
    for (int x : xs) ids.insert(set_index_of(x));
    std::size_t total = 0;
    for (int i : ids) total += sets_[static_cast<std::size_t>(i)].size();
    return total == xs.size();
}

std::string SRing::dump() const {
    std::string out;
    for (const auto& s : sets_) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(s[i]);
        }
        out += "\n";
    }
    return out;
}

CoherentConfiguration sring_to_cayley(const SRing& a) {
    const AbelianGroup& g = *a.group();
    const int m = g.size();
    std::vector<int> colors(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            colors[static_cast<std::size_t>(x) * m + y] = a.set_index_of(g.op(y, g.inverse(x)));
    return CoherentConfiguration::from_colors(m, std::move(colors));
}

SRing cayley_to_sring(const CoherentConfiguration& c, GroupPtr group) {
    require(c.degree() == group->size(), errc::invalid, "degree mismatch");
    for (int g = 0; g < group->size(); ++g)
        require(is_automorphism(c, group->right_multiplication(g)), errc::invalid,
                "scheme is not invariant under right multiplications");
    const int e = group->identity();
    std::map<int, std::vector<int>> by_color;
    for (int x = 0; x < group->size(); ++x) by_color[c.color(e, x)].push_back(x);
    std::vector<std::vector<int>> sets;
    sets.reserve(by_color.size());
    for (auto& [color, xs] : by_color) sets.push_back(std::move(xs));
    // coherence holds by construction from a verified scheme
    return SRing::from_partition(std::move(group), std::move(sets), false);
}

bool is_a_subgroup(const SRing& a, std::span<const int> h) {
    return is_subgroup(*a.group(), h) && a.in_star(h);
}

std::vector<std::vector<int>> a_subgroups(const SRing& a, const Caps& caps) {
    std::vector<std::vector<int>> out;
    for (auto& h : enumerate_subgroups(*a.group(), caps))
        if (a.in_star(h)) out.push_back(std::move(h));
    return out;
}

std::vector<int> schur_power_coprime(const SRing& a, std::span<const int> x, long m) {
    long g = a.group()->size();
    require(std::gcd(m, g) == 1, errc::invalid, "m must be coprime to |G|");
    std::set<int> out;
    for (int e : x) out.insert(a.group()->power(e, m));
    return {out.begin(), out.end()};
}

std::vector<int> schur_power_p(const SRing& a, std::span<const int> x, long p) {
    const AbelianGroup& g = *a.group();
    require(p >= 2 && g.size() % p == 0, errc::invalid, "p must be a prime dividing |G|");
    std::vector<int> torsion;
    for (int e = 0; e < g.size(); ++e)
        if (g.power(e, p) == g.identity()) torsion.push_back(e);
    std::set<int> in_x(x.begin(), x.end());
    std::set<int> out;
    for (int e : x) {
        long count = 0;
        for (int h : torsion)
            if (in_x.count(g.op(e, h))) ++count;
        if (count % p != 0) out.insert(g.power(e, p));
    }
    return {out.begin(), out.end()};
}

void verify_schur_multipliers(const SRing& a) {
    const long n = a.group()->size();
    for (const auto& x : a.basic_sets()) {
        for (long m = 1; m < n; ++m) {
            if (std::gcd(m, n) != 1) continue;
            std::vector<int> xm = schur_power_coprime(a, x, m);
            require(a.in_star(xm) && a.set_index_of(xm[0]) >= 0 &&
                        a.basic_set_of(xm[0]) == xm,
                    errc::internal, "X^(m) is not a basic set");
        }
        for (long p = 2; p <= n; ++p) {
            if (n % p != 0) continue;
            bool prime = true;
            for (long q = 2; q * q <= p; ++q)
                if (p % q == 0) prime = false;
            if (!prime) continue;
            std::vector<int> xp = schur_power_p(a, x, p);
            require(a.in_star(xp), errc::internal, "X^[p] is not a union of basic sets");
        }
    }
}

SRing sring_restriction(const SRing& a, std::span<const int> h) {
    require(is_a_subgroup(a, h), errc::invalid, "H is not an A-subgroup");
    std::vector<int> hs(h.begin(), h.end());
    std::sort(hs.begin(), hs.end());
    const int m = static_cast<int>(hs.size());
    std::vector<int> pos(static_cast<std::size_t>(a.group()->size()), -1);
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(hs[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint16_t> op(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int prod = a.group()->op(hs[static_cast<std::size_t>(i)], hs[static_cast<std::size_t>(j)]);
            op[static_cast<std::size_t>(i) * m + j] =
                static_cast<std::uint16_t>(pos[static_cast<std::size_t>(prod)]);
        }
    auto sub = std::make_shared<AbelianGroup>(AbelianGroup::from_table(m, std::move(op)));
    std::map<int, std::vector<int>> by_set;
    for (int i = 0; i < m; ++i)
        by_set[a.set_index_of(hs[static_cast<std::size_t>(i)])].push_back(i);
    std::vector<std::vector<int>> sets;
    for (auto& [id, xs] : by_set) sets.push_back(std::move(xs));
    return SRing::from_partition(std::move(sub), std::move(sets), false);
}

SRing sring_join(const SRing& a, const std::vector<std::vector<int>>& extra_sets) {
    const AbelianGroup& g = *a.group();
    const int m = g.size();
    CoherentConfiguration cayley = sring_to_cayley(a);
    std::vector<std::vector<int>> seeds{cayley.colors()};
    for (const auto& xset : extra_sets) {
        std::vector<char> in(static_cast<std::size_t>(m), 0);
        for (int x : xset) {
            require(x >= 0 && x < m, errc::invalid, "join set element out of range");
            in[static_cast<std::size_t>(x)] = 1;
        }
        // R_G(X) = {(h, xh)}
        std::vector<int> rel(static_cast<std::size_t>(m) * m, 0);
        for (int h = 0; h < m; ++h)
            for (int y = 0; y < m; ++y)
                if (in[static_cast<std::size_t>(g.op(y, g.inverse(h)))])
                    rel[static_cast<std::size_t>(h) * m + y] = 1;
        seeds.push_back(std::move(rel));
    }
    CoherentConfiguration closed = wl_closure(m, seeds);
    return cayley_to_sring(closed, a.group());
}

PermGroup sring_automorphisms(const SRing& a, const Caps& caps) {
    CoherentConfiguration c = sring_to_cayley(a);
    CoherentConfiguration fixed = point_extension(c, std::vector<int>{a.group()->identity()});
    return automorphism_group(fixed, caps);
}

}  // namespace cycsch
