#include "cycsch/scheme.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cycsch {

CoherentConfiguration CoherentConfiguration::from_colors(int degree, std::vector<int> colors) {
    const std::size_t n = static_cast<std::size_t>(degree);
    require(colors.size() == n * n, errc::invalid, "color matrix size mismatch");

    // canonical renumbering: diagonal colors first, then by first
    // row-major occurrence
    std::map<int, int> first_diag, first_off;
    int pos = 0;
    for (int u = 0; u < degree; ++u)
        for (int v = 0; v < degree; ++v, ++pos) {
            int c = colors[static_cast<std::size_t>(pos)];
            if (u == v) {
                if (!first_diag.count(c)) first_diag[c] = pos;
            } else if (!first_off.count(c)) {
                first_off[c] = pos;
            }
        }
    std::vector<std::pair<int, int>> order;  // (first occurrence, old color)
    for (auto& [c, at] : first_diag) order.push_back({at, c});
    std::sort(order.begin(), order.end());
    std::size_t num_diag = order.size();
    std::vector<std::pair<int, int>> off;
    for (auto& [c, at] : first_off)
        if (!first_diag.count(c)) off.push_back({at, c});
    std::sort(off.begin(), off.end());
    order.insert(order.end(), off.begin(), off.end());

    std::map<int, int> renumber;
    for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i].second] = static_cast<int>(i);

    CoherentConfiguration out;
    out.n_ = degree;
    out.rank_ = static_cast<int>(order.size());
    out.colors_.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i) out.colors_[i] = renumber.at(colors[i]);
    out.diag_.assign(static_cast<std::size_t>(out.rank_), 0);
    for (std::size_t i = 0; i < num_diag; ++i) out.diag_[i] = 1;
    out.fibers_.resize(num_diag);
    for (int v = 0; v < degree; ++v) out.fibers_[static_cast<std::size_t>(out.color(v, v))].push_back(v);
    return out;
}

CoherentConfiguration CoherentConfiguration::from_raw(const RawColoring& raw) {
    return from_colors(raw.degree, raw.color);
}

std::string CoherentConfiguration::dump() const {
    std::string s = std::to_string(n_) + " " + std::to_string(rank_) + "\n";
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            if (v) s += " ";
            s += std::to_string(color(u, v));
        }
        s += "\n";
    }
    return s;
}

bool CoherentConfiguration::is_relation(const std::function<bool(int, int)>& in_relation) const {
    std::vector<char> hit(static_cast<std::size_t>(rank_), 0), miss(static_cast<std::size_t>(rank_), 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) {
            if (in_relation(u, v))
                hit[static_cast<std::size_t>(color(u, v))] = 1;
            else
                miss[static_cast<std::size_t>(color(u, v))] = 1;
        }
    for (int c = 0; c < rank_; ++c)
        if (hit[static_cast<std::size_t>(c)] && miss[static_cast<std::size_t>(c)]) return false;
    return true;
}

bool CoherentConfiguration::refines(const CoherentConfiguration& coarser) const {
    require(n_ == coarser.n_, errc::invalid, "degree mismatch");
    std::vector<int> image(static_cast<std::size_t>(rank_), -1);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) {
            int mine = color(u, v);
            int theirs = coarser.color(u, v);
            int& slot = image[static_cast<std::size_t>(mine)];
            if (slot < 0)
                slot = theirs;
            else if (slot != theirs)
                return false;
        }
    return true;
}

AxiomReport check_scheme_axioms(const CoherentConfiguration& c, int exhaustive_limit) {
    const int n = c.degree();
    const int k = c.rank();
    AxiomReport rep;
    auto violate = [&](std::string msg) {
        rep.ok = false;
        rep.violation = std::move(msg);
        return rep;
    };

    std::vector<char> used(static_cast<std::size_t>(k), 0);
    std::vector<char> on_diag(static_cast<std::size_t>(k), 0), off_diag(static_cast<std::size_t>(k), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int col = c.color(u, v);
            if (col < 0 || col >= k) return violate("color id out of range");
            used[static_cast<std::size_t>(col)] = 1;
            (u == v ? on_diag : off_diag)[static_cast<std::size_t>(col)] = 1;
        }
    for (int col = 0; col < k; ++col) {
        if (!used[static_cast<std::size_t>(col)])
            return violate("color " + std::to_string(col) + " unused");
        if (on_diag[static_cast<std::size_t>(col)] && off_diag[static_cast<std::size_t>(col)])
            return violate("color " + std::to_string(col) + " mixes diagonal and off-diagonal pairs");
    }

    // transpose closure: the transpose of a class is a single class
    std::vector<int> transpose(static_cast<std::size_t>(k), -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int col = c.color(u, v), tcol = c.color(v, u);
            int& slot = transpose[static_cast<std::size_t>(col)];
            if (slot < 0)
                slot = tcol;
            else if (slot != tcol)
                return violate("color " + std::to_string(col) + " not transpose-consistent");
        }

    // intersection numbers: the signature of (u,w) depends only on its color
    std::vector<std::vector<int>> expected(static_cast<std::size_t>(k));
    std::vector<int> sig(static_cast<std::size_t>(k) * k);
    auto signature_at = [&](int u, int w) {
        std::fill(sig.begin(), sig.end(), 0);
        for (int v = 0; v < n; ++v)
            ++sig[static_cast<std::size_t>(c.color(u, v)) * k + c.color(v, w)];
        return sig;
    };
    auto check_pair = [&](int u, int w) -> bool {
        int col = c.color(u, w);
        const auto& s = signature_at(u, w);
        auto& exp = expected[static_cast<std::size_t>(col)];
        if (exp.empty()) {
            exp = s;
            return true;
        }
        return exp == s;
    };
    if (n <= exhaustive_limit) {
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w)
                if (!check_pair(u, w))
                    return violate("intersection numbers differ inside color " +
                                   std::to_string(c.color(u, w)) + " at pair (" + std::to_string(u) +
                                   "," + std::to_string(w) + ")");
    } else {
        std::uint64_t state = 0x2545f4914f6cdd1dull;
        auto next = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        // one exhaustive row plus a deterministic sample
        for (int w = 0; w < n; ++w)
            if (!check_pair(0, w)) return violate("intersection numbers differ (sampled)");
        for (int i = 0; i < 200000; ++i) {
            int u = static_cast<int>(next() % static_cast<std::uint64_t>(n));
            int w = static_cast<int>(next() % static_cast<std::uint64_t>(n));
            if (!check_pair(u, w)) return violate("intersection numbers differ (sampled)");
        }
    }
    return rep;
}

int Equivalence::num_classes() const {
    int m = 0;
    for (int c : cls) m = std::max(m, c + 1);
    return m;
}

std::vector<std::vector<int>> Equivalence::classes() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(num_classes()));
    for (int v = 0; v < degree; ++v) out[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])].push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Equivalence Equivalence::from_classes(int degree, const std::vector<std::vector<int>>& classes) {
    Equivalence e;
    e.degree = degree;
    e.cls.assign(static_cast<std::size_t>(degree), -1);
    std::vector<std::vector<int>> sorted = classes;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (int v : sorted[i]) {
            require(v >= 0 && v < degree && e.cls[static_cast<std::size_t>(v)] < 0, errc::invalid,
                    "classes do not partition the point set");
            e.cls[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    for (int v = 0; v < degree; ++v)
        require(e.cls[static_cast<std::size_t>(v)] >= 0, errc::invalid, "point missing from classes");
    return e;
}

namespace {

// One refinement pass: recolor every pair by (its color, the sorted multiset
// of (color(u,w), color(w,v)) over w). Exact fingerprints, no hashing.
std::vector<int> wl_refine_rounds(int n, std::vector<int> color, int& num_colors) {
    const std::size_t nn = static_cast<std::size_t>(n);
    for (;;) {
        const long long k = num_colors;
        std::map<std::vector<long long>, int> ids;
        std::vector<int> next(nn * nn);
        std::vector<long long> fp;
        fp.reserve(nn + 1);
        // first pass: collect fingerprints in deterministic (sorted) order
        std::vector<std::vector<long long>> fps(nn * nn);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                fp.clear();
                fp.push_back(color[static_cast<std::size_t>(u) * nn + v]);
                for (int w = 0; w < n; ++w)
                    fp.push_back(color[static_cast<std::size_t>(u) * nn + w] * k +
                                 color[static_cast<std::size_t>(w) * nn + v]);
                std::sort(fp.begin() + 1, fp.end());
                fps[static_cast<std::size_t>(u) * nn + v] = fp;
                ids.emplace(fp, 0);
            }
        int fresh = 0;
        for (auto& [key, id] : ids) id = fresh++;
        for (std::size_t i = 0; i < nn * nn; ++i) next[i] = ids.at(fps[i]);
        if (fresh == k) return color;  // refinement only splits, so stable
        color = std::move(next);
        num_colors = fresh;
    }
}

}  // namespace

CoherentConfiguration wl_closure(int degree, std::span<const std::vector<int>> seeds) {
    require(degree >= 1, errc::invalid, "empty point set");
    const std::size_t nn = static_cast<std::size_t>(degree);
    for (const auto& s : seeds)
        require(s.size() == nn * nn, errc::invalid, "seed matrix size mismatch");

    // initial colors: equality pattern plus each seed's value at (u,v) and (v,u)
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> fps(nn * nn);
    for (int u = 0; u < degree; ++u)
        for (int v = 0; v < degree; ++v) {
            std::vector<int> fp;
            fp.reserve(2 * seeds.size() + 1);
            fp.push_back(u == v ? 1 : 0);
            for (const auto& s : seeds) {
                fp.push_back(s[static_cast<std::size_t>(u) * nn + v]);
                fp.push_back(s[static_cast<std::size_t>(v) * nn + u]);
            }
            fps[static_cast<std::size_t>(u) * nn + v] = fp;
            ids.emplace(std::move(fp), 0);
        }
    int fresh = 0;
    for (auto& [key, id] : ids) id = fresh++;
    std::vector<int> color(nn * nn);
    for (std::size_t i = 0; i < nn * nn; ++i) color[i] = ids.at(fps[i]);

    int num_colors = fresh;
    color = wl_refine_rounds(degree, std::move(color), num_colors);
    CoherentConfiguration out = CoherentConfiguration::from_colors(degree, std::move(color));
    AxiomReport rep = check_scheme_axioms(out);
    require(rep.ok, errc::internal, "WL closure failed the scheme axioms: " + rep.violation);
    return out;
}

CoherentConfiguration wl_closure_relations(int degree, const std::vector<std::vector<char>>& rels) {
    std::vector<std::vector<int>> seeds;
    seeds.reserve(rels.size());
    for (const auto& r : rels) seeds.push_back(std::vector<int>(r.begin(), r.end()));
    return wl_closure(degree, seeds);
}

CoherentConfiguration point_extension(const CoherentConfiguration& c, std::span<const int> points) {
    if (points.empty()) return c;
    const int n = c.degree();
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<int> marks(nn * nn, 0);
    int tag = 1;
    for (int v : points) {
        require(v >= 0 && v < n, errc::invalid, "extension point out of range");
        marks[static_cast<std::size_t>(v) * nn + v] = tag++;
    }
    std::vector<std::vector<int>> seeds{c.colors(), std::move(marks)};
    return wl_closure(n, seeds);
}

CoherentConfiguration class_extension(const CoherentConfiguration& c, const Equivalence& e) {
    require(e.degree == c.degree(), errc::invalid, "degree mismatch");
    const int n = c.degree();
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<int> marks(nn * nn, -1);
    for (int v = 0; v < n; ++v) marks[static_cast<std::size_t>(v) * nn + v] = e.cls[static_cast<std::size_t>(v)];
    std::vector<std::vector<int>> seeds{c.colors(), std::move(marks)};
    return wl_closure(n, seeds);
}

CoherentConfiguration restriction(const CoherentConfiguration& c, std::span<const int> u) {
    const int n = c.degree();
    std::vector<char> in_u(static_cast<std::size_t>(n), 0);
    for (int v : u) {
        require(v >= 0 && v < n, errc::invalid, "restriction point out of range");
        in_u[static_cast<std::size_t>(v)] = 1;
    }
    require(c.is_relation([&](int x, int y) {
                return x == y && in_u[static_cast<std::size_t>(x)];
            }),
            errc::invalid, "diagonal of U is not a relation of the scheme");
    const int m = static_cast<int>(u.size());
    std::vector<int> colors(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            colors[static_cast<std::size_t>(i) * m + j] = c.color(u[static_cast<std::size_t>(i)],
                                                                  u[static_cast<std::size_t>(j)]);
    CoherentConfiguration out = CoherentConfiguration::from_colors(m, std::move(colors));
    AxiomReport rep = check_scheme_axioms(out);
    require(rep.ok, errc::internal, "restriction failed the scheme axioms: " + rep.violation);
    return out;
}

bool is_scheme_equivalence(const CoherentConfiguration& c, const Equivalence& e) {
    require(e.degree == c.degree(), errc::invalid, "degree mismatch");
    return c.is_relation([&](int x, int y) {
        return e.cls[static_cast<std::size_t>(x)] == e.cls[static_cast<std::size_t>(y)];
    });
}

CoherentConfiguration quotient_scheme(const CoherentConfiguration& c, const Equivalence& e) {
    require(is_scheme_equivalence(c, e), errc::invalid, "E is not a relation of the scheme");
    auto classes = e.classes();
    const int m = static_cast<int>(classes.size());
    // color of (X, Y): the set of C-colors meeting X x Y
    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> cell(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::set<int>& s = cell[static_cast<std::size_t>(a) * m + b];
            for (int x : classes[static_cast<std::size_t>(a)])
                for (int y : classes[static_cast<std::size_t>(b)]) s.insert(c.color(x, y));
            ids.emplace(s, 0);
        }
    int fresh = 0;
    for (auto& [key, id] : ids) id = fresh++;
    std::vector<int> colors(static_cast<std::size_t>(m) * m);
    for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = ids.at(cell[i]);
    CoherentConfiguration out = CoherentConfiguration::from_colors(m, std::move(colors));
    AxiomReport rep = check_scheme_axioms(out);
    require(rep.ok, errc::internal, "quotient failed the scheme axioms: " + rep.violation);
    return out;
}

bool is_color_isomorphism(const CoherentConfiguration& c, const Perm& f) {
    if (f.degree() != c.degree()) return false;
    std::vector<int> image(static_cast<std::size_t>(c.rank()), -1);
    for (int u = 0; u < c.degree(); ++u)
        for (int v = 0; v < c.degree(); ++v) {
            int& slot = image[static_cast<std::size_t>(c.color(u, v))];
            int target = c.color(f(u), f(v));
            if (slot < 0)
                slot = target;
            else if (slot != target)
                return false;
        }
    return true;
}

bool is_automorphism(const CoherentConfiguration& c, const Perm& f) {
    if (f.degree() != c.degree()) return false;
    for (int u = 0; u < c.degree(); ++u)
        for (int v = 0; v < c.degree(); ++v)
            if (c.color(f(u), f(v)) != c.color(u, v)) return false;
    return true;
}

CoherentConfiguration invariant_closure(const CoherentConfiguration& c, const PermGroup& g) {
    require(g.degree() == c.degree(), errc::invalid, "degree mismatch");
    const int k = c.rank();
    // union-find over colors driven by the induced color action
    std::vector<int> parent(static_cast<std::size_t>(k));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (const Perm& f : g.elements()) {
        require(is_color_isomorphism(c, f), errc::invalid,
                "group element is not an isomorphism of the scheme");
        for (int u = 0; u < c.degree(); ++u)
            for (int v = 0; v < c.degree(); ++v) unite(c.color(u, v), c.color(f(u), f(v)));
    }
    std::vector<int> colors(c.colors());
    for (int& col : colors) col = find(col);
    CoherentConfiguration out = CoherentConfiguration::from_colors(c.degree(), std::move(colors));
    AxiomReport rep = check_scheme_axioms(out);
    require(rep.ok, errc::internal, "invariant closure failed the scheme axioms: " + rep.violation);
    return out;
}

void automorphism_search(const CoherentConfiguration& c,
                         const std::function<bool(const Perm&)>& visit) {
    const int n = c.degree();

    // point order: forced (singleton-fiber) points first, then fibers from
    // largest to smallest, lowest index first inside a fiber
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    auto fiber_size = [&](int v) {
        return c.diagonal_fibers()[static_cast<std::size_t>(c.diagonal_color_of(v))].size();
    };
    for (int v = 0; v < n; ++v)
        if (fiber_size(v) == 1) order.push_back(v);
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (fiber_size(v) > 1) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return fiber_size(a) > fiber_size(b); });
    order.insert(order.end(), rest.begin(), rest.end());

    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    bool stop = false;

    std::function<void(std::size_t)> dfs = [&](std::size_t level) {
        if (stop) return;
        if (level == order.size()) {
            std::vector<Point> pts(img.begin(), img.end());
            if (!visit(Perm(std::move(pts)))) stop = true;
            return;
        }
        const int v = order[level];
        const int want = c.diagonal_color_of(v);
        for (int w = 0; w < n && !stop; ++w) {
            if (used[static_cast<std::size_t>(w)] || c.diagonal_color_of(w) != want) continue;
            bool ok = true;
            for (std::size_t j = 0; j < level; ++j) {
                const int u = order[j];
                const int fu = img[static_cast<std::size_t>(u)];
                if (c.color(v, u) != c.color(w, fu) || c.color(u, v) != c.color(fu, w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            img[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            dfs(level + 1);
            img[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    dfs(0);
}

PermGroup automorphism_group(const CoherentConfiguration& c, const Caps& caps) {
    require(c.degree() <= caps.aut_degree, errc::cap, "scheme degree above automorphism cap");
    std::vector<Perm> found;
    automorphism_search(c, [&](const Perm& p) {
        require(found.size() < caps.group_elements, errc::cap,
                "automorphism group exceeds element cap");
        found.push_back(p);
        return true;
    });
    // re-verify color preservation on everything returned
    for (const Perm& p : found)
        require(is_automorphism(c, p), errc::internal, "search returned a non-automorphism");
    return PermGroup::from_elements(c.degree(), std::move(found));
}

PermGroup induced_on_classes(const PermGroup& g, const Equivalence& e) {
    require(g.degree() == e.degree, errc::invalid, "degree mismatch");
    auto classes = e.classes();
    const int m = static_cast<int>(classes.size());
    std::vector<int> class_of(static_cast<std::size_t>(e.degree));
    for (int i = 0; i < m; ++i)
        for (int v : classes[static_cast<std::size_t>(i)]) class_of[static_cast<std::size_t>(v)] = i;
    std::vector<Perm> elems;
    for (const Perm& p : g.elements()) {
        std::vector<Point> img(static_cast<std::size_t>(m), Point{0});
        std::vector<char> set(static_cast<std::size_t>(m), 0);
        bool valid = true;
        for (int v = 0; v < e.degree && valid; ++v) {
            int a = class_of[static_cast<std::size_t>(v)];
            int b = class_of[static_cast<std::size_t>(p(v))];
            if (set[static_cast<std::size_t>(a)] && img[static_cast<std::size_t>(a)] != b)
                valid = false;
            img[static_cast<std::size_t>(a)] = static_cast<Point>(b);
            set[static_cast<std::size_t>(a)] = 1;
        }
        require(valid, errc::invalid, "group does not preserve the equivalence");
        elems.push_back(Perm(std::move(img)));
    }
    return PermGroup::from_elements(m, std::move(elems));
}

PermGroup induced_on_subset(const PermGroup& g, std::span<const int> u) {
    const int m = static_cast<int>(u.size());
    std::vector<int> pos(static_cast<std::size_t>(g.degree()), -1);
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(u[static_cast<std::size_t>(i)])] = i;
    std::vector<Perm> elems;
    for (const Perm& p : g.elements()) {
        std::vector<Point> img(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            int target = pos[static_cast<std::size_t>(p(u[static_cast<std::size_t>(i)]))];
            require(target >= 0, errc::invalid, "group does not preserve the subset");
            img[static_cast<std::size_t>(i)] = static_cast<Point>(target);
        }
        elems.push_back(Perm(std::move(img)));
    }
    return PermGroup::from_elements(m, std::move(elems));
}

}  // namespace cycsch
