#include "cycsch/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cycsch {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point p : img_) {
        require(p < img_.size() && !seen[p], errc::invalid, "image array is not a permutation");
        seen[p] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<Point> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), Point{0});
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::then(const Perm& g) const {
    require(degree() == g.degree(), errc::invalid, "degree mismatch in composition");
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = g.img_[img_[x]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<Point>(x);
    return r;
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != x) return false;
    return true;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elems, bool verify) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    PermGroup g;
    g.degree_ = degree;
    g.elems_ = std::move(elems);
    require(!g.elems_.empty(), errc::invalid, "empty element list");
    for (const Perm& p : g.elems_)
        require(p.degree() == degree, errc::invalid, "degree mismatch in element list");
    if (verify) {
        require(g.contains(Perm::identity(degree)), errc::invalid, "identity missing");
        for (const Perm& a : g.elems_) {
            require(g.contains(a.inverse()), errc::invalid, "not closed under inverse");
            for (const Perm& b : g.elems_)
                require(g.contains(a.then(b)), errc::invalid, "not closed under composition");
        }
    }
    return g;
}

PermGroup PermGroup::generated(int degree, std::span<const Perm> gens, std::size_t cap) {
    std::set<Perm> closure;
    closure.insert(Perm::identity(degree));
    std::vector<Perm> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& f : frontier) {
            for (const Perm& g : gens) {
                Perm h = f.then(g);
                if (closure.insert(h).second) {
                    require(closure.size() <= cap, errc::cap, "permutation group exceeds element cap");
                    next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    PermGroup g;
    g.degree_ = degree;
    g.elems_.assign(closure.begin(), closure.end());
    return g;
}

PermGroup PermGroup::trivial(int n) {
    PermGroup g;
    g.degree_ = n;
    g.elems_ = {Perm::identity(n)};
    return g;
}

PermGroup PermGroup::symmetric(int n, std::size_t cap) {
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) {
        fact *= static_cast<std::size_t>(i);
        require(fact <= cap, errc::cap, "symmetric group exceeds element cap");
    }
    std::vector<Point> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<Perm> elems;
    elems.reserve(fact);
    do {
        elems.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return from_elements(n, std::move(elems));
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermGroup::contains_group(const PermGroup& sub) const {
    if (sub.degree_ != degree_) return false;
    for (const Perm& p : sub.elems_)
        if (!contains(p)) return false;
    return true;
}

bool PermGroup::equals(const PermGroup& other) const {
    return degree_ == other.degree_ && elems_ == other.elems_;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const int> points) const {
    std::vector<Perm> kept;
    for (const Perm& p : elems_) {
        bool fixes = true;
        for (int v : points)
            if (p(v) != v) {
                fixes = false;
                break;
            }
        if (fixes) kept.push_back(p);
    }
    return from_elements(degree_, std::move(kept));
}

std::vector<Perm> PermGroup::small_generating_set() const {
    std::vector<Perm> gens;
    std::set<Perm> span;
    span.insert(Perm::identity(degree_));
    for (const Perm& p : elems_) {
        if (span.count(p)) continue;
        gens.push_back(p);
        // re-close
        std::vector<Perm> frontier(span.begin(), span.end());
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const Perm& f : frontier)
                for (const Perm& g : gens) {
                    Perm h = f.then(g);
                    if (span.insert(h).second) next.push_back(std::move(h));
                }
            frontier = std::move(next);
        }
        if (span.size() == elems_.size()) break;
    }
    return gens;
}

bool PermGroup::normalizes(const PermGroup& normal) const {
    require(degree_ == normal.degree_, errc::invalid, "degree mismatch");
    for (const Perm& g : elems_) {
        Perm gi = g.inverse();
        for (const Perm& h : normal.elems_)
            if (!normal.contains(gi.then(h).then(g))) return false;
    }
    return true;
}

std::vector<int> PermGroup::orbit(int point) const {
    std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
    std::vector<int> out;
    seen[static_cast<std::size_t>(point)] = true;
    out.push_back(point);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const Perm& g : elems_) {
            int y = g(out[i]);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> PermGroup::product_set(const PermGroup& a, const PermGroup& b) {
    require(a.degree() == b.degree(), errc::invalid, "degree mismatch");
    std::set<Perm> prod;
    for (const Perm& x : a.elements())
        for (const Perm& y : b.elements()) prod.insert(x.then(y));
    return {prod.begin(), prod.end()};
}

RawColoring two_orbits(const PermGroup& g) {
    const int n = g.degree();
    std::vector<Perm> gens = g.small_generating_set();
    if (gens.empty()) gens.push_back(Perm::identity(n));
    RawColoring out;
    out.degree = n;
    out.color.assign(static_cast<std::size_t>(n) * n, -1);
    int next = 0;
    std::vector<std::pair<int, int>> stack;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (out.color[static_cast<std::size_t>(u) * n + v] >= 0) continue;
            const int c = next++;
            out.color[static_cast<std::size_t>(u) * n + v] = c;
            stack.assign(1, {u, v});
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                for (const Perm& p : gens) {
                    int xx = p(x), yy = p(y);
                    int& slot = out.color[static_cast<std::size_t>(xx) * n + yy];
                    if (slot < 0) {
                        slot = c;
                        stack.push_back({xx, yy});
                    }
                }
            }
        }
    out.num_classes = next;
    return out;
}

}  // namespace cycsch
