#include "cycsch/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cycsch {

int CyclotomicScheme::color_of_difference(int r) const {
    int rep = orbit_rep[static_cast<std::size_t>(r)];
    // color of (0, rep): difference rep
    return scheme.color(ring->zero(), rep);
}

CyclotomicScheme build_cyc(const UnitSubgroup& k) {
    const RingPtr& ring = k.ring();
    const int n = ring->size();

    // K-orbits on R; representative = smallest member
    std::vector<int> rep(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        if (rep[static_cast<std::size_t>(x)] >= 0) continue;
        std::vector<int> orbit;
        for (int u : k.elements()) orbit.push_back(ring->mul(u, x));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (int y : orbit) rep[static_cast<std::size_t>(y)] = orbit.front();
    }

    std::vector<int> colors(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            colors[static_cast<std::size_t>(x) * n + y] =
                rep[static_cast<std::size_t>(ring->sub(y, x))];

    CyclotomicScheme c{ring, k, CoherentConfiguration::from_colors(n, std::move(colors)),
                       std::move(rep)};

    AxiomReport axioms = check_scheme_axioms(c.scheme);
    require(axioms.ok, errc::internal, "Cyc(K,R) failed the scheme axioms: " + axioms.violation);
    // Gamma(K,R)-invariance: generators suffice, the group is K x R
    for (int u : k.elements()) {
        std::vector<Point> img(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = static_cast<Point>(ring->mul(u, x));
        require(is_automorphism(c.scheme, Perm(std::move(img))), errc::internal,
                "multiplication by K is not an automorphism");
    }
    for (int b = 0; b < n; ++b) {
        std::vector<Point> img(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = static_cast<Point>(ring->add(x, b));
        require(is_automorphism(c.scheme, Perm(std::move(img))), errc::internal,
                "translation is not an automorphism");
    }
    return c;
}

Equivalence ideal_equivalence(const CyclotomicScheme& c, const Ideal& i) {
    require(i.parent.get() == c.ring.get(), errc::invalid, "ideal belongs to another ring");
    const int n = c.ring->size();
    // class of x = smallest element of x + I
    std::vector<int> cls(static_cast<std::size_t>(n));
    std::map<int, int> class_ids;
    for (int x = 0; x < n; ++x) {
        int best = x;
        for (int e : i.elements) best = std::min(best, c.ring->add(x, e));
        auto [it, fresh] = class_ids.emplace(best, static_cast<int>(class_ids.size()));
        cls[static_cast<std::size_t>(x)] = it->second;
    }
    Equivalence e{n, std::move(cls)};
    require(is_scheme_equivalence(c.scheme, e), errc::internal,
            "E(I) is not a union of basis relations");
    return e;
}

UnitSubgroup project_subgroup(const QuotientMap& q, const UnitSubgroup& k) {
    std::vector<int> elems;
    for (int x : k.elements()) elems.push_back(q.projection[static_cast<std::size_t>(x)]);
    return UnitSubgroup(q.target, std::move(elems));
}

bool factor_check(const CyclotomicScheme& c, const Ideal& i) {
    const RingStructure& s = c.ring->structure();
    require(s.is_local, errc::invalid, "factor check requires a local ring");
    for (int x : i.elements)
        require(std::binary_search(s.radical.begin(), s.radical.end(), x), errc::invalid,
                "ideal is not inside the radical");
    Equivalence e = ideal_equivalence(c, i);
    CoherentConfiguration quotient = quotient_scheme(c.scheme, e);
    QuotientMap q = quotient_ring(c.ring, i);
    CyclotomicScheme expected = build_cyc(project_subgroup(q, c.k));
    return quotient == expected.scheme;
}

MultSRing multiplication_sring(const CyclotomicScheme& c, const Caps& caps) {
    const RingPtr& ring = c.ring;
    const std::vector<int>& units = ring->structure().units;
    require(ring->size() <= caps.aut_degree, errc::cap, "ring above multiplication S-ring cap");

    CoherentConfiguration ext = point_extension(c.scheme, std::vector<int>{ring->zero()});
    std::vector<char> is_unit_elem(static_cast<std::size_t>(ring->size()), 0);
    for (int u : units) is_unit_elem[static_cast<std::size_t>(u)] = 1;
    require(ext.is_relation([&](int x, int y) {
                return x == y && is_unit_elem[static_cast<std::size_t>(x)];
            }),
            errc::internal, "diagonal of R^x is not a relation of the 0-extension");

    CoherentConfiguration restricted = restriction(ext, units);
    GroupPtr mult = multiplicative_group(*ring);
    CoherentConfiguration closed = invariant_closure(restricted, mult->right_regular());
    SRing a = cayley_to_sring(closed, mult);

    // positions of ring elements inside the unit list
    std::vector<int> pos(static_cast<std::size_t>(ring->size()), -1);
    for (std::size_t i = 0; i < units.size(); ++i) pos[static_cast<std::size_t>(units[i])] = static_cast<int>(i);

    // the sets rK (r a unit) and (1+rK) meet R^x are unions of basic sets
    for (int r : units) {
        std::vector<int> rk;
        for (int u : c.k.elements()) rk.push_back(pos[static_cast<std::size_t>(ring->mul(r, u))]);
        std::sort(rk.begin(), rk.end());
        require(a.in_star(rk), errc::internal, "rK is not a union of basic sets");
    }
    for (int r = 0; r < ring->size(); ++r) {
        std::set<int> xr;
        for (int u : c.k.elements()) {
            int y = ring->add(ring->one(), ring->mul(r, u));
            if (is_unit_elem[static_cast<std::size_t>(y)]) xr.insert(pos[static_cast<std::size_t>(y)]);
        }
        std::vector<int> xs(xr.begin(), xr.end());
        require(a.in_star(xs), errc::internal, "(1+rK) meet R^x is not a union of basic sets");
    }
    return MultSRing{std::move(a), std::move(mult), units};
}

PurityReport purity(const UnitSubgroup& k) {
    const RingPtr& ring = k.ring();
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "purity is defined over local rings");
    PurityReport rep;
    rep.is_pure = true;
    for (int x : s.socle) {
        if (x == ring->zero()) continue;
        Ideal rx = principal_ideal(ring, x);
        bool contained = true;
        for (int e : rx.elements)
            if (!k.contains(ring->add(ring->one(), e))) {
                contained = false;
                break;
            }
        if (contained) {
            rep.is_pure = false;
            rep.witness_ideal = std::move(rx);
            break;
        }
    }
    rep.recursion_trace.push_back({ring->size(), rep.is_pure});
    return rep;
}

bool purity_exhaustive(const UnitSubgroup& k, const Caps& caps) {
    const RingPtr& ring = k.ring();
    require(ring->structure().is_local, errc::invalid, "purity is defined over local rings");
    for (const Ideal& i : enumerate_ideals(ring, caps)) {
        if (i.is_zero()) continue;
        bool contained = true;
        for (int e : i.elements)
            if (!k.contains(ring->add(ring->one(), e))) {
                contained = false;
                break;
            }
        if (contained) return false;
    }
    return true;
}

PurityReport strong_purity(const UnitSubgroup& k) {
    const RingPtr& ring = k.ring();
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "strong purity is defined over local rings");
    PurityReport rep = purity(k);
    if (s.radical.size() == 1) {  // field: strongly pure iff pure
        rep.is_strongly_pure = rep.is_pure;
        return rep;
    }
    if (!rep.is_pure) {
        rep.is_strongly_pure = false;
        return rep;
    }
    QuotientMap q = quotient_ring(ring, Ideal{ring, s.socle});
    PurityReport sub = strong_purity(project_subgroup(q, k));
    rep.is_strongly_pure = sub.is_strongly_pure;
    for (auto& step : sub.recursion_trace) rep.recursion_trace.push_back(step);
    return rep;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::normal: return "normal";
        case Verdict::not_normal: return "not_normal";
        case Verdict::not_applicable: return "not_applicable";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

std::optional<GaloisParams> galois_params(const RingSpec& spec) {
    switch (spec.kind) {
        case RingSpec::Kind::galois:
            return GaloisParams{spec.p, spec.d, spec.r};
        case RingSpec::Kind::zmod: {
            long n = spec.n, p = 0, d = 0;
            for (long cand = 2; cand <= n; ++cand) {
                if (n % cand) continue;
                p = cand;
                break;
            }
            long m = n;
            while (m % p == 0) {
                m /= p;
                ++d;
            }
            if (m != 1) return std::nullopt;  // not a prime power
            return GaloisParams{p, d, 1};
        }
        case RingSpec::Kind::trunc_poly: {
            if (spec.n != 1) return std::nullopt;
            long p = 0, e = 0, q = spec.q;
            for (long cand = 2; cand <= q; ++cand) {
                if (q % cand) continue;
                p = cand;
                break;
            }
            long m = q;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            return GaloisParams{p, 1, e};
        }
        default:
            return std::nullopt;
    }
}

Verdict classify_normality_theorem(const UnitSubgroup& k) {
    auto params = galois_params(k.ring()->spec());
    if (!params || params->p <= 2) return Verdict::not_applicable;
    const RingPtr& ring = k.ring();
    if (params->d == 1) {
        bool full = k.order() == ring->structure().units.size();
        if ((params->p == 3 && params->r == 1) || !full) return Verdict::normal;
        return Verdict::not_normal;
    }
    // d > 1: normal iff K does not contain 1 + p^(d-1) R = U_0
    const auto& socle_units = ring->structure().socle_units;
    return k.contains_set(socle_units) ? Verdict::not_normal : Verdict::normal;
}

std::string factorial_string(int n) {
    std::vector<std::uint32_t> digits{1};  // base 10^9, little-endian
    for (int i = 2; i <= n; ++i) {
        std::uint64_t carry = 0;
        for (auto& d : digits) {
            std::uint64_t v = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(i) + carry;
            d = static_cast<std::uint32_t>(v % 1000000000ull);
            carry = v / 1000000000ull;
        }
        while (carry) {
            digits.push_back(static_cast<std::uint32_t>(carry % 1000000000ull));
            carry /= 1000000000ull;
        }
    }
    std::string out = std::to_string(digits.back());
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

namespace {

// First automorphism of the rank-2 scheme outside AGammaL_1: a transposition
// of two points (all transpositions preserve two colors).
std::optional<Perm> rank2_witness(const PermGroup& agammal) {
    const int n = agammal.degree();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Point> img(static_cast<std::size_t>(n));
            std::iota(img.begin(), img.end(), Point{0});
            std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
            Perm t(std::move(img));
            if (!agammal.contains(t)) return t;
        }
    return std::nullopt;
}

}  // namespace

BruteForceResult is_normal_bruteforce(const CyclotomicScheme& c, const Caps& caps) {
    const RingPtr& ring = c.ring;
    BruteForceResult out;
    if (ring->size() > caps.aut_degree) {
        out.verdict = Verdict::skipped;
        out.note = "degree above automorphism cap";
        return out;
    }
    PermGroup agammal = affine_semilinear_group(ring, caps);
    out.agammal_order = agammal.order();

    if (c.scheme.rank() == 2) {
        // Aut(C) = Sym(R): every bijection preserves the two colors
        const int n = ring->size();
        out.aut_order = factorial_string(n);
        bool normal = (std::to_string(out.agammal_order) == *out.aut_order);
        out.verdict = normal ? Verdict::normal : Verdict::not_normal;
        if (!normal) out.witness = rank2_witness(agammal);
        return out;
    }

    const int zero = ring->zero();
    const int one = ring->one();
    int fixed[2] = {zero, one};
    PermGroup stab_target = agammal.pointwise_stabilizer(fixed);

    CoherentConfiguration ext = point_extension(c.scheme, std::vector<int>{zero, one});
    std::vector<Perm> stab;
    std::optional<Perm> witness;
    bool complete = true;
    automorphism_search(ext, [&](const Perm& g) {
        require(is_automorphism(c.scheme, g), errc::internal,
                "stabilizer element does not preserve the base scheme");
        if (!witness && !stab_target.contains(g)) witness = g;
        stab.push_back(g);
        if (stab.size() >= caps.stab_elements) {
            complete = false;
            return false;
        }
        return true;
    });

    if (complete) {
        std::uint64_t total = static_cast<std::uint64_t>(ring->size()) *
                              static_cast<std::uint64_t>(c.k.order()) *
                              static_cast<std::uint64_t>(stab.size());
        out.aut_order = std::to_string(total);
        out.stab01 = PermGroup::from_elements(ring->size(), stab);
        out.verdict = witness ? Verdict::not_normal : Verdict::normal;
    } else if (witness) {
        out.verdict = Verdict::not_normal;
        out.note = "two-point stabilizer enumeration capped; order not reported";
    } else {
        out.verdict = Verdict::skipped;
        out.note = "two-point stabilizer above cap without a decision";
        return out;
    }

    if (out.verdict == Verdict::not_normal) {
        // prefer an f_k witness when K + I = K for a nonzero ideal
        const RingStructure& s = ring->structure();
        if (s.is_local) {
            for (int x : s.socle) {
                if (x == zero) continue;
                Ideal rx = principal_ideal(ring, x);
                bool contained = true;
                for (int e : rx.elements)
                    if (!c.k.contains(ring->add(one, e))) {
                        contained = false;
                        break;
                    }
                if (!contained) continue;
                int kk = -1;
                for (int e : rx.elements)
                    if (e != zero) {
                        kk = ring->add(one, e);
                        break;
                    }
                FkWitnessResult fk = fk_witness(c, rx, kk, caps);
                if (!fk.in_agammal) {
                    witness = fk.perm;
                    break;
                }
            }
        }
        out.witness = witness;
        if (out.witness) {
            require(is_automorphism(c.scheme, *out.witness), errc::internal,
                    "witness is not an automorphism");
            require(!agammal.contains(*out.witness), errc::internal,
                    "witness lies in AGammaL_1");
        }
    }
    return out;
}

FkWitnessResult fk_witness(const CyclotomicScheme& c, const Ideal& i, int k, const Caps& caps) {
    const RingPtr& ring = c.ring;
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "f_k requires a local ring");
    // K + I = K, elementwise
    std::set<int> kplusi;
    for (int a : c.k.elements())
        for (int e : i.elements) kplusi.insert(ring->add(a, e));
    require(kplusi == std::set<int>(c.k.elements().begin(), c.k.elements().end()), errc::invalid,
            "K + I != K");
    bool k_ok = false;
    for (int e : i.elements)
        if (ring->add(ring->one(), e) == k) k_ok = true;
    require(k_ok, errc::invalid, "k is not in 1 + I");

    std::vector<char> principal(static_cast<std::size_t>(ring->size()), 0);
    for (int u : s.principal_units) principal[static_cast<std::size_t>(u)] = 1;
    std::vector<Point> img(static_cast<std::size_t>(ring->size()));
    for (int x = 0; x < ring->size(); ++x)
        img[static_cast<std::size_t>(x)] =
            static_cast<Point>(principal[static_cast<std::size_t>(x)] ? ring->mul(k, x) : x);
    FkWitnessResult out{Perm(std::move(img)), false, false};
    out.in_aut = is_automorphism(c.scheme, out.perm);
    require(out.in_aut, errc::internal, "f_k is not an automorphism of the scheme");
    out.in_agammal = affine_semilinear_group(ring, caps).contains(out.perm);
    return out;
}

NormalityVerdict classify(const UnitSubgroup& k, const Caps& caps) {
    const RingPtr& ring = k.ring();
    NormalityVerdict v;
    v.ring_spec = ring->spec_string();
    v.k_elements = k.elements();

    CyclotomicScheme c = build_cyc(k);
    v.rank = c.scheme.rank();

    if (ring->structure().is_local) {
        PurityReport strong = strong_purity(k);
        v.pure = strong.is_pure;
        v.strongly_pure = strong.is_strongly_pure;
    }

    v.theorem = classify_normality_theorem(k);
    BruteForceResult bf = is_normal_bruteforce(c, caps);
    v.bruteforce = bf.verdict;
    v.aut_order = bf.aut_order;
    v.agammal_order = bf.agammal_order;
    if (bf.witness) {
        std::vector<int> img;
        for (int x = 0; x < bf.witness->degree(); ++x) img.push_back((*bf.witness)(x));
        v.witness = std::move(img);
    }
    bool both = (v.theorem == Verdict::normal || v.theorem == Verdict::not_normal) &&
                (v.bruteforce == Verdict::normal || v.bruteforce == Verdict::not_normal);
    v.consistent = !both || v.theorem == v.bruteforce;
    return v;
}

ProductCheckReport stabilizer_product_check(const RingPtr& ring, const UnitSubgroup& k,
                                            const Caps& caps) {
    ProductCheckReport rep;
    std::vector<LocalFactor> factors = crt_decompose(ring, caps);
    require(factors.size() >= 2, errc::invalid, "ring is not a product of at least two factors");

    CyclotomicScheme c = build_cyc(k);
    CoherentConfiguration ext =
        point_extension(c.scheme, std::vector<int>{ring->zero(), ring->one()});
    PermGroup stab = automorphism_group(ext, caps);

    // component subgroups K_i with phi_i(K_i) = K meet phi_i(R_i^x)
    std::vector<UnitSubgroup> ks;
    std::vector<PermGroup> stabs;
    std::vector<Verdict> verdicts;
    Verdict whole = is_normal_bruteforce(c, caps).verdict;
    for (const LocalFactor& f : factors) {
        std::vector<int> elems;
        for (int x : f.ring->structure().units)
            if (k.contains(f.embed_mult[static_cast<std::size_t>(x)])) elems.push_back(x);
        UnitSubgroup ki(f.ring, std::move(elems));
        CyclotomicScheme ci = build_cyc(ki);
        CoherentConfiguration exti =
            point_extension(ci.scheme, std::vector<int>{f.ring->zero(), f.ring->one()});
        stabs.push_back(automorphism_group(exti, caps));
        verdicts.push_back(is_normal_bruteforce(ci, caps).verdict);
        ks.push_back(std::move(ki));
    }

    // projections: x -> factor element, via x * e_i
    std::vector<std::vector<int>> proj(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const LocalFactor& f = factors[i];
        std::map<int, int> inv_embed;
        for (int x = 0; x < f.ring->size(); ++x) inv_embed[f.embed_add[static_cast<std::size_t>(x)]] = x;
        int ei = f.embed_add[static_cast<std::size_t>(f.ring->one())];
        proj[i].resize(static_cast<std::size_t>(ring->size()));
        for (int x = 0; x < ring->size(); ++x)
            proj[i][static_cast<std::size_t>(x)] = inv_embed.at(ring->mul(x, ei));
    }

    // product of the component stabilizers under the tuple embedding
    std::vector<Perm> tuples;
    std::vector<std::size_t> idx(factors.size(), 0);
    for (;;) {
        std::vector<Point> img(static_cast<std::size_t>(ring->size()));
        for (int x = 0; x < ring->size(); ++x) {
            int y = ring->zero();
            for (std::size_t i = 0; i < factors.size(); ++i) {
                const Perm& gi = stabs[i].elements()[idx[i]];
                int comp = gi(proj[i][static_cast<std::size_t>(x)]);
                y = ring->add(y, factors[i].embed_add[static_cast<std::size_t>(comp)]);
            }
            img[static_cast<std::size_t>(x)] = static_cast<Point>(y);
        }
        tuples.push_back(Perm(std::move(img)));
        std::size_t level = 0;
        while (level < factors.size() && ++idx[level] == stabs[level].order()) {
            idx[level] = 0;
            ++level;
        }
        if (level == factors.size()) break;
    }
    PermGroup product = PermGroup::from_elements(ring->size(), std::move(tuples));
    rep.stabilizer_equal = stab.equals(product);

    bool all_normal = true;
    for (Verdict v : verdicts) all_normal = all_normal && (v == Verdict::normal);
    rep.normality_consistent = (whole == Verdict::normal) == all_normal;

    rep.details = "stab order " + std::to_string(stab.order()) + ", product order " +
                  std::to_string(product.order()) + ", whole " + to_string(whole) + ", factors";
    for (Verdict v : verdicts) rep.details += std::string(" ") + to_string(v);
    return rep;
}

}  // namespace cycsch
