#include "cycsch/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cycsch {

namespace {

std::string kname(const UnitSubgroup& k) {
    std::string s = "{";
    for (std::size_t i = 0; i < k.elements().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k.elements()[i]);
    }
    return s + "}";
}

std::vector<UnitSubgroup> instances(const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                                    const Caps& caps) {
    if (k) return {*k};
    return enumerate_unit_subgroups(ring, caps);
}

// sorted element set {t*u : t in T, u in U_0}
std::vector<int> tu0_set(const RingPtr& ring) {
    const RingStructure& s = ring->structure();
    std::set<int> out;
    for (int t : s.teichmuller)
        for (int u : s.socle_units) out.insert(ring->mul(t, u));
    return {out.begin(), out.end()};
}

bool subset_of(std::span<const int> xs, std::span<const int> sorted_set) {
    for (int x : xs)
        if (!std::binary_search(sorted_set.begin(), sorted_set.end(), x)) return false;
    return true;
}

// additive subgroups of the socle, as sorted ring-element sets
std::vector<std::vector<int>> socle_subgroups(const RingPtr& ring, const Caps& caps) {
    const auto& socle = ring->structure().socle;
    const int m = static_cast<int>(socle.size());
    std::vector<int> pos(static_cast<std::size_t>(ring->size()), -1);
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(socle[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint16_t> op(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            op[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>(
                pos[static_cast<std::size_t>(ring->add(socle[static_cast<std::size_t>(i)],
                                                       socle[static_cast<std::size_t>(j)]))]);
    AbelianGroup g = AbelianGroup::from_table(m, std::move(op));
    std::vector<std::vector<int>> out;
    for (const auto& sub : enumerate_subgroups(g, caps)) {
        std::vector<int> elems;
        for (int i : sub) elems.push_back(socle[static_cast<std::size_t>(i)]);
        std::sort(elems.begin(), elems.end());
        out.push_back(std::move(elems));
    }
    return out;
}

// no nonzero ideal inside H (purity of 1+H for H <= I_0)
bool socle_subgroup_pure(const RingPtr& ring, std::span<const int> h) {
    for (int x : ring->structure().socle) {
        if (x == ring->zero()) continue;
        Ideal rx = principal_ideal(ring, x);
        if (subset_of(rx.elements, h)) return false;
    }
    return true;
}

std::vector<int> to_unit_indices(const std::vector<int>& units, std::span<const int> xs) {
    std::vector<int> out;
    for (int x : xs) {
        auto it = std::lower_bound(units.begin(), units.end(), x);
        require(it != units.end() && *it == x, errc::internal, "element is not a unit");
        out.push_back(static_cast<int>(it - units.begin()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<PermGroup> guarded_aut(const CoherentConfiguration& c, const Caps& caps) {
    try {
        return automorphism_group(c, caps);
    } catch (const Error& e) {
        if (e.code() == errc::cap) return std::nullopt;
        throw;
    }
}

using SuiteFn = std::function<void(SuiteReport&, const RingPtr&, const std::optional<UnitSubgroup>&,
                                   const Caps&)>;

void suite_f2130406c(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                     const Caps& caps) {
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        // membership of rK and (1+rK) meet R^x in S*(A) is asserted inside
        multiplication_sring(build_cyc(sub), caps);
        ++rep.checked;
    }
}

void suite_f230805a(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "suite requires a local ring");
    std::vector<int> tu0 = tu0_set(ring);
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        if (!subset_of(sub.elements(), tu0) || !purity(sub).is_pure) {
            ++rep.skipped;
            continue;
        }
        MultSRing m = multiplication_sring(build_cyc(sub), caps);
        std::vector<int> t_idx = to_unit_indices(m.units, s.teichmuller);
        std::vector<int> u_idx = to_unit_indices(m.units, s.principal_units);
        if (!is_a_subgroup(m.sring, t_idx)) rep.failures.push_back(kname(sub) + ": T not an A-subgroup");
        if (!is_a_subgroup(m.sring, u_idx)) rep.failures.push_back(kname(sub) + ": U not an A-subgroup");
        if (rep.failures.empty()) {
            bool t_trivial = sring_restriction(m.sring, t_idx).is_trivial();
            bool u_trivial = sring_restriction(m.sring, u_idx).is_trivial();
            if ((t_trivial || u_trivial) && !m.sring.is_trivial())
                rep.failures.push_back(kname(sub) + ": A_T or A_U trivial but A is not");
        }
        ++rep.checked;
    }
}

void suite_f230805b(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "suite requires a local ring");
    std::vector<int> tu0 = tu0_set(ring);
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        if (!subset_of(sub.elements(), tu0) || !purity(sub).is_pure) {
            ++rep.skipped;
            continue;
        }
        MultSRing m = multiplication_sring(build_cyc(sub), caps);
        for (const auto& h : {s.teichmuller, s.principal_units}) {
            std::vector<int> h_idx = to_unit_indices(m.units, h);
            if (!is_a_subgroup(m.sring, h_idx)) {
                rep.failures.push_back(kname(sub) + ": T or U not an A-subgroup");
                continue;
            }
            // cosets of R^x by H, in unit indices
            std::vector<std::vector<int>> cosets;
            std::set<int> covered;
            for (int g = 0; g < m.sring.group()->size(); ++g) {
                if (covered.count(g)) continue;
                std::vector<int> coset;
                for (int x : h_idx) {
                    int y = m.sring.group()->op(g, x);
                    coset.push_back(y);
                    covered.insert(y);
                }
                std::sort(coset.begin(), coset.end());
                cosets.push_back(std::move(coset));
            }
            SRing joined = sring_join(m.sring, cosets);
            if (!joined.is_trivial())
                rep.failures.push_back(kname(sub) + ": coset join is not trivial");
        }
        ++rep.checked;
    }
}

void suite_f050406b(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        CyclotomicScheme c = build_cyc(sub);
        MultSRing m = multiplication_sring(c, caps);
        if (!m.sring.is_trivial()) {
            ++rep.skipped;
            continue;
        }
        auto aut = guarded_aut(c.scheme, caps);
        if (!aut) {
            ++rep.skipped;
            rep.note = "some instances above the automorphism cap";
            continue;
        }
        if (!aut->equals(gamma_group_full(sub)))
            rep.failures.push_back(kname(sub) + ": Aut(C) != Gamma(K,R)");
        ++rep.checked;
    }
}

void suite_f130406a(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const bool is_field = ring->structure().is_local && ring->structure().radical.size() == 1;
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        CyclotomicScheme c = build_cyc(sub);
        CoherentConfiguration ext =
            point_extension(c.scheme, std::vector<int>{ring->zero(), ring->one()});
        auto stab = guarded_aut(ext, caps);
        if (!stab) {
            ++rep.skipped;
            rep.note = "some instances above the stabilizer cap";
            continue;
        }
        MultSRing m = multiplication_sring(c, caps);
        CoherentConfiguration cayley = sring_to_cayley(m.sring);
        const auto& units = m.units;
        std::set<Perm> restrictions;
        bool ok = true;
        for (const Perm& f : stab->elements()) {
            // R^x is f-invariant; restrict along the unit list
            std::vector<Point> img(units.size());
            for (std::size_t i = 0; i < units.size(); ++i) {
                auto it = std::lower_bound(units.begin(), units.end(), f(units[i]));
                if (it == units.end() || *it != f(units[i])) {
                    ok = false;
                    break;
                }
                img[i] = static_cast<Point>(it - units.begin());
            }
            if (!ok) break;
            Perm restricted(std::move(img));
            if (!is_automorphism(cayley, restricted)) {
                ok = false;
                break;
            }
            restrictions.insert(std::move(restricted));
        }
        if (!ok) {
            rep.failures.push_back(kname(sub) + ": restriction is not into Aut(A)");
            ++rep.checked;
            continue;
        }
        if (is_field) {
            // bijectivity: restriction is injective onto Aut(A)
            if (restrictions.size() != stab->order())
                rep.failures.push_back(kname(sub) + ": restriction not injective");
            auto aut_a = guarded_aut(point_extension(cayley, std::vector<int>{
                                                                 m.sring.group()->identity()}),
                                     caps);
            if (aut_a) {
                std::vector<Perm> rs(restrictions.begin(), restrictions.end());
                if (!PermGroup::from_elements(cayley.degree(), rs).equals(*aut_a))
                    rep.failures.push_back(kname(sub) + ": restriction not onto Aut(A)");
            }
        }
        ++rep.checked;
    }
}

void suite_f300805a(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "suite requires a local ring");
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        if (!purity(sub).is_pure) {
            ++rep.skipped;
            continue;
        }
        CyclotomicScheme c = build_cyc(sub);
        Equivalence e0 = ideal_equivalence(c, Ideal{ring, s.socle});
        CoherentConfiguration ce0 = class_extension(c.scheme, e0);
        std::vector<int> u0;
        for (int x : sub.elements())
            if (std::binary_search(s.socle_units.begin(), s.socle_units.end(), x)) u0.push_back(x);
        CyclotomicScheme cyc_u0 = build_cyc(UnitSubgroup(ring, u0));
        if (!ce0.refines(cyc_u0.scheme))
            rep.failures.push_back(kname(sub) + ": C_E0 does not refine Cyc(U_0,R)");
        ++rep.checked;
    }
}

void suite_f290705c(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "suite requires a local ring");
    std::vector<std::vector<int>> hs;
    if (k) {
        std::vector<int> h;
        for (int x : k->elements())
            if (std::binary_search(s.socle_units.begin(), s.socle_units.end(), x))
                h.push_back(ring->sub(x, ring->one()));
        std::sort(h.begin(), h.end());
        hs.push_back(std::move(h));
    } else {
        hs = socle_subgroups(ring, caps);
    }
    for (const auto& h : hs) {
        if (!socle_subgroup_pure(ring, h)) {
            ++rep.skipped;
            continue;
        }
        std::vector<int> u0;
        for (int e : h) u0.push_back(ring->add(ring->one(), e));
        std::sort(u0.begin(), u0.end());
        for (int x : s.radical) {
            std::set<int> lhs;
            for (int u : u0) lhs.insert(ring->mul(x, u));
            std::set<int> rhs;
            bool first = true;
            for (int t : s.teichmuller) {
                std::set<int> term;
                for (int u : u0)
                    for (int v : u0)
                        term.insert(ring->add(ring->mul(ring->sub(x, t), u), ring->mul(t, v)));
                if (first) {
                    rhs = std::move(term);
                    first = false;
                } else {
                    std::set<int> meet;
                    std::set_intersection(rhs.begin(), rhs.end(), term.begin(), term.end(),
                                          std::inserter(meet, meet.begin()));
                    rhs = std::move(meet);
                }
            }
            if (lhs != rhs) {
                rep.failures.push_back("H size " + std::to_string(h.size()) + ", x = " +
                                       ring->element_name(x) + ": intersection identity fails");
                break;
            }
        }
        ++rep.checked;
    }
}

void suite_f230805c(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "suite requires a local ring");
    const int one = ring->one();
    for (const auto& h : socle_subgroups(ring, caps)) {
        // K = T(1+H)
        std::set<int> kset;
        for (int t : s.teichmuller)
            for (int e : h) kset.insert(ring->mul(t, ring->add(one, e)));
        UnitSubgroup sub(ring, {kset.begin(), kset.end()});
        if (k && !(k->elements() == sub.elements())) {
            continue;  // only the requested instance
        }
        bool instance_ok = true;
        for (int x : s.radical) {
            int r = ring->add(one, x);
            // direct left-hand side
            std::set<int> lhs;
            for (int e : sub.elements()) {
                int y = ring->add(one, ring->mul(r, e));
                if (ring->is_unit(y)) lhs.insert(y);
            }
            // multiplicative coset decomposition
            std::set<int> rhs;
            for (int t : s.teichmuller) {
                if (t == one) continue;
                int tinv = *ring->inv(t);
                // unique y_t in rad with 1 - t^-1 + y_t in T
                int yt = -1;
                for (int y : s.radical) {
                    int cand = ring->add(ring->sub(one, tinv), y);
                    if (std::binary_search(s.teichmuller.begin(), s.teichmuller.end(), cand)) {
                        require(yt < 0, errc::internal, "y_t is not unique");
                        yt = y;
                    }
                }
                require(yt >= 0, errc::internal, "y_t does not exist");
                int z = ring->mul(yt, r);
                int coeff = ring->mul(ring->sub(t, one), tinv);  // (t-1)/t
                for (int e : h) {
                    int w = ring->mul(coeff, ring->add(e, x));
                    rhs.insert(ring->mul(t, ring->add(one, ring->add(z, w))));
                }
            }
            if (lhs != rhs) {
                rep.failures.push_back("K = " + kname(sub) + ", r = 1+" + ring->element_name(x) +
                                       ": coset decomposition fails");
                instance_ok = false;
                break;
            }
        }
        (void)instance_ok;
        ++rep.checked;
    }
}

void suite_f050805b(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "suite requires a local ring");
    PermGroup auts = ring_automorphisms(ring, caps);
    QuotientMap q = quotient_ring(ring, Ideal{ring, s.socle});
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        if (!purity(sub).is_pure) {
            ++rep.skipped;
            continue;
        }
        CyclotomicScheme c = build_cyc(sub);
        CyclotomicScheme cq = build_cyc(project_subgroup(q, sub));
        for (const Perm& sigma : auts.elements()) {
            if (!is_automorphism(c.scheme, sigma)) continue;  // not in Aut_C(R)
            // induced map on R/I_0
            std::vector<Point> img(static_cast<std::size_t>(q.target->size()));
            for (int x = 0; x < ring->size(); ++x)
                img[static_cast<std::size_t>(q.projection[static_cast<std::size_t>(x)])] =
                    static_cast<Point>(q.projection[static_cast<std::size_t>(sigma(x))]);
            Perm induced(std::move(img));
            if (!is_automorphism(cq.scheme, induced))
                rep.failures.push_back(kname(sub) + ": induced map leaves Aut_C(R/I_0)");
            if (!sigma.is_identity() && induced.is_identity())
                rep.failures.push_back(kname(sub) + ": kernel of the reduction is nontrivial");
        }
        ++rep.checked;
    }
}

void suite_f050406a(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local && s.radical.size() > 1, errc::invalid,
            "suite requires a local ring that is not a field");
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        PurityReport pure = strong_purity(sub);
        if (!pure.is_strongly_pure.value_or(false)) {
            ++rep.skipped;
            continue;
        }
        BruteForceResult bf = is_normal_bruteforce(build_cyc(sub), caps);
        if (bf.verdict != Verdict::normal)
            rep.failures.push_back(kname(sub) + ": strongly pure but " + to_string(bf.verdict));
        ++rep.checked;
    }
}

void suite_f100406a(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local && s.radical.size() > 1, errc::invalid,
            "suite requires a local ring that is not a field");
    std::vector<int> tu0 = tu0_set(ring);
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        if (!purity(sub).is_pure || !subset_of(sub.elements(), tu0)) {
            ++rep.skipped;
            continue;
        }
        BruteForceResult bf = is_normal_bruteforce(build_cyc(sub), caps);
        if (bf.verdict != Verdict::normal)
            rep.failures.push_back(kname(sub) + ": pure inside TU_0 but " + to_string(bf.verdict));
        ++rep.checked;
    }
}

void suite_290506a(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                   const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local && s.radical.size() > 1, errc::invalid,
            "suite requires a local ring that is not a field");
    const long q = s.residue_field_size;
    bool prime_field = q >= 2;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            prime_field = false;
            break;
        }
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        bool strongly = strong_purity(sub).is_strongly_pure.value_or(false);
        bool in_t = subset_of(sub.elements(), s.teichmuller);
        bool in_u = subset_of(sub.elements(), s.principal_units);
        bool applies = in_t || (strongly && in_u) || (strongly && prime_field);
        if (!applies) {
            ++rep.skipped;
            continue;
        }
        CyclotomicScheme c = build_cyc(sub);
        CoherentConfiguration ext =
            point_extension(c.scheme, std::vector<int>{ring->zero(), ring->one()});
        auto stab = guarded_aut(ext, caps);
        if (!stab) {
            ++rep.skipped;
            rep.note = "stabilizer above cap";
            continue;
        }
        // Aut(C) <= AGL_1(R) iff the two-point stabilizer is trivial
        if (stab->order() != 1)
            rep.failures.push_back(kname(sub) + ": Aut(C) is not inside AGL_1(R)");
        ++rep.checked;
    }
}

void suite_f080805b(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local && s.radical.size() == 1, errc::invalid, "suite requires a field");
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        CyclotomicScheme c = build_cyc(sub);
        if (c.scheme.rank() <= 2) {
            ++rep.skipped;
            continue;
        }
        BruteForceResult bf = is_normal_bruteforce(c, caps);
        if (bf.verdict != Verdict::normal)
            rep.failures.push_back(kname(sub) + ": field scheme of rank > 2 is " +
                                   to_string(bf.verdict));
        ++rep.checked;
    }
}

void suite_f090405b(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    const RingStructure& s = ring->structure();
    require(s.is_local, errc::invalid, "suite requires a local ring");
    std::vector<Ideal> ideals = enumerate_ideals(ring, caps);
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        BruteForceResult bf = is_normal_bruteforce(build_cyc(sub), caps);
        if (bf.verdict != Verdict::normal) {
            ++rep.skipped;
            continue;
        }
        for (const Ideal& i : ideals) {
            if (i.is_zero()) continue;
            bool contained = true;
            for (int e : i.elements)
                if (!sub.contains(ring->add(ring->one(), e))) {
                    contained = false;
                    break;
                }
            if (!contained) continue;
            // normal and K + I = K for nonzero I: forces q = 2 and I inside I_0
            if (s.residue_field_size != 2)
                rep.failures.push_back(kname(sub) + ": normal with K+I=K but q != 2");
            else if (!subset_of(i.elements, s.socle))
                rep.failures.push_back(kname(sub) + ": normal with K+I=K but I is not in I_0");
        }
        ++rep.checked;
    }
}

void suite_f060206a(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    auto params = galois_params(ring->spec());
    require(params && params->p > 2, errc::invalid, "suite requires an odd Galois ring");
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        PurityReport pure = strong_purity(sub);
        if (pure.is_pure != pure.is_strongly_pure.value())
            rep.failures.push_back(kname(sub) + ": pure and strongly pure disagree");
        ++rep.checked;
    }
}

void suite_f210406b(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    // discrete scheme under the translation group: fibers are singletons,
    // translations act regularly, Aut of the closure must be exactly them
    {
        const int n = ring->size();
        std::vector<int> colors(static_cast<std::size_t>(n) * n);
        for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<int>(i);
        CoherentConfiguration discrete = CoherentConfiguration::from_colors(n, std::move(colors));
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        PermGroup translations = gamma_group(UnitSubgroup::trivial(ring), all);
        CoherentConfiguration closed = invariant_closure(discrete, translations);
        auto aut = guarded_aut(closed, caps);
        if (aut) {
            if (!aut->equals(translations))
                rep.failures.push_back("translations: Aut(C^G) != G Aut(C)");
            ++rep.checked;
        } else {
            ++rep.skipped;
        }
    }
    // pipeline instances where R^x_right is regular on the diagonal fibers
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        CyclotomicScheme c = build_cyc(sub);
        CoherentConfiguration ext = point_extension(c.scheme, std::vector<int>{ring->zero()});
        const auto& units = ring->structure().units;
        CoherentConfiguration restricted = restriction(ext, units);
        GroupPtr mult = multiplicative_group(*ring);
        PermGroup right = mult->right_regular();
        // hypothesis: regular action on the set of diagonal fibers
        if (restricted.diagonal_fibers().size() != right.order()) {
            ++rep.skipped;
            continue;
        }
        CoherentConfiguration closed = invariant_closure(restricted, right);
        auto aut_c = guarded_aut(restricted, caps);
        auto aut_closed = guarded_aut(closed, caps);
        if (!aut_c || !aut_closed) {
            ++rep.skipped;
            continue;
        }
        std::vector<Perm> prod = PermGroup::product_set(right, *aut_c);
        if (!(prod == aut_closed->elements()))
            rep.failures.push_back(kname(sub) + ": Aut(C^G) != G Aut(C) on the unit restriction");
        ++rep.checked;
    }
}

void suite_f030805d(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    std::vector<Ideal> ideals = enumerate_ideals(ring, caps);
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        CyclotomicScheme c = build_cyc(sub);
        auto aut = guarded_aut(c.scheme, caps);
        if (!aut) {
            ++rep.skipped;
            rep.note = "Aut(C) above cap on some instances";
            continue;
        }
        for (const Ideal& i : ideals) {
            if (i.elements.size() == static_cast<std::size_t>(ring->size())) continue;
            Equivalence e = ideal_equivalence(c, i);
            CoherentConfiguration ce = class_extension(c.scheme, e);
            auto aut_e = guarded_aut(ce, caps);
            if (!aut_e) {
                ++rep.skipped;
                continue;
            }
            if (!aut->contains_group(*aut_e) || !aut->normalizes(*aut_e))
                rep.failures.push_back(kname(sub) + ": Aut(C_E) is not normal in Aut(C)");
        }
        ++rep.checked;
    }
}

void suite_eoags(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                 const Caps& caps) {
    GroupPtr add = additive_group(*ring);
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        CyclotomicScheme c = build_cyc(sub);
        SRing a = cayley_to_sring(c.scheme, add);
        auto aut = guarded_aut(c.scheme, caps);
        if (!aut) {
            ++rep.skipped;
            rep.note = "Aut(C) above cap on some instances";
            continue;
        }
        int zero[1] = {add->identity()};
        PermGroup aut_a = aut->pointwise_stabilizer(zero);
        std::vector<Perm> prod = PermGroup::product_set(aut_a, add->right_regular());
        if (!(prod == aut->elements()))
            rep.failures.push_back(kname(sub) + ": Aut(C) != Aut(A) G_right");
        ++rep.checked;
    }
}

void suite_f180406a(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    GroupPtr add = additive_group(*ring);
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        CyclotomicScheme c = build_cyc(sub);
        SRing a = cayley_to_sring(c.scheme, add);
        auto aut = guarded_aut(c.scheme, caps);
        if (!aut) {
            ++rep.skipped;
            rep.note = "Aut(C) above cap on some instances";
            continue;
        }
        int zero[1] = {add->identity()};
        PermGroup aut_a = aut->pointwise_stabilizer(zero);
        for (const auto& h : a_subgroups(a, caps)) {
            if (h.size() == static_cast<std::size_t>(add->size())) continue;
            // cosets of G by H
            std::vector<std::vector<int>> cosets;
            std::set<int> covered;
            for (int g = 0; g < add->size(); ++g) {
                if (covered.count(g)) continue;
                std::vector<int> coset;
                for (int x : h) {
                    int y = add->op(g, x);
                    coset.push_back(y);
                    covered.insert(y);
                }
                std::sort(coset.begin(), coset.end());
                cosets.push_back(std::move(coset));
            }
            SRing joined = sring_join(a, cosets);
            auto aut_joined_full = guarded_aut(sring_to_cayley(joined), caps);
            if (!aut_joined_full) {
                ++rep.skipped;
                continue;
            }
            PermGroup aut_aprime = aut_joined_full->pointwise_stabilizer(zero);
            std::vector<Perm> hgens;
            for (int x : h) hgens.push_back(add->right_multiplication(x));
            for (const Perm& p : aut_aprime.elements()) hgens.push_back(p);
            PermGroup target = PermGroup::generated(add->size(), hgens, caps.group_elements);
            if (!aut_a.normalizes(target))
                rep.failures.push_back(kname(sub) + ": Aut(A) does not normalize <Aut(A'), H'>");
        }
        ++rep.checked;
    }
}

void suite_schur(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                 const Caps& caps) {
    GroupPtr add = additive_group(*ring);
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        CyclotomicScheme c = build_cyc(sub);
        verify_schur_multipliers(cayley_to_sring(c.scheme, add));
        if (ring->size() <= caps.aut_degree)
            verify_schur_multipliers(multiplication_sring(c, caps).sring);
        ++rep.checked;
    }
}

void suite_f090405a(SuiteReport& rep, const RingPtr& ring, const std::optional<UnitSubgroup>& k,
                    const Caps& caps) {
    for (const UnitSubgroup& sub : instances(ring, k, caps)) {
        ProductCheckReport pr = stabilizer_product_check(ring, sub, caps);
        if (!pr.pass()) rep.failures.push_back(kname(sub) + ": " + pr.details);
        ++rep.checked;
    }
}

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites = {
        {"f2130406c", suite_f2130406c}, {"f230805a", suite_f230805a},
        {"f230805b", suite_f230805b},   {"f050406b", suite_f050406b},
        {"f130406a", suite_f130406a},   {"f300805a", suite_f300805a},
        {"f290705c", suite_f290705c},   {"f230805c", suite_f230805c},
        {"f050805b", suite_f050805b},   {"f050406a", suite_f050406a},
        {"f100406a", suite_f100406a},   {"290506a", suite_290506a},
        {"f080805b", suite_f080805b},   {"f090405b", suite_f090405b},
        {"f060206a", suite_f060206a},   {"f210406b", suite_f210406b},
        {"f030805d", suite_f030805d},   {"eoags", suite_eoags},
        {"f180406a", suite_f180406a},   {"schur", suite_schur},
        {"f090405a", suite_f090405a},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::string SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["instance"] = instance;
    j["pass"] = pass;
    j["checked"] = checked;
    j["skipped"] = skipped;
    j["failures"] = failures;
    j["note"] = note;
    return j.dump();
}

SuiteReport run_suite(const std::string& name, const RingPtr& ring,
                      const std::optional<UnitSubgroup>& k, const Caps& caps) {
    auto it = registry().find(name);
    require(it != registry().end(), errc::parse, "unknown suite: " + name);
    SuiteReport rep;
    rep.suite = name;
    rep.instance = ring->spec_string() + (k ? " K=" + kname(*k) : " (sweep)");
    it->second(rep, ring, k, caps);
    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace cycsch
