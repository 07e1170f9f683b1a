#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cycsch/affine.hpp"
#include "cycsch/ring.hpp"
#include "cycsch/scheme.hpp"

using namespace cycsch;

namespace {

CoherentConfiguration rank2(int n) {
    std::vector<int> colors(static_cast<std::size_t>(n) * n, 1);
    for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(v) * n + v] = 0;
    return CoherentConfiguration::from_colors(n, std::move(colors));
}

CoherentConfiguration discrete(int n) {
    std::vector<int> colors(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<int>(i);
    return CoherentConfiguration::from_colors(n, std::move(colors));
}

// Independent oracle: filter all n! bijections for color preservation.
std::vector<Perm> brute_automorphisms(const CoherentConfiguration& c) {
    std::vector<Perm> out;
    PermGroup sym = PermGroup::symmetric(c.degree());
    for (const Perm& p : sym.elements())
        if (is_automorphism(c, p)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("axiom checker accepts rank-2 schemes and rejects the path coloring") {
    CHECK(check_scheme_axioms(rank2(4)).ok);
    CHECK(check_scheme_axioms(rank2(9)).ok);

    // path 0-1-2: diagonal, edge, non-edge is not coherent
    std::vector<int> path{0, 1, 2,  //
                          1, 0, 1,  //
                          2, 1, 0};
    auto c = CoherentConfiguration::from_colors(3, path);
    auto rep = check_scheme_axioms(c);
    CHECK(!rep.ok);
    CHECK(!rep.violation.empty());
}

TEST_CASE("canonical form is independent of input labels") {
    std::vector<int> a{5, 9, 9, 5};
    std::vector<int> b{1, 0, 0, 1};
    CHECK(CoherentConfiguration::from_colors(2, a) == CoherentConfiguration::from_colors(2, b));
}

TEST_CASE("WL closure") {
    SUBCASE("of the full relation is the rank-2 scheme") {
        std::vector<std::vector<char>> rels{std::vector<char>(16, 1)};
        auto c = wl_closure_relations(4, rels);
        CHECK(c.rank() == 2);
        CHECK(c == rank2(4));
    }
    SUBCASE("is idempotent on schemes") {
        auto c = rank2(5);
        std::vector<std::vector<int>> seeds{c.colors()};
        CHECK(wl_closure(5, seeds) == c);
    }
    SUBCASE("of a directed 9-cycle separates all difference classes") {
        std::vector<char> cyc(81, 0);
        for (int i = 0; i < 9; ++i) cyc[static_cast<std::size_t>(i) * 9 + (i + 1) % 9] = 1;
        auto c = wl_closure_relations(9, {cyc});
        CHECK(c.rank() == 9);
        // equals the 2-orbit scheme of the translation group of Z_9
        RingPtr z9 = make_zmod(9);
        PermGroup translations = gamma_group(UnitSubgroup::trivial(z9),
                                             std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
        CHECK(c == CoherentConfiguration::from_raw(two_orbits(translations)));
    }
    SUBCASE("is monotone: more seeds never coarsen") {
        std::vector<char> cyc(81, 0);
        for (int i = 0; i < 9; ++i) cyc[static_cast<std::size_t>(i) * 9 + (i + 1) % 9] = 1;
        std::vector<char> extra(81, 0);
        extra[3] = 1;
        auto coarse = wl_closure_relations(9, {cyc});
        auto fine = wl_closure_relations(9, {cyc, extra});
        CHECK(fine.refines(coarse));
    }
}

TEST_CASE("point extension") {
    SUBCASE("of the rank-2 scheme on 4 points at one point has rank 5") {
        auto c = point_extension(rank2(4), std::vector<int>{0});
        CHECK(c.rank() == 5);
        CHECK(c.diagonal_fibers().size() == 2);
    }
    SUBCASE("at no points is the identity") {
        auto c = rank2(4);
        CHECK(point_extension(c, std::vector<int>{}) == c);
    }
    SUBCASE("automorphisms of the extension are the stabilizer") {
        auto c = rank2(5);
        auto ext = point_extension(c, std::vector<int>{2});
        PermGroup full = automorphism_group(c);
        PermGroup stab = automorphism_group(ext);
        int pts[1] = {2};
        CHECK(stab.equals(full.pointwise_stabilizer(pts)));
    }
}

TEST_CASE("restriction and quotient") {
    SUBCASE("restriction to the whole point set is the identity") {
        auto c = rank2(6);
        std::vector<int> all{0, 1, 2, 3, 4, 5};
        CHECK(restriction(c, all) == c);
    }
    SUBCASE("restriction requires an invariant subset") {
        auto c = rank2(4);
        std::vector<int> u{0, 1};
        CHECK_THROWS_AS(restriction(c, u), Error);
    }
    SUBCASE("quotient of the translation scheme of Z_9 by cosets of 3") {
        RingPtr z9 = make_zmod(9);
        std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
        PermGroup translations = gamma_group(UnitSubgroup::trivial(z9), all);
        auto c = CoherentConfiguration::from_raw(two_orbits(translations));
        Equivalence e;
        e.degree = 9;
        e.cls.resize(9);
        for (int v = 0; v < 9; ++v) e.cls[static_cast<std::size_t>(v)] = v % 3;
        REQUIRE(is_scheme_equivalence(c, e));
        auto q = quotient_scheme(c, e);
        CHECK(q.degree() == 3);
        CHECK(q.rank() == 3);
    }
}

TEST_CASE("invariant closure") {
    RingPtr z9 = make_zmod(9);
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
    PermGroup translations = gamma_group(UnitSubgroup::trivial(z9), all);
    SUBCASE("of the discrete scheme is the 2-orbit scheme") {
        auto c = invariant_closure(discrete(9), translations);
        CHECK(c == CoherentConfiguration::from_raw(two_orbits(translations)));
    }
    SUBCASE("under the trivial group is the identity") {
        auto c = rank2(5);
        CHECK(invariant_closure(c, PermGroup::trivial(5)) == c);
    }
    SUBCASE("rejects non-isomorphisms") {
        std::vector<char> cyc(81, 0);
        for (int i = 0; i < 9; ++i) cyc[static_cast<std::size_t>(i) * 9 + (i + 1) % 9] = 1;
        auto c = wl_closure_relations(9, {cyc});
        // a transposition of 0,1 does not permute difference classes
        std::vector<Point> img{1, 0, 2, 3, 4, 5, 6, 7, 8};
        PermGroup bad = PermGroup::generated(9, std::vector<Perm>{Perm(img)});
        CHECK_THROWS_AS(invariant_closure(c, bad), Error);
    }
}

TEST_CASE("automorphism group") {
    SUBCASE("of the rank-2 scheme is the symmetric group") {
        PermGroup g = automorphism_group(rank2(4));
        CHECK(g.order() == 24);
    }
    SUBCASE("matches the filter-all-permutations oracle on small schemes") {
        RingPtr z6 = make_zmod(6);
        std::vector<int> all{0, 1, 2, 3, 4, 5};
        for (auto k : enumerate_unit_subgroups(z6)) {
            PermGroup gamma = gamma_group(k, all);
            auto c = CoherentConfiguration::from_raw(two_orbits(gamma));
            PermGroup fast = automorphism_group(c);
            std::vector<Perm> slow = brute_automorphisms(c);
            CHECK(fast.elements() == slow);
        }
    }
    SUBCASE("of the Z_9 translation scheme is the translations") {
        RingPtr z9 = make_zmod(9);
        std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
        PermGroup translations = gamma_group(UnitSubgroup::trivial(z9), all);
        auto c = CoherentConfiguration::from_raw(two_orbits(translations));
        PermGroup g = automorphism_group(c);
        CHECK(g.equals(translations));
    }
}

TEST_CASE("two_orbits examples") {
    RingPtr z9 = make_zmod(9);
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
    SUBCASE("Gamma({1,8}, Z_9) has 5 pair classes") {
        UnitSubgroup k(z9, {1, 8});
        CHECK(two_orbits(gamma_group(k, all)).num_classes == 5);
    }
    SUBCASE("Sym(3) has 2 pair classes") {
        CHECK(two_orbits(PermGroup::symmetric(3)).num_classes == 2);
    }
    SUBCASE("AGammaL_1(F_5) does not contain Sym(F_5)") {
        RingPtr f5 = make_zmod(5);
        CHECK(!affine_semilinear_group(f5).contains_group(PermGroup::symmetric(5)));
    }
}

TEST_CASE("affine groups") {
    SUBCASE("orders: Z_9, GR(9,2), F_4") {
        CHECK(affine_semilinear_group(make_zmod(9)).order() == 54);
        CHECK(affine_group(make_zmod(9)).order() == 54);
        CHECK(affine_semilinear_group(make_galois(3, 2, 2)).order() == 81 * 72 * 2);
        PermGroup f4 = affine_semilinear_group(make_galois(2, 1, 2));
        CHECK(f4.order() == 24);
        CHECK(f4.contains_group(PermGroup::symmetric(4)));  // q <= 4
    }
    SUBCASE("Gamma(K,R) <= AGL_1(R) <= AGammaL_1(R)") {
        for (RingPtr r : {make_zmod(9), make_galois(3, 1, 2)}) {
            PermGroup agl = affine_group(r);
            PermGroup agal = affine_semilinear_group(r);
            CHECK(agal.contains_group(agl));
            for (const auto& k : enumerate_unit_subgroups(r))
                CHECK(agl.contains_group(gamma_group_full(k)));
        }
    }
    SUBCASE("gamma group orders") {
        RingPtr z9 = make_zmod(9);
        std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
        CHECK(gamma_group(UnitSubgroup::trivial(z9), all).order() == 9);
        CHECK(gamma_group(UnitSubgroup(z9, {1, 8}), all).order() == 18);
        RingPtr f5 = make_zmod(5);
        CHECK(affine_group(f5).order() == 20);
    }
    SUBCASE("the involution s = gamma_{-1,1} swaps 0 and 1") {
        RingPtr z9 = make_zmod(9);
        AffineSemilinearMap s{8, 1, Perm::identity(9)};  // -1 = 8 in Z_9
        Perm sp = s.as_perm(*z9);
        CHECK(sp(0) == 1);
        CHECK(sp(1) == 0);
        CHECK(sp.then(sp).is_identity());
    }
}

TEST_CASE("unit subgroup enumeration") {
    SUBCASE("F_5 has 3 subgroups") {
        CHECK(enumerate_unit_subgroups(make_zmod(5)).size() == 3);
    }
    SUBCASE("Z_9 has 4 subgroups") {
        auto subs = enumerate_unit_subgroups(make_zmod(9));
        REQUIRE(subs.size() == 4);
        CHECK(subs[0].elements() == std::vector<int>{1});
        CHECK(subs[1].elements() == std::vector<int>{1, 8});
        CHECK(subs[2].elements() == std::vector<int>{1, 4, 7});
        CHECK(subs[3].order() == 6);
    }
    SUBCASE("F_2[X]/(X^4) has 8 subgroups") {
        CHECK(enumerate_unit_subgroups(make_trunc_poly(2, 4)).size() == 8);
    }
    SUBCASE("the list is closed under intersection") {
        auto subs = enumerate_unit_subgroups(make_galois(3, 2, 2));
        std::set<std::vector<int>> all;
        for (const auto& s : subs) all.insert(s.elements());
        for (const auto& a : subs)
            for (const auto& b : subs) {
                std::vector<int> meet;
                std::set_intersection(a.elements().begin(), a.elements().end(),
                                      b.elements().begin(), b.elements().end(),
                                      std::back_inserter(meet));
                CHECK(all.count(meet) == 1);
            }
    }
    SUBCASE("non-closed sets are rejected") {
        RingPtr z9 = make_zmod(9);
        CHECK_THROWS_AS(UnitSubgroup(z9, {1, 4}), Error);  // 4*4 = 7 missing
        CHECK_THROWS_AS(UnitSubgroup(z9, {1, 3}), Error);  // 3 is not a unit
    }
}

TEST_CASE("group machinery") {
    SUBCASE("product of subgroup element lists") {
        PermGroup s3 = PermGroup::symmetric(3);
        auto prod = PermGroup::product_set(s3, s3);
        CHECK(prod.size() == 6);
    }
    SUBCASE("induced actions") {
        RingPtr z9 = make_zmod(9);
        std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
        PermGroup g = gamma_group(UnitSubgroup(z9, {1, 8}), all);
        Equivalence e;
        e.degree = 9;
        e.cls.resize(9);
        for (int v = 0; v < 9; ++v) e.cls[static_cast<std::size_t>(v)] = v % 3;
        PermGroup q = induced_on_classes(g, e);
        CHECK(q.degree() == 3);
        CHECK(q.order() == 6);  // dihedral action on Z_3
    }
}
