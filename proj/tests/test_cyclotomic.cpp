#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cycsch/cyclotomic.hpp"

using namespace cycsch;

namespace {

UnitSubgroup K(const RingPtr& r, std::initializer_list<int> elems) {
    return UnitSubgroup(r, elems);
}

}  // namespace

TEST_CASE("build_cyc orbit structure") {
    RingPtr z9 = make_zmod(9);
    SUBCASE("Cyc({1,8}, Z_9) has rank 5 with the difference orbits") {
        CyclotomicScheme c = build_cyc(K(z9, {1, 8}));
        CHECK(c.scheme.rank() == 5);
        CHECK(c.orbit_rep[8] == 1);
        CHECK(c.orbit_rep[7] == 2);
        CHECK(c.orbit_rep[6] == 3);
        CHECK(c.orbit_rep[5] == 4);
        CHECK(c.orbit_rep[0] == 0);
    }
    SUBCASE("Cyc(R^x, F_5) has rank 2") {
        RingPtr f5 = make_zmod(5);
        CHECK(build_cyc(UnitSubgroup::full(f5)).scheme.rank() == 2);
    }
    SUBCASE("Cyc({1,4,7}, Z_9) has rank 5 with singleton radical orbits") {
        CyclotomicScheme c = build_cyc(K(z9, {1, 4, 7}));
        CHECK(c.scheme.rank() == 5);
        CHECK(c.orbit_rep[3] == 3);
        CHECK(c.orbit_rep[6] == 6);
        CHECK(c.orbit_rep[4] == 1);
        CHECK(c.orbit_rep[8] == 2);
    }
    SUBCASE("two_orbits of Gamma(K,R) equals the scheme partition") {
        for (auto k : enumerate_unit_subgroups(z9)) {
            CyclotomicScheme c = build_cyc(k);
            PermGroup gamma = gamma_group_full(k);
            CHECK(c.scheme == CoherentConfiguration::from_raw(two_orbits(gamma)));
        }
    }
}

TEST_CASE("ideal equivalence and factor scheme") {
    RingPtr z9 = make_zmod(9);
    CyclotomicScheme c = build_cyc(K(z9, {1, 8}));
    Ideal threes = principal_ideal(z9, 3);
    SUBCASE("E(3R) has 3 classes and is a union of colors") {
        Equivalence e = ideal_equivalence(c, threes);
        CHECK(e.num_classes() == 3);
        auto classes = e.classes();
        CHECK(classes[0] == std::vector<int>{0, 3, 6});
        CHECK(classes[1] == std::vector<int>{1, 4, 7});
    }
    SUBCASE("E({0}) is the identity equivalence, E(R) one class") {
        CHECK(ideal_equivalence(c, zero_ideal(z9)).num_classes() == 9);
        Ideal whole{z9, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
        CHECK(ideal_equivalence(c, whole).num_classes() == 1);
    }
    SUBCASE("factor check: Cyc({1,8},Z_9)/E(3R) = Cyc({1,2},Z_3)") {
        CHECK(factor_check(c, threes));
        Equivalence e = ideal_equivalence(c, threes);
        CoherentConfiguration q = quotient_scheme(c.scheme, e);
        RingPtr z3 = make_zmod(3);
        CHECK(q == build_cyc(K(z3, {1, 2})).scheme);
        // pi(K) = {1,2} is the full unit group of Z_3, so the quotient is rank 2
        CHECK(q.rank() == 2);
    }
    SUBCASE("factor check on Cyc({1,4,7},Z_9): quotient is the translation scheme of Z_3") {
        CyclotomicScheme c2 = build_cyc(K(z9, {1, 4, 7}));
        CHECK(factor_check(c2, threes));
        Equivalence e = ideal_equivalence(c2, threes);
        CHECK(quotient_scheme(c2.scheme, e).rank() == 3);
    }
    SUBCASE("factor check with the zero ideal is the identity quotient") {
        CHECK(factor_check(c, zero_ideal(z9)));
    }
    SUBCASE("factor check over every local sweep ring and ideal") {
        for (RingPtr r : {make_zmod(9), make_trunc_poly(2, 4), make_galois(3, 2, 2)}) {
            for (auto k : enumerate_unit_subgroups(r)) {
                CyclotomicScheme cc = build_cyc(k);
                for (const Ideal& i : enumerate_ideals(r)) {
                    if (i.elements.size() == static_cast<std::size_t>(r->size())) continue;
                    CHECK(factor_check(cc, i));
                }
            }
        }
    }
}

TEST_CASE("purity") {
    RingPtr z9 = make_zmod(9);
    SUBCASE("over a field every subgroup is pure") {
        RingPtr f25 = make_galois(5, 1, 2);
        for (auto k : enumerate_unit_subgroups(f25)) {
            CHECK(purity(k).is_pure);
            auto strong = strong_purity(k);
            CHECK(strong.is_strongly_pure.value());
        }
    }
    SUBCASE("{1,4,7} over Z_9 is impure with witness 3R") {
        PurityReport rep = purity(K(z9, {1, 4, 7}));
        CHECK(!rep.is_pure);
        REQUIRE(rep.witness_ideal.has_value());
        CHECK(rep.witness_ideal->elements == std::vector<int>{0, 3, 6});
    }
    SUBCASE("{1,8} over Z_9 is pure") {
        CHECK(purity(K(z9, {1, 8})).is_pure);
    }
    SUBCASE("minimal-ideal reduction agrees with the exhaustive oracle") {
        for (RingPtr r : {make_zmod(9), make_zmod(27), make_galois(3, 2, 2),
                          make_trunc_poly(2, 4), make_trunc_poly(3, 2), make_zmod(25)}) {
            for (auto k : enumerate_unit_subgroups(r))
                CHECK(purity(k).is_pure == purity_exhaustive(k));
        }
    }
    SUBCASE("strong purity counterexample: K = {1, 1+x^2} over F_2[X]/(X^4)") {
        RingPtr r = make_trunc_poly(2, 4);
        // x = element 2 (coefficient vector (0,1,0,0)), x^2 = 4, 1+x^2 = 5
        CHECK(r->mul(2, 2) == 4);
        PurityReport rep = strong_purity(K(r, {1, 5}));
        CHECK(rep.is_pure);
        CHECK(!rep.is_strongly_pure.value());
        REQUIRE(rep.recursion_trace.size() >= 2);
        CHECK(rep.recursion_trace[0] == std::pair<int, bool>{16, true});
        CHECK(rep.recursion_trace[1] == std::pair<int, bool>{8, false});
    }
    SUBCASE("odd Galois rings: pure iff strongly pure") {
        for (RingPtr r : {make_zmod(9), make_zmod(27), make_galois(3, 2, 2), make_zmod(25)}) {
            for (auto k : enumerate_unit_subgroups(r)) {
                PurityReport rep = strong_purity(k);
                CHECK(rep.is_pure == rep.is_strongly_pure.value());
            }
        }
    }
}

TEST_CASE("theorem classifier") {
    SUBCASE("named examples") {
        RingPtr f3 = make_zmod(3);
        CHECK(classify_normality_theorem(UnitSubgroup::full(f3)) == Verdict::normal);
        RingPtr z9 = make_zmod(9);
        CHECK(classify_normality_theorem(K(z9, {1, 4, 7})) == Verdict::not_normal);
        RingPtr f5 = make_zmod(5);
        CHECK(classify_normality_theorem(UnitSubgroup::full(f5)) == Verdict::not_normal);
        CHECK(classify_normality_theorem(K(f5, {1, 4})) == Verdict::normal);
    }
    SUBCASE("not applicable off the Galois odd case") {
        RingPtr f4 = make_galois(2, 1, 2);
        CHECK(classify_normality_theorem(UnitSubgroup::full(f4)) == Verdict::not_applicable);
        RingPtr p32 = make_trunc_poly(3, 2);
        CHECK(classify_normality_theorem(UnitSubgroup::full(p32)) == Verdict::not_applicable);
        RingPtr prod = make_product({make_zmod(3), make_zmod(3)});
        CHECK(classify_normality_theorem(UnitSubgroup::full(prod)) == Verdict::not_applicable);
    }
    SUBCASE("GF(q) recognized through POLY(q,1)") {
        RingPtr f9 = make_trunc_poly(9, 1);
        auto params = galois_params(f9->spec());
        REQUIRE(params.has_value());
        CHECK(params->p == 3);
        CHECK(params->d == 1);
        CHECK(params->r == 2);
    }
}

TEST_CASE("brute-force normality on the named instances") {
    RingPtr z9 = make_zmod(9);
    SUBCASE("Cyc({1,8},Z_9): normal, aut order 18 inside AGammaL of order 54") {
        BruteForceResult r = is_normal_bruteforce(build_cyc(K(z9, {1, 8})));
        CHECK(r.verdict == Verdict::normal);
        CHECK(r.aut_order.value() == "18");
        CHECK(r.agammal_order == 54);
    }
    SUBCASE("Cyc({1,4,7},Z_9): not normal, aut order 81, witness f_4") {
        CyclotomicScheme c = build_cyc(K(z9, {1, 4, 7}));
        BruteForceResult r = is_normal_bruteforce(c);
        CHECK(r.verdict == Verdict::not_normal);
        CHECK(r.aut_order.value() == "81");
        REQUIRE(r.witness.has_value());
        CHECK(is_automorphism(c.scheme, *r.witness));
        CHECK(!affine_semilinear_group(z9).contains(*r.witness));
        // the preferred witness is f_4 = (1 4 7)
        CHECK((*r.witness)(1) == 4);
        CHECK((*r.witness)(4) == 7);
        CHECK((*r.witness)(7) == 1);
        CHECK((*r.witness)(0) == 0);
        CHECK((*r.witness)(3) == 3);
    }
    SUBCASE("Cyc(R^x,F_5): not normal, 120 vs 20") {
        RingPtr f5 = make_zmod(5);
        BruteForceResult r = is_normal_bruteforce(build_cyc(UnitSubgroup::full(f5)));
        CHECK(r.verdict == Verdict::not_normal);
        CHECK(r.aut_order.value() == "120");
        CHECK(r.agammal_order == 20);
        REQUIRE(r.witness.has_value());
        CHECK(!affine_semilinear_group(f5).contains(*r.witness));
    }
    SUBCASE("Cyc(R^x,F_3): normal") {
        RingPtr f3 = make_zmod(3);
        BruteForceResult r = is_normal_bruteforce(build_cyc(UnitSubgroup::full(f3)));
        CHECK(r.verdict == Verdict::normal);
        CHECK(r.aut_order.value() == "6");
        CHECK(r.agammal_order == 6);
    }
    SUBCASE("aut factorization matches a full explicit enumeration") {
        // |Aut| = |R| * |K| * |Aut(C)_{0,1}| via the regular action of Gamma
        for (auto k : enumerate_unit_subgroups(z9)) {
            CyclotomicScheme c = build_cyc(k);
            PermGroup full = automorphism_group(c.scheme);
            BruteForceResult r = is_normal_bruteforce(c);
            CHECK(std::to_string(full.order()) == r.aut_order.value());
            PermGroup gamma = gamma_group_full(k);
            CHECK(full.contains_group(gamma));
        }
    }
}

TEST_CASE("f_k witnesses") {
    RingPtr z9 = make_zmod(9);
    CyclotomicScheme c = build_cyc(K(z9, {1, 4, 7}));
    Ideal threes = principal_ideal(z9, 3);
    SUBCASE("f_4 is the 3-cycle (1 4 7) fixing everything else") {
        FkWitnessResult f = fk_witness(c, threes, 4);
        CHECK(f.in_aut);
        CHECK(!f.in_agammal);
        CHECK(f.perm(1) == 4);
        CHECK(f.perm(4) == 7);
        CHECK(f.perm(7) == 1);
        for (int x : {0, 2, 3, 5, 6, 8}) CHECK(f.perm(x) == x);
    }
    SUBCASE("f_1 is the identity") {
        FkWitnessResult f = fk_witness(c, threes, 1);
        CHECK(f.perm.is_identity());
        CHECK(f.in_agammal);
    }
    SUBCASE("f_7 = (1 7 4)") {
        FkWitnessResult f = fk_witness(c, threes, 7);
        CHECK(f.in_aut);
        CHECK(f.perm(1) == 7);
        CHECK(f.perm(7) == 4);
        CHECK(f.perm(4) == 1);
    }
    SUBCASE("preconditions are enforced") {
        CyclotomicScheme pure_c = build_cyc(K(z9, {1, 8}));
        CHECK_THROWS_AS(fk_witness(pure_c, threes, 4), Error);  // K + I != K
        CHECK_THROWS_AS(fk_witness(c, threes, 2), Error);       // 2 not in 1 + I
    }
}

TEST_CASE("multiplication S-ring") {
    RingPtr z9 = make_zmod(9);
    SUBCASE("of Cyc({1,8},Z_9): T and U are A-subgroups of R^x") {
        CyclotomicScheme c = build_cyc(K(z9, {1, 8}));
        MultSRing m = multiplication_sring(c);
        CHECK(m.units == std::vector<int>{1, 2, 4, 5, 7, 8});
        // translate ring elements to unit indices
        auto idx = [&](std::initializer_list<int> xs) {
            std::vector<int> out;
            for (int x : xs)
                out.push_back(static_cast<int>(std::lower_bound(m.units.begin(), m.units.end(), x) -
                                               m.units.begin()));
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(is_a_subgroup(m.sring, idx({1, 8})));
        CHECK(is_a_subgroup(m.sring, idx({1, 4, 7})));
    }
    SUBCASE("of Cyc(R^x,F_5): K = R^x is a union of basic sets") {
        RingPtr f5 = make_zmod(5);
        CyclotomicScheme c = build_cyc(UnitSubgroup::full(f5));
        MultSRing m = multiplication_sring(c);
        CHECK(m.sring.group()->size() == 4);
        std::vector<int> all{0, 1, 2, 3};
        CHECK(m.sring.in_star(all));
    }
    SUBCASE("of Cyc({1}, R): trivial S-ring over R^x") {
        for (RingPtr r : {make_zmod(9), make_galois(3, 1, 2)}) {
            CyclotomicScheme c = build_cyc(UnitSubgroup::trivial(r));
            MultSRing m = multiplication_sring(c);
            CHECK(m.sring.is_trivial());
        }
    }
}

TEST_CASE("classify pipeline and serialization") {
    RingPtr z9 = make_zmod(9);
    NormalityVerdict v = classify(K(z9, {1, 4, 7}));
    CHECK(v.rank == 5);
    CHECK(v.pure.value() == false);
    CHECK(v.strongly_pure.value() == false);
    CHECK(v.theorem == Verdict::not_normal);
    CHECK(v.bruteforce == Verdict::not_normal);
    CHECK(v.consistent);
    REQUIRE(v.witness.has_value());

    std::string json = verdict_to_json(v);
    CHECK(json.find("\"ring\":\"Z/9\"") != std::string::npos);
    CHECK(json.find("\"theorem\":\"not_normal\"") != std::string::npos);
    CHECK(json.find("\"aut_order\":\"81\"") != std::string::npos);

    std::string csv = verdict_to_csv_row(v);
    CHECK(csv.find("\"Z/9\",\"1 4 7\",5,false,false,not_normal,not_normal,81,54,true") == 0);
}

TEST_CASE("stabilizer product formula") {
    SUBCASE("Z_9 x F_3 with the full product subgroup") {
        RingPtr r = make_product({make_zmod(9), make_zmod(3)});
        ProductCheckReport rep = stabilizer_product_check(r, UnitSubgroup::full(r));
        CHECK(rep.stabilizer_equal);
        CHECK(rep.normality_consistent);
    }
    SUBCASE("F_3 x F_3 with the diagonal subgroup") {
        RingPtr r = make_product({make_zmod(3), make_zmod(3)});
        // diagonal {(1,1),(2,2)}: embed (a,b) as a + 3b with component order (z3, z3)
        std::vector<int> diag;
        for (int a : {1, 2}) diag.push_back(a + 3 * a);
        ProductCheckReport rep = stabilizer_product_check(r, UnitSubgroup(r, diag));
        CHECK(rep.stabilizer_equal);
        CHECK(rep.normality_consistent);
    }
    SUBCASE("Z_9 x F_3 with the trivial subgroup") {
        RingPtr r = make_product({make_zmod(9), make_zmod(3)});
        ProductCheckReport rep = stabilizer_product_check(r, UnitSubgroup::trivial(r));
        CHECK(rep.stabilizer_equal);
        CHECK(rep.normality_consistent);
    }
}

TEST_CASE("factorial strings") {
    CHECK(factorial_string(1) == "1");
    CHECK(factorial_string(5) == "120");
    CHECK(factorial_string(20) == "2432902008176640000");
    CHECK(factorial_string(25) == "15511210043330985984000000");
}
