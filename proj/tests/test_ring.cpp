#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cycsch/ring.hpp"

using namespace cycsch;

namespace {

std::vector<int> ints(std::initializer_list<int> xs) { return {xs}; }

}  // namespace

TEST_CASE("galois ring GR(9,1) has the expected units and radical") {
    RingPtr r = make_galois(3, 2, 1);
    CHECK(r->size() == 9);
    CHECK(verify_ring_axioms(*r));
    CHECK(r->structure().units == ints({1, 2, 4, 5, 7, 8}));
    CHECK(r->structure().radical == ints({0, 3, 6}));
    CHECK(r->structure().is_local);
    CHECK(r->structure().residue_field_size == 3);
}

TEST_CASE("GR(3,1) is the field F_3") {
    RingPtr r = make_galois(3, 1, 1);
    CHECK(r->size() == 3);
    CHECK(r->structure().radical == ints({0}));
    CHECK(r->structure().socle == ints({0}));
    CHECK(r->spec_string() == "GF(3)");
}

TEST_CASE("GR(9,2) unit group splits as Teichmuller times principal units") {
    RingPtr r = make_galois(3, 2, 2);
    CHECK(r->size() == 81);
    CHECK(r->structure().units.size() == 72);
    CHECK(r->structure().teichmuller.size() == 8);
    CHECK(r->structure().principal_units.size() == 9);
    CHECK(verify_ring_axioms(*r));
}

TEST_CASE("truncated polynomial rings") {
    SUBCASE("F_2[X]/(X^4)") {
        RingPtr r = make_trunc_poly(2, 4);
        CHECK(r->size() == 16);
        CHECK(verify_ring_axioms(*r));
        CHECK(r->structure().radical.size() == 8);
        CHECK(r->structure().socle.size() == 2);  // {0, x^3}
        CHECK(r->structure().teichmuller == ints({1}));
        CHECK(r->structure().units.size() == 8);
    }
    SUBCASE("POLY(3,1) collapses to the field") {
        RingPtr r = make_trunc_poly(3, 1);
        CHECK(r->size() == 3);
        CHECK(r->structure().radical == ints({0}));
    }
    SUBCASE("POLY(3,2) has rad^2 = 0 and socle = rad") {
        RingPtr r = make_trunc_poly(3, 2);
        CHECK(r->size() == 9);
        CHECK(r->structure().radical.size() == 3);
        CHECK(r->structure().socle == r->structure().radical);
    }
}

TEST_CASE("ring structure examples") {
    SUBCASE("Z_9") {
        RingPtr r = make_zmod(9);
        const RingStructure& s = r->structure();
        CHECK(s.teichmuller == ints({1, 8}));
        CHECK(s.principal_units == ints({1, 4, 7}));
        CHECK(s.socle == ints({0, 3, 6}));
        CHECK(s.socle == s.radical);
        CHECK(s.characteristic == 9);
    }
    SUBCASE("F_5") {
        RingPtr r = make_zmod(5);
        const RingStructure& s = r->structure();
        CHECK(s.teichmuller == ints({1, 2, 3, 4}));
        CHECK(s.principal_units == ints({1}));
        CHECK(s.radical == ints({0}));
    }
    SUBCASE("F_2[X]/(X^4) socle units") {
        RingPtr r = make_trunc_poly(2, 4);
        const RingStructure& s = r->structure();
        CHECK(s.principal_units == s.units);  // T = {1}
        CHECK(s.socle_units.size() == 2);
    }
}

TEST_CASE("local ring invariants: T and U meet trivially and generate the units") {
    for (RingPtr r : {make_zmod(9), make_zmod(25), make_galois(3, 2, 2), make_trunc_poly(2, 4),
                      make_galois(7, 1, 2)}) {
        const RingStructure& s = r->structure();
        REQUIRE(s.is_local);
        std::vector<int> meet;
        std::set_intersection(s.teichmuller.begin(), s.teichmuller.end(), s.principal_units.begin(),
                              s.principal_units.end(), std::back_inserter(meet));
        CHECK(meet.size() == 1);
        CHECK(meet[0] == r->one());
        CHECK(s.teichmuller.size() * s.principal_units.size() == s.units.size());
        std::set<int> prod;
        for (int t : s.teichmuller)
            for (int u : s.principal_units) prod.insert(r->mul(t, u));
        CHECK(prod == std::set<int>(s.units.begin(), s.units.end()));
        CHECK(static_cast<long>(s.teichmuller.size()) == s.residue_field_size - 1);
        // R = rad (disjoint) R^x
        CHECK(s.units.size() + s.radical.size() == static_cast<std::size_t>(r->size()));
    }
}

TEST_CASE("socle is fixed pointwise by principal units") {
    for (RingPtr r : {make_zmod(27), make_galois(3, 2, 2), make_trunc_poly(2, 4)}) {
        const RingStructure& s = r->structure();
        for (int u : s.principal_units)
            for (int x : s.socle) CHECK(r->mul(u, x) == x);
    }
}

TEST_CASE("ideal enumeration") {
    SUBCASE("Z_9 has the chain 0 < 3R < R") {
        RingPtr r = make_zmod(9);
        auto ideals = enumerate_ideals(r);
        REQUIRE(ideals.size() == 3);
        CHECK(ideals[0].elements == ints({0}));
        CHECK(ideals[1].elements == ints({0, 3, 6}));
        CHECK(ideals[2].elements.size() == 9);
        auto mins = minimal_ideals(r);
        REQUIRE(mins.size() == 1);
        CHECK(mins[0].elements == ints({0, 3, 6}));
    }
    SUBCASE("a field has no proper nonzero ideals") {
        RingPtr r = make_zmod(5);
        auto ideals = enumerate_ideals(r);
        CHECK(ideals.size() == 2);
        auto mins = minimal_ideals(r);
        REQUIRE(mins.size() == 1);
        CHECK(mins[0].elements.size() == 5);
    }
    SUBCASE("F_2[X]/(X^4) ideal chain") {
        RingPtr r = make_trunc_poly(2, 4);
        auto ideals = enumerate_ideals(r);
        CHECK(ideals.size() == 5);
        auto mins = minimal_ideals(r);
        REQUIRE(mins.size() == 1);
        CHECK(mins[0].elements == r->structure().socle);
    }
}

TEST_CASE("quotient rings") {
    SUBCASE("Z_9 / 3R is F_3") {
        RingPtr r = make_zmod(9);
        Ideal i = principal_ideal(r, 3);
        QuotientMap q = quotient_ring(r, i);
        CHECK(q.target->size() == 3);
        CHECK(q.projection[1] == q.projection[4]);
        CHECK(q.projection[4] == q.projection[7]);
        CHECK(find_ring_isomorphism(*q.target, *make_zmod(3)).has_value());
    }
    SUBCASE("quotient by zero ideal is an isomorphic copy") {
        RingPtr r = make_zmod(9);
        QuotientMap q = quotient_ring(r, zero_ideal(r));
        CHECK(q.target->size() == 9);
        CHECK(find_ring_isomorphism(*q.target, *r).has_value());
    }
    SUBCASE("GR(27,1) / 9R is Z_9") {
        RingPtr r = make_galois(3, 3, 1);
        Ideal i = principal_ideal(r, r->int_embed(9));
        QuotientMap q = quotient_ring(r, i);
        CHECK(q.target->size() == 9);
        CHECK(find_ring_isomorphism(*q.target, *make_zmod(9)).has_value());
    }
    SUBCASE("units of the quotient are the projected units") {
        RingPtr r = make_galois(3, 2, 2);
        Ideal i = Ideal{r, r->structure().socle};
        QuotientMap q = quotient_ring(r, i);
        std::set<int> projected;
        for (int u : r->structure().units) projected.insert(q.projection[u]);
        const auto& target_units = q.target->structure().units;
        CHECK(projected == std::set<int>(target_units.begin(), target_units.end()));
    }
}

TEST_CASE("ring automorphisms") {
    SUBCASE("Z/n is rigid") {
        CHECK(ring_automorphisms(make_zmod(9)).order() == 1);
        CHECK(ring_automorphisms(make_zmod(25)).order() == 1);
    }
    SUBCASE("GR(9,2) has automorphism group of order 2") {
        CHECK(ring_automorphisms(make_galois(3, 2, 2)).order() == 2);
    }
    SUBCASE("F_9 has the Frobenius") {
        CHECK(ring_automorphisms(make_galois(3, 1, 2)).order() == 2);
    }
    SUBCASE("F_q[X]/(X^2) is determined by x -> cx and Frobenius") {
        // an automorphism fixes the prime field and sends x to c*x with c a
        // unit of the residue field, giving (q-1)*|Aut(F_q)| maps
        CHECK(ring_automorphisms(make_trunc_poly(3, 2)).order() == 2);
        CHECK(ring_automorphisms(make_trunc_poly(4, 2)).order() == 6);
    }
    SUBCASE("automorphisms preserve both tables") {
        RingPtr r = make_galois(3, 2, 2);
        PermGroup g = ring_automorphisms(r);
        for (const Perm& f : g.elements())
            for (int a = 0; a < r->size(); ++a)
                for (int b = 0; b < r->size(); ++b) {
                    REQUIRE(f(r->add(a, b)) == r->add(f(a), f(b)));
                    REQUIRE(f(r->mul(a, b)) == r->mul(f(a), f(b)));
                }
    }
}

TEST_CASE("products and CRT") {
    SUBCASE("Z_9 x F_3 has 12 units") {
        RingPtr r = make_product({make_zmod(9), make_zmod(3)});
        CHECK(r->size() == 27);
        CHECK(r->structure().units.size() == 12);
        CHECK(!r->structure().is_local);
        CHECK(verify_ring_axioms(*r));
    }
    SUBCASE("construct_zmod(9) is isomorphic to GR(9,1)") {
        CHECK(find_ring_isomorphism(*make_zmod(9), *make_galois(3, 2, 1)).has_value());
    }
    SUBCASE("crt_decompose(Z_45) gives local factors of sizes 9 and 5") {
        RingPtr r = make_zmod(45);
        auto factors = crt_decompose(r);
        REQUIRE(factors.size() == 2);
        std::vector<int> sizes{factors[0].ring->size(), factors[1].ring->size()};
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == ints({5, 9}));
        // embeddings are multiplicative on units and additive on elements
        for (const auto& f : factors) {
            for (int x = 0; x < f.ring->size(); ++x)
                for (int y = 0; y < f.ring->size(); ++y) {
                    CHECK(f.embed_add[f.ring->add(x, y)] ==
                          r->add(f.embed_add[x], f.embed_add[y]));
                    CHECK(f.embed_mult[f.ring->mul(x, y)] ==
                          r->mul(f.embed_mult[x], f.embed_mult[y]));
                }
        }
    }
    SUBCASE("crt then product reproduces an isomorphic ring") {
        RingPtr r = make_zmod(45);
        auto factors = crt_decompose(r);
        std::vector<RingPtr> parts;
        for (auto& f : factors) parts.push_back(f.ring);
        RingPtr back = make_product(std::move(parts));
        CHECK(find_ring_isomorphism(*r, *back).has_value());
    }
    SUBCASE("idempotent fallback on a table-defined composite") {
        RingPtr z6 = make_zmod(6);
        // rebuild with an opaque spec to force the fallback path
        std::vector<std::uint16_t> add, mul;
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                add.push_back(static_cast<std::uint16_t>(z6->add(a, b)));
                mul.push_back(static_cast<std::uint16_t>(z6->mul(a, b)));
            }
        RingSpec spec;
        spec.kind = RingSpec::Kind::opaque;
        spec.label = "opaque6";
        RingPtr r = make_from_tables(spec, 6, std::move(add), std::move(mul), {});
        auto factors = crt_decompose(r);
        REQUIRE(factors.size() == 2);
        std::vector<int> sizes{factors[0].ring->size(), factors[1].ring->size()};
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == ints({2, 3}));
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make_zmod(1), Error);
    CHECK_THROWS_AS(make_galois(4, 1, 1), Error);  // 4 not prime
    CHECK_THROWS_AS(make_galois(3, 0, 1), Error);
    CHECK_THROWS_AS(make_galois(2, 12, 1), Error);  // above cap
    CHECK_THROWS_AS(make_trunc_poly(6, 2), Error);  // 6 not a prime power
    RingPtr r = make_zmod(9);
    Ideal improper{r, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
    CHECK_THROWS_AS(quotient_ring(r, improper), Error);
}
