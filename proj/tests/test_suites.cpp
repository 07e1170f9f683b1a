#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycsch/suites.hpp"

using namespace cycsch;

namespace {

void expect_pass(const std::string& suite, const RingPtr& ring,
                 std::optional<UnitSubgroup> k = std::nullopt) {
    SuiteReport rep = run_suite(suite, ring, k);
    INFO(rep.suite, " on ", rep.instance);
    for (const auto& f : rep.failures) INFO("failure: ", f);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
}

}  // namespace

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 21);
    RingPtr z9 = make_zmod(9);
    CHECK_THROWS_AS(run_suite("nonsense", z9, std::nullopt), Error);
}

TEST_CASE("spec-anchored suite instances") {
    SUBCASE("f290705c on POLY(3,2) passes") {
        expect_pass("f290705c", make_trunc_poly(3, 2));
    }
    SUBCASE("f290705c on GR(9,2) with non-subfield H") {
        expect_pass("f290705c", make_galois(3, 2, 2));
    }
    SUBCASE("f2130406c on Cyc({1,8},Z_9)") {
        RingPtr z9 = make_zmod(9);
        expect_pass("f2130406c", z9, UnitSubgroup(z9, {1, 8}));
    }
    SUBCASE("f080805b on F_7, all K of rank > 2") {
        expect_pass("f080805b", make_zmod(7));
    }
}

TEST_CASE("theorem suites on Z_9") {
    RingPtr z9 = make_zmod(9);
    for (const char* name :
         {"f2130406c", "f230805a", "f230805b", "f050406b", "f130406a", "f300805a", "f290705c",
          "f230805c", "f050805b", "f050406a", "f100406a", "290506a", "f090405b", "f060206a",
          "f210406b", "f030805d", "eoags", "f180406a", "schur"}) {
        CAPTURE(name);
        SuiteReport rep = run_suite(name, z9, std::nullopt);
        for (const auto& f : rep.failures) INFO("failure: ", f);
        CHECK(rep.pass);
    }
}

TEST_CASE("theorem suites on the strong-purity counterexample ring") {
    RingPtr r = make_trunc_poly(2, 4);
    for (const char* name : {"f2130406c", "f230805a", "f230805b", "f300805a", "f290705c",
                             "f230805c", "f050805b", "f050406a", "f090405b", "schur"}) {
        CAPTURE(name);
        SuiteReport rep = run_suite(name, r, std::nullopt);
        for (const auto& f : rep.failures) INFO("failure: ", f);
        CHECK(rep.pass);
    }
}

TEST_CASE("product-formula suite on Z_9 x F_3") {
    RingPtr r = make_product({make_zmod(9), make_zmod(3)});
    SuiteReport rep = run_suite("f090405a", r, UnitSubgroup::full(r));
    CHECK(rep.pass);
    CHECK(rep.checked == 1);
}

TEST_CASE("suite reports serialize") {
    RingPtr z9 = make_zmod(9);
    SuiteReport rep = run_suite("f060206a", z9, std::nullopt);
    std::string json = rep.to_json();
    CHECK(json.find("\"suite\":\"f060206a\"") != std::string::npos);
    CHECK(json.find("\"pass\":true") != std::string::npos);
}
