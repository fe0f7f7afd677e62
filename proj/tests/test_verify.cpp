#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"
#include "stacksort/dynamics.hpp"
#include "stacksort/verify.hpp"

using namespace stacksort;

TEST_CASE("claim names round-trip") {
    const auto claims = all_claims();
    REQUIRE(claims.size() == 10);
    for (Claim c : claims) {
        const std::string name = claim_name(c);
        const auto back = claim_from_name(name);
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
    CHECK(claim_name(Claim::hotspot_shift) == "hotspot-shift");
    CHECK(claim_from_name("hotspot_shift") == Claim::hotspot_shift);
    CHECK(claim_from_name("thm3") == Claim::thm3);
    CHECK_FALSE(claim_from_name("bogus").has_value());
    CHECK_FALSE(claim_from_name("").has_value());
}

TEST_CASE("every claim passes exhaustively up to length 6") {
    Dynamics dyn;
    for (Claim c : all_claims()) {
        const VerificationResult r = run_claim(dyn, c, 6);
        CHECK_MESSAGE(r.pass, "claim ", claim_name(c), " failed: ", r.detail);
        CHECK(r.claim == claim_name(c));
        CHECK_FALSE(r.counterexample.has_value());
        CHECK(r.elapsed_seconds >= 0.0);
        CHECK_FALSE(r.range.empty());
    }
}

TEST_CASE("the fertility and hook characterizations hold up to length 7") {
    Dynamics dyn;
    CHECK(run_claim(dyn, Claim::thm1, 7).pass);
    CHECK(run_claim(dyn, Claim::thm4, 7).pass);
}

TEST_CASE("argument validation") {
    Dynamics dyn(6);
    CHECK_THROWS_AS(run_claim(dyn, Claim::thm1, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_claim(dyn, Claim::thm1, -3), std::invalid_argument);
    CHECK_THROWS_AS(run_claim(dyn, Claim::thm1, 7), CapExceeded);
    try {
        run_claim(dyn, Claim::catalan, 9);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.n() == 9);
        CHECK(e.cap() == 6);
    }
}

TEST_CASE("result serialization") {
    Dynamics dyn;
    const VerificationResult r = run_claim(dyn, Claim::symmetry, 5);
    REQUIRE(r.pass);
    const nlohmann::json j = verification_json(r);
    CHECK(j.at("claim") == "symmetry");
    CHECK(j.at("status") == "pass");
    CHECK(j.at("counterexample").is_null());
    CHECK(j.at("range").is_string());
    CHECK(j.at("detail").is_string());
    CHECK(j.at("elapsed_seconds").is_number());
}
