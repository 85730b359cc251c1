#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include <npyth/verification.hpp>

using namespace npyth;

TEST_CASE("heron_area anchors") {
    CHECK(heron_area({3.0, 4.0, 5.0}) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(heron_area({1.0, 1.0, std::sqrt(2.0)}) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(heron_area({1.0, 1.0, 2.0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(heron_area({1.0, 1.0, 2.5}), std::domain_error);
    CHECK_THROWS_AS(heron_area({0.1, 0.1, 10.0}), std::domain_error);
}

TEST_CASE("law of cosines residual is tiny across the domain") {
    for (double g : {1.0, 1.3, 1.9, 4.0}) {
        for (double n : {1.0, 1.5, 2.0, 3.0, 17.0}) {
            CHECK(law_of_cosines_residual(1.0, SideRatio(g), Degree(n)) <= 1e-10);
        }
    }
    CHECK(law_of_cosines_residual(2.0, SideRatio(1.5), Degree(-1.5)) <= 1e-10);
}

TEST_CASE("finite_difference") {
    CHECK(finite_difference([](double x) { return x * x; }, 3.0) == doctest::Approx(6.0).epsilon(1e-8));
    CHECK(finite_difference([](double x) { return std::sin(x); }, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(finite_difference([](double x) { return x * x * x; }, 2.0, 1e-5) ==
          doctest::Approx(12.0).epsilon(1e-8));
    CHECK_THROWS_AS(
        finite_difference([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 1.0),
        std::domain_error);
}

TEST_CASE("claims report adjudications") {
    const auto claims = run_claims_report();
    REQUIRE(claims.size() == 11);

    std::set<std::string> ids;
    for (const auto& c : claims) {
        CHECK(ids.insert(c.id).second);  // unique ids
        CHECK(!c.oracle.empty());
        CHECK(!c.paper_ref.empty());
        CHECK(std::isfinite(c.worst_residual));
    }

    std::map<std::string, ClaimStatus> by_id;
    for (const auto& c : claims) by_id[c.id] = c.status;

    CHECK(by_id.at("C-EQ6") == ClaimStatus::Verified);
    CHECK(by_id.at("C-EQ11") == ClaimStatus::Verified);
    CHECK(by_id.at("C-EQ21") == ClaimStatus::Refuted);
    CHECK(by_id.at("C-EQ22") == ClaimStatus::Refuted);
    CHECK(by_id.at("C-EQANGLE") == ClaimStatus::Refuted);
    CHECK(by_id.at("C-GAMMA2") == ClaimStatus::Verified);
    CHECK(by_id.at("C-N2ONLY") == ClaimStatus::Verified);
    CHECK(by_id.at("C-EQ20") == ClaimStatus::Verified);
    CHECK(by_id.at("C-SQRT2") == ClaimStatus::Verified);
    CHECK(by_id.at("C-EQ26") == ClaimStatus::Verified);
    CHECK(by_id.at("C-EQ30EQ") == ClaimStatus::Verified);

    // refuted claims must carry a large residual and an explanatory note
    for (const auto& c : claims) {
        if (c.status == ClaimStatus::Refuted) {
            CHECK(c.worst_residual > 0.1);
            CHECK(!c.note.empty());
        }
    }
}

TEST_CASE("claims report is deterministic") {
    const auto first = run_claims_report();
    const auto second = run_claims_report();
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].id == second[i].id);
        CHECK(first[i].status == second[i].status);
        CHECK(first[i].worst_residual == second[i].worst_residual);
    }
    CHECK(claims_report_json(first) == claims_report_json(second));
}

TEST_CASE("claims report JSON shape") {
    const auto json = claims_report_json(run_claims_report());
    CHECK(json.find("\"version\"") != std::string::npos);
    CHECK(json.find("\"grid_spec\"") != std::string::npos);
    CHECK(json.find("\"claims\"") != std::string::npos);
    CHECK(json.find("C-EQ21") != std::string::npos);
    CHECK(json.find("REFUTED") != std::string::npos);
}

TEST_CASE("to_string of claim statuses") {
    CHECK(to_string(ClaimStatus::Verified) == "VERIFIED");
    CHECK(to_string(ClaimStatus::Refuted) == "REFUTED");
    CHECK(to_string(ClaimStatus::Inconclusive) == "INCONCLUSIVE");
}
