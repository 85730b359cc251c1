#include <doctest.h>

#include <cmath>
#include <random>

#include <npyth/area.hpp>
#include <npyth/verification.hpp>

using namespace npyth;

namespace {
const double kSqrt3Quarter = std::sqrt(3.0) / 4.0;
const double kSqrt3Over36 = std::sqrt(3.0) / 36.0;

// In-domain (gamma, n) sampler shared by the property tests.
struct Sampler {
    std::mt19937 rng{987654321};
    std::uniform_real_distribution<double> coin{0.0, 1.0};

    std::pair<double, double> next() {
        if (coin(rng) < 0.5) {
            const double g = 1.0 + 1.98 * coin(rng);
            const double n = 1.05 + 18.95 * coin(rng);
            return {g, n};
        }
        const double g = 1.005 + 0.895 * coin(rng);
        const double ncrit = solve_ncrit(SideRatio(g)).n_crit;
        const double n = ncrit * (1.05 + 9.0 * coin(rng));
        return {g, n};
    }
};
}  // namespace

TEST_CASE("side lengths") {
    const auto s1 = side_lengths(1.0, SideRatio(1.0), Degree(2.0));
    CHECK(s1.a == 1.0);
    CHECK(s1.b == 1.0);
    CHECK(s1.c == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    const auto s2 = side_lengths(1.0, SideRatio(2.0), Degree(1.0));
    CHECK(s2.b == 2.0);
    CHECK(s2.c == doctest::Approx(3.0).epsilon(1e-14));

    const auto s3 = side_lengths(1.0, SideRatio(1.5), Degree(-2.0));
    CHECK(s3.c == doctest::Approx(0.8320502943378437).epsilon(1e-12));

    CHECK_THROWS_AS(side_lengths(0.0, SideRatio(1.0), Degree(2.0)), std::domain_error);
    CHECK_THROWS_AS(side_lengths(1.0, SideRatio(1.5), Degree(-0.5)), std::domain_error);
}

TEST_CASE("area from angle") {
    CHECK(area_from_angle(1.0, SideRatio(1.0), pi / 2.0).area == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(area_from_angle(1.0, SideRatio(1.5), pi).area == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(area_from_angle(2.0, SideRatio(1.0), pi / 3.0).area ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("fixed-leg area") {
    CHECK(area_fixed_leg(1.0, SideRatio(1.0), Degree(2.0)).area == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(area_fixed_leg(1.0, SideRatio(1.0), Degree(-1e6)).area ==
          doctest::Approx(kSqrt3Quarter).epsilon(1e-4));
    CHECK(area_fixed_leg(1.0, SideRatio(1.5), Degree(3.0)).area ==
          doctest::Approx(0.7360935320003923).epsilon(1e-12));
    CHECK(area_fixed_leg(1.0, SideRatio(1.5), Degree(3.0)).family == AreaFamily::FixedLeg);
}

TEST_CASE("perimeter") {
    CHECK(perimeter(1.0, SideRatio(1.0), Degree(2.0)) ==
          doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK(perimeter(1.0, SideRatio(2.0), Degree(1.0)) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(perimeter(1.0, SideRatio(1.5), Degree(-2.0)) ==
          doctest::Approx(3.3320502943378437).epsilon(1e-12));
}

TEST_CASE("fixed-perimeter area") {
    CHECK(area_fixed_perimeter(1.0, SideRatio(1.0), Degree(2.0)).area ==
          doctest::Approx(0.04289321881345248).epsilon(1e-12));
    CHECK(area_fixed_perimeter(1.0, SideRatio(1.0), Degree(1e6)).area ==
          doctest::Approx(kSqrt3Over36).epsilon(1e-4));
    CHECK(area_fixed_perimeter(3.0, SideRatio(1.0), Degree(2.0)).area ==
          doctest::Approx(9.0 * area_fixed_perimeter(1.0, SideRatio(1.0), Degree(2.0)).area)
              .epsilon(1e-14));
}

TEST_CASE("fixed-perimeter isosceles closed form") {
    CHECK(area_max_fixed_perimeter_isosceles(1.0, Degree(2.0)).area ==
          doctest::Approx(0.04289321881345248).epsilon(1e-12));
    CHECK(area_max_fixed_perimeter_isosceles(1.0, Degree(1e6)).area ==
          doctest::Approx(kSqrt3Over36).epsilon(1e-6));
    CHECK(area_max_fixed_perimeter_isosceles(1.0, Degree(1.0)).area ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(area_max_fixed_perimeter_isosceles(1.0, Degree(0.5)), std::domain_error);

    for (double n : {1.5, 2.0, 4.0, 25.0, -1.0, -2.5, -40.0}) {
        CHECK(area_max_fixed_perimeter_isosceles(1.0, Degree(n)).area ==
              doctest::Approx(area_fixed_perimeter(1.0, SideRatio(1.0), Degree(n)).area).epsilon(1e-10));
    }
}

TEST_CASE("fixed-perimeter limits") {
    CHECK(area_limit_pos_inf_fixed_perimeter(1.0, SideRatio(1.0)).area ==
          doctest::Approx(kSqrt3Over36).epsilon(1e-14));
    CHECK(area_limit_pos_inf_fixed_perimeter(1.0, SideRatio(1.5)).area ==
          doctest::Approx(0.04419417382415922).epsilon(1e-12));
    CHECK(area_limit_pos_inf_fixed_perimeter(1.0, SideRatio(1000.0)).area <= 1e-3);
    for (double g : {1.0, 1.5, 3.0}) {
        CHECK(area_limit_pos_inf_fixed_perimeter(1.0, SideRatio(g)).area ==
              doctest::Approx(area_fixed_perimeter(1.0, SideRatio(g), Degree(1e6)).area).epsilon(1e-4));
    }

    CHECK(area_limit_neg_inf_fixed_perimeter(1.0, SideRatio(1.0)).area ==
          doctest::Approx(kSqrt3Over36).epsilon(1e-14));
    CHECK(area_limit_neg_inf_fixed_perimeter(1.0, SideRatio(std::sqrt(2.0))).area ==
          doctest::Approx(0.04289321881345248).epsilon(1e-12));
    CHECK(area_limit_neg_inf_fixed_perimeter(1.0, SideRatio(1.999)).area <= 0.01);
    CHECK_THROWS_AS(area_limit_neg_inf_fixed_perimeter(1.0, SideRatio(2.0)), RatioAtLeastTwoError);
}

TEST_CASE("isosceles fixed-leg extremal form") {
    CHECK(area_isosceles_extremal(1.0, Degree(2.0)).area == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(area_isosceles_extremal(1.0, Degree(1e6)).area ==
          doctest::Approx(kSqrt3Quarter).epsilon(1e-5));
    CHECK(area_isosceles_extremal(1.0, Degree(-1e6)).area ==
          doctest::Approx(kSqrt3Quarter).epsilon(1e-5));
    CHECK_THROWS_AS(area_isosceles_extremal(1.0, Degree(0.5)), std::domain_error);
    CHECK_THROWS_AS(area_isosceles_extremal(1.0, Degree(-0.5)), std::domain_error);

    for (double n : {1.0, 1.5, 2.0, 6.0, 50.0, -1.0, -3.0, -25.0}) {
        CHECK(area_isosceles_extremal(1.0, Degree(n)).area ==
              doctest::Approx(area_fixed_leg(1.0, SideRatio(1.0), Degree(n)).area).epsilon(1e-10));
    }
}

TEST_CASE("negative-infinite-degree fixed-leg limit") {
    CHECK(area_limit_neg_inf_fixed_leg(1.0, SideRatio(std::sqrt(2.0))).area ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(area_limit_neg_inf_fixed_leg(1.0, SideRatio(1.0)).area ==
          doctest::Approx(area_limit_neg_inf_fixed_leg(1.0, SideRatio(std::sqrt(3.0))).area)
              .epsilon(1e-14));
    CHECK(area_limit_neg_inf_fixed_leg(1.0, SideRatio(1.0)).area ==
          doctest::Approx(kSqrt3Quarter).epsilon(1e-14));
    CHECK(area_limit_neg_inf_fixed_leg(1.0, SideRatio(1.9999)).area <= 0.01);
    CHECK_THROWS_AS(area_limit_neg_inf_fixed_leg(1.0, SideRatio(2.0)), RatioAtLeastTwoError);
}

TEST_CASE("dA/dn stationarity residual") {
    CHECK(std::abs(area_dn_stationarity_residual(SideRatio(1.5), Degree(2.0))) <= 1e-14);
    CHECK(std::abs(area_dn_stationarity_residual(SideRatio(1.0), Degree(2.0))) <= 1e-14);
    const double res = area_dn_stationarity_residual(SideRatio(1.5), Degree(3.0));
    const double slope = finite_difference(
        [](double n) { return area_fixed_leg(1.0, SideRatio(1.5), Degree(n)).area; }, 3.0);
    CHECK(res != 0.0);
    CHECK((res > 0.0) == (slope > 0.0));
}

TEST_CASE("dA/dgamma condition residual") {
    CHECK(area_dgamma_condition_residual(SideRatio(1.0), Degree(2.0)) ==
          doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(area_dgamma_condition_residual(SideRatio(3.0), Degree(5.0)) < 0.0);
    CHECK(std::abs(area_dgamma_condition_residual(SideRatio(1.5), Degree(1.2))) > 0.1);
}

TEST_CASE("property: Heron equivalence on random in-domain samples") {
    Sampler sampler;
    for (int i = 0; i < 10000; ++i) {
        const auto [g, n] = sampler.next();
        const double a = 0.5 + 1.5 * sampler.coin(sampler.rng);
        const double ref = heron_area(side_lengths(a, SideRatio(g), Degree(n)));
        const double got = area_fixed_leg(a, SideRatio(g), Degree(n)).area;
        CHECK(std::abs(got - ref) <= 1e-9 * std::max(ref, 1e-300));
    }
}

TEST_CASE("property: closed form equals the angle form") {
    Sampler sampler;
    for (int i = 0; i < 2000; ++i) {
        const auto [g, n] = sampler.next();
        const auto out = vertex_angle(SideRatio(g), Degree(n));
        REQUIRE(out.is_real());
        const double via_angle = 0.5 * g * std::sin(*out.theta);
        const double via_formula = area_fixed_leg(1.0, SideRatio(g), Degree(n)).area;
        CHECK(std::abs(via_formula - via_angle) <= 1e-10 * std::max(via_angle, 1e-300));
    }
}

TEST_CASE("property: quadratic scaling in the held-fixed length") {
    Sampler sampler;
    for (int i = 0; i < 500; ++i) {
        const auto [g, n] = sampler.next();
        const double base = area_fixed_leg(1.0, SideRatio(g), Degree(n)).area;
        CHECK(area_fixed_leg(3.0, SideRatio(g), Degree(n)).area ==
              doctest::Approx(9.0 * base).epsilon(1e-12));
        const double basep = area_fixed_perimeter(1.0, SideRatio(g), Degree(n)).area;
        CHECK(area_fixed_perimeter(2.0, SideRatio(g), Degree(n)).area ==
              doctest::Approx(4.0 * basep).epsilon(1e-12));
    }
}

TEST_CASE("property: fixed-leg area peaks at n = 2") {
    for (double g : {1.0, 1.5, 2.5}) {
        double best = -1.0, best_n = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double n = 1.0 + 49.0 * i / 2000.0;
            const double v = area_fixed_leg(1.0, SideRatio(g), Degree(n)).area;
            if (v > best) {
                best = v;
                best_n = n;
            }
        }
        CHECK(std::abs(best_n - 2.0) <= 49.0 / 2000.0 + 1e-12);
        CHECK(best == doctest::Approx(0.5 * g).epsilon(1e-6));
    }
}

TEST_CASE("property: area grows linearly in gamma at n = 2") {
    double prev = 0.0;
    for (double g : {1.0, 1.5, 2.0, 4.0, 9.0}) {
        const double v = area_fixed_leg(1.0, SideRatio(g), Degree(2.0)).area;
        CHECK(v == doctest::Approx(0.5 * g).epsilon(1e-12));
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("property: negative-degree area maximum tracks the angle maximum") {
    for (double g : {1.2, 1.5}) {
        const double ncrit = solve_ncrit(SideRatio(g)).n_crit;
        double best_area = -1.0, best_area_n = 0.0;
        double best_theta = -1.0, best_theta_n = 0.0;
        for (int i = 1; i <= 1000; ++i) {
            const double n = ncrit * (1.0 + 29.0 * i / 1000.0);
            const double v = area_fixed_leg(1.0, SideRatio(g), Degree(n)).area;
            const double t = *vertex_angle(SideRatio(g), Degree(n)).theta;
            if (v > best_area) {
                best_area = v;
                best_area_n = n;
            }
            if (t > best_theta) {
                best_theta = t;
                best_theta_n = n;
            }
        }
        CHECK(best_area_n == best_theta_n);
    }
}

TEST_CASE("property: negative-infinite fixed-leg extremum at gamma = sqrt(2)") {
    double best = -1.0, best_g = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double g = 1.0 + 0.999 * i / 2000.0;
        const double v = area_limit_neg_inf_fixed_leg(1.0, SideRatio(g)).area;
        if (v > best) {
            best = v;
            best_g = g;
        }
    }
    CHECK(std::abs(best_g - std::sqrt(2.0)) <= 0.999 / 2000.0 + 1e-12);
    CHECK(best == doctest::Approx(0.5).epsilon(1e-6));
}
