#include <npyth/area.hpp>

#include <cmath>

namespace npyth {

namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error(std::string(what) + " must be positive and finite");
}

void require_in_domain(SideRatio gamma, Degree n) {
    if (!is_real_domain(gamma, n)) throw std::domain_error("(gamma, n) lies outside the real-angle domain");
}

void require_neg_inf_ratio(double g) {
    if (g >= 2.0) throw RatioAtLeastTwoError(g);
    if (g < 1.0) throw std::domain_error("side ratio must be >= 1");
}

// Radicand of the closed-form area; tiny float negatives at degeneracy
// are clamped to zero inside a 1e-12 relative band.
double area_radicand(double g, double n) {
    const double d = g * g + 1.0 - sum_pow_root(g, n, 2.0);
    double rad = 4.0 * g * g - d * d;
    if (rad < 0.0) {
        if (rad > -1e-12 * 4.0 * g * g) rad = 0.0;
        else throw std::domain_error("negative area radicand: (gamma, n) outside the real domain");
    }
    return rad;
}

}  // namespace

TriangleSides side_lengths(double a, SideRatio gamma, Degree n) {
    require_positive(a, "leg length a");
    require_in_domain(gamma, n);
    const double g = gamma.value();
    return {a, g * a, a * sum_pow_root(g, n.value(), 1.0)};
}

AreaValue area_from_angle(double a, SideRatio gamma, double theta) {
    require_positive(a, "leg length a");
    if (!(theta >= 0.0 && theta <= pi)) throw std::domain_error("theta must lie in [0, pi]");
    return {0.5 * a * a * gamma.value() * std::sin(theta), AreaFamily::FixedLeg, a};
}

AreaValue area_fixed_leg(double a, SideRatio gamma, Degree n) {
    require_positive(a, "leg length a");
    require_in_domain(gamma, n);
    const double g = gamma.value();
    return {(a / 2.0) * (a / 2.0) * std::sqrt(area_radicand(g, n.value())), AreaFamily::FixedLeg, a};
}

double perimeter(double a, SideRatio gamma, Degree n) {
    require_positive(a, "leg length a");
    require_in_domain(gamma, n);
    const double g = gamma.value();
    return a * (g + 1.0 + sum_pow_root(g, n.value(), 1.0));
}

AreaValue area_fixed_perimeter(double P, SideRatio gamma, Degree n) {
    require_positive(P, "perimeter P");
    require_in_domain(gamma, n);
    const double g = gamma.value();
    const double s = g + 1.0 + sum_pow_root(g, n.value(), 1.0);
    const double q = P / (2.0 * s);
    return {q * q * std::sqrt(area_radicand(g, n.value())), AreaFamily::FixedPerimeter, P};
}

AreaValue area_max_fixed_perimeter_isosceles(double P, Degree n) {
    require_positive(P, "perimeter P");
    const double nn = n.value();
    if (nn > 0.0 && nn < 1.0) throw std::domain_error("no real triangle for 0 < n < 1");
    double rad = std::pow(4.0, (nn + 1.0) / nn) - std::pow(16.0, 1.0 / nn);
    if (rad < 0.0 && rad > -1e-12) rad = 0.0;
    const double denom = 1.0 + std::exp2((1.0 - nn) / nn);
    return {P * P / 16.0 * std::sqrt(rad) / (denom * denom), AreaFamily::FixedPerimeter, P};
}

AreaValue area_limit_pos_inf_fixed_perimeter(double P, SideRatio gamma) {
    require_positive(P, "perimeter P");
    const double g = gamma.value();
    const double d = 2.0 * g + 1.0;
    return {0.25 * std::sqrt(4.0 * g * g - 1.0) / (d * d) * P * P, AreaFamily::FixedPerimeter, P};
}

AreaValue area_limit_neg_inf_fixed_perimeter(double P, SideRatio gamma) {
    require_positive(P, "perimeter P");
    const double g = gamma.value();
    require_neg_inf_ratio(g);
    const double d = g + 2.0;
    return {0.25 * g / (d * d) * std::sqrt(4.0 - g * g) * P * P, AreaFamily::FixedPerimeter, P};
}

AreaValue area_isosceles_extremal(double a, Degree n) {
    require_positive(a, "leg length a");
    const double nn = n.value();
    if (nn < 1.0 && nn > -1.0) throw std::domain_error("requires n >= 1 or n <= -1");
    const double e = (1.0 - nn) / nn;
    double rad = 1.0 - std::pow(4.0, e);
    if (rad < 0.0 && rad > -1e-12) rad = 0.0;
    return {a * a * std::exp2(e) * std::sqrt(rad), AreaFamily::FixedLeg, a};
}

AreaValue area_limit_neg_inf_fixed_leg(double a, SideRatio gamma) {
    require_positive(a, "leg length a");
    const double g = gamma.value();
    require_neg_inf_ratio(g);
    return {0.25 * a * a * g * std::sqrt(4.0 - g * g), AreaFamily::FixedLeg, a};
}

double area_dn_stationarity_residual(SideRatio gamma, Degree n) {
    require_in_domain(gamma, n);
    const double g = gamma.value();
    const double nn = n.value();
    const double first = g * g + 1.0 - sum_pow_root(g, nn, 2.0);
    double second;
    if (g != 1.0 && (g > 1.0) == (nn > 0.0)) {
        // g^n/(g^n+1) = 1/(1+g^-n); (1/n) ln(g^n+1) = ln g + log1p(g^-n)/n
        const double t = std::pow(g, -nn);
        second = std::log(g) / (1.0 + t) - std::log(g) - std::log1p(t) / nn;
    } else {
        const double u = std::pow(g, nn);
        second = u / (u + 1.0) * std::log(g) - std::log1p(u) / nn;
    }
    return first * second;
}

double area_dgamma_condition_residual(SideRatio gamma, Degree n) {
    require_in_domain(gamma, n);
    const double g = gamma.value();
    const double nn = n.value();
    const double first = g * g + 1.0 - sum_pow_root(g, nn, 2.0);
    double tail;  // g^(n-2) (g^n+1)^((2-n)/n)
    if (g != 1.0 && (g > 1.0) == (nn > 0.0)) {
        const double t = std::pow(g, -nn);
        tail = std::exp(((2.0 - nn) / nn) * std::log1p(t));
    } else {
        const double u = std::pow(g, nn);
        tail = std::pow(g, nn - 2.0) * std::exp(((2.0 - nn) / nn) * std::log1p(u));
    }
    return first * (1.0 - tail) - 4.0;
}

}  // namespace npyth
