#include <npyth/angle.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>

namespace npyth {

namespace {

std::atomic<double> g_domain_tol{1e-12};

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw std::domain_error(std::string(what) + " must be finite");
}

}  // namespace

double domain_tolerance() noexcept { return g_domain_tol.load(std::memory_order_relaxed); }
void set_domain_tolerance(double tol) noexcept { g_domain_tol.store(tol, std::memory_order_relaxed); }

SideRatio::SideRatio(double gamma) : gamma_(gamma) {
    require_finite(gamma, "side ratio");
    if (gamma < 1.0) throw std::domain_error("side ratio must be >= 1 (use excluded_regime for 0 < gamma < 1)");
}

SideRatio SideRatio::excluded_regime(double gamma) {
    require_finite(gamma, "side ratio");
    if (gamma <= 0.0) throw std::domain_error("side ratio must be positive");
    return SideRatio(gamma, unchecked{});
}

Degree::Degree(double n) : n_(n) {
    require_finite(n, "degree");
    if (n == 0.0) throw std::domain_error("degree n = 0 has no triangle (2 = 1)");
}

double sum_pow_root(double gamma, double n, double k) {
    // Factor out gamma^n whenever gamma^n would be the large term, so the
    // naive pow never overflows: (g^n+1)^(k/n) = g^k (1 + g^-n)^(k/n).
    if (gamma != 1.0 && (gamma > 1.0) == (n > 0.0)) {
        return std::pow(gamma, k) * std::exp((k / n) * std::log1p(std::pow(gamma, -n)));
    }
    return std::exp((k / n) * std::log1p(std::pow(gamma, n)));
}

double cos_vertex_arg(SideRatio gamma, Degree n) {
    const double g = gamma.value();
    const double t = sum_pow_root(g, n.value(), 2.0);
    return (g * g + 1.0 - t) / (2.0 * g);
}

AngleOutcome vertex_angle(SideRatio gamma, Degree n) {
    const double g = gamma.value();
    const double nn = n.value();

    if (nn > 0.0 && nn < 1.0) {
        AngleOutcome out;
        out.exclusion = Exclusion::FractionalPositiveDegree;
        return out;
    }

    const double arg = cos_vertex_arg(gamma, n);
    const double tol = domain_tolerance();

    if (nn < 0.0 && (arg > 1.0 + tol || arg < -1.0 - tol)) {
        // Mirror gamma < 1 sweeps onto the equivalent gamma >= 1 ratio when
        // picking the exclusion reason (the relation is symmetric in a, b).
        const double geff = g < 1.0 ? 1.0 / g : g;
        AngleOutcome out;
        out.exclusion = geff >= 2.0 ? Exclusion::RatioAtLeastTwo : Exclusion::ExceedsCriticalDegree;
        return out;
    }

    AngleOutcome out;
    out.cos_arg = std::clamp(arg, -1.0, 1.0);
    out.theta = std::acos(out.cos_arg);
    return out;
}

double limit_angle_pos_inf(SideRatio gamma) {
    const double g = gamma.value();
    if (g < 1.0) return std::acos(g / 2.0);
    if (g == 1.0) return pi / 3.0;
    return std::acos(1.0 / (2.0 * g));
}

double limit_angle_neg_inf(SideRatio gamma) {
    const double g = gamma.value();
    if (g >= 2.0) throw RatioAtLeastTwoError(g);
    if (g == 1.0) return pi / 3.0;
    return std::acos(g / 2.0);
}

double extremal_isosceles_angle(Degree n) {
    const double nn = n.value();
    if (nn > 0.0 && nn < 1.0) throw std::domain_error("no real extremal angle for 0 < n < 1");
    const double arg = 1.0 - std::exp2((2.0 - nn) / nn);
    return std::acos(std::clamp(arg, -1.0, 1.0));
}

double angle_stationarity_residual(SideRatio gamma, Degree n) {
    const double g = gamma.value();
    const double nn = n.value();
    if (g == 1.0) return 0.0;
    if ((g > 1.0) == (nn > 0.0)) {
        // (g^n - 1)(g^n+1)^((2-n)/n) = g^2 (1 - g^-n) (1 + g^-n)^((2-n)/n)
        const double t = std::pow(g, -nn);
        const double prod = g * g * (1.0 - t) * std::exp(((2.0 - nn) / nn) * std::log1p(t));
        return 1.0 - g * g + prod;
    }
    const double u = std::pow(g, nn);
    return 1.0 - g * g + (u - 1.0) * std::exp(((2.0 - nn) / nn) * std::log1p(u));
}

std::variant<TriangleClass, Exclusion> classify_triangle(SideRatio gamma, Degree n) {
    const AngleOutcome out = vertex_angle(gamma, n);
    if (!out.is_real()) return *out.exclusion;
    const double theta = *out.theta;
    constexpr double tol = 1e-9;
    if (theta <= tol || theta >= pi - tol) return TriangleClass::Degenerate;
    if (std::abs(theta - pi / 2.0) <= tol) return TriangleClass::Right;
    return theta > pi / 2.0 ? TriangleClass::Obtuse : TriangleClass::Acute;
}

}  // namespace npyth
