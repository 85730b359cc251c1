#pragma once

#include <limits>
#include <optional>
#include <variant>

#include <npyth/errors.hpp>

namespace npyth {

/// Side ratio gamma = b/a. Library-facing construction requires gamma >= 1;
/// the excluded_regime factory admits 0 < gamma < 1 for sweeps that
/// deliberately cross into the mirrored regime (figure data only).
class SideRatio {
public:
    explicit SideRatio(double gamma);
    static SideRatio excluded_regime(double gamma);
    double value() const noexcept { return gamma_; }

private:
    struct unchecked {};
    SideRatio(double gamma, unchecked) noexcept : gamma_(gamma) {}
    double gamma_;
};

/// Real exponent n of a^n + b^n = c^n. n = 0 is rejected (2 = 1).
class Degree {
public:
    explicit Degree(double n);
    double value() const noexcept { return n_; }

private:
    double n_;
};

enum class Exclusion {
    FractionalPositiveDegree,  // 0 < n < 1: complex angle for every ratio
    ExceedsCriticalDegree,     // n < 0, n > n_crit(gamma)
    RatioAtLeastTwo,           // n < 0, gamma >= 2
};

/// Either a real vertex angle (radians, with its clamped cosine argument)
/// or a typed reason why the angle is complex.
struct AngleOutcome {
    std::optional<double> theta;
    double cos_arg = std::numeric_limits<double>::quiet_NaN();
    std::optional<Exclusion> exclusion;

    bool is_real() const noexcept { return theta.has_value(); }
};

enum class TriangleClass { Degenerate, Right, Obtuse, Acute };

/// Band around |cos arg| = 1 inside which the argument is clamped rather
/// than excluded. Settable at the process boundary (CLI / env).
double domain_tolerance() noexcept;
void set_domain_tolerance(double tol) noexcept;

/// (gamma^n + 1)^(k/n) in a form that cannot overflow for large |n|.
/// Shared by the angle and area formulas.
double sum_pow_root(double gamma, double n, double k);

/// Cosine argument [gamma^2 + 1 - (gamma^n+1)^(2/n)] / (2 gamma).
/// Not clamped; may lie outside [-1, 1].
double cos_vertex_arg(SideRatio gamma, Degree n);

/// Vertex angle between sides a and b, or the exclusion that applies.
AngleOutcome vertex_angle(SideRatio gamma, Degree n);

/// n -> +inf limit: arccos(gamma/2) for gamma < 1, pi/3 at gamma = 1,
/// arccos(1/(2 gamma)) for gamma > 1.
double limit_angle_pos_inf(SideRatio gamma);

/// n -> -inf limit on 1 <= gamma < 2: pi/3 at gamma = 1, arccos(gamma/2)
/// for 1 < gamma < 2. Throws RatioAtLeastTwoError for gamma >= 2.
double limit_angle_neg_inf(SideRatio gamma);

/// arccos(1 - 2^((2-n)/n)): the extremum of theta over gamma, attained at
/// gamma = 1 (maximum for 1 <= n <= 2 and n < 0, minimum for n >= 2).
double extremal_isosceles_angle(Degree n);

/// Residual of the stationarity condition d theta / d gamma = 0:
/// 1 - gamma^2 + (gamma^n - 1)(gamma^n + 1)^((2-n)/n). Zero at gamma = 1.
double angle_stationarity_residual(SideRatio gamma, Degree n);

/// Degenerate / Right / Obtuse / Acute, or the exclusion passthrough.
std::variant<TriangleClass, Exclusion> classify_triangle(SideRatio gamma, Degree n);

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline double to_degrees(double radians) noexcept { return radians / pi * 180.0; }
inline double to_radians(double degrees) noexcept { return degrees / 180.0 * pi; }

}  // namespace npyth
