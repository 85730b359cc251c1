#pragma once

#include <npyth/angle.hpp>
#include <npyth/critical_degree.hpp>

namespace npyth {

/// Sides of the generated triangle: a, b = gamma*a, c = a(gamma^n+1)^(1/n).
struct TriangleSides {
    double a;
    double b;
    double c;
};

enum class AreaFamily { FixedLeg, FixedPerimeter };

/// A triangle area together with the constraint family that produced it.
/// scale is the held-fixed quantity (leg a or perimeter P).
struct AreaValue {
    double area;
    AreaFamily family;
    double scale;
};

TriangleSides side_lengths(double a, SideRatio gamma, Degree n);

/// (1/2) a^2 gamma sin(theta).
AreaValue area_from_angle(double a, SideRatio gamma, double theta);

/// (a/2)^2 sqrt(4 gamma^2 - [gamma^2 + 1 - (gamma^n+1)^(2/n)]^2),
/// with the radicand clamped at zero inside a 1e-12 relative band.
AreaValue area_fixed_leg(double a, SideRatio gamma, Degree n);

/// a (gamma + 1 + (gamma^n+1)^(1/n)).
double perimeter(double a, SideRatio gamma, Degree n);

/// Fixed-perimeter area: the fixed-leg form evaluated at
/// a = P / (gamma + 1 + (gamma^n+1)^(1/n)).
AreaValue area_fixed_perimeter(double P, SideRatio gamma, Degree n);

/// (P^2/16) sqrt(4^((n+1)/n) - 16^(1/n)) / (1 + 2^((1-n)/n))^2:
/// the gamma = 1 member of the fixed-perimeter family.
AreaValue area_max_fixed_perimeter_isosceles(double P, Degree n);

/// n -> +inf fixed-perimeter limit: (1/4) sqrt(4 gamma^2 - 1)/(2 gamma + 1)^2 P^2.
AreaValue area_limit_pos_inf_fixed_perimeter(double P, SideRatio gamma);

/// n -> -inf fixed-perimeter limit: (1/4) gamma/(gamma+2)^2 sqrt(4 - gamma^2) P^2.
/// Requires 1 <= gamma < 2.
AreaValue area_limit_neg_inf_fixed_perimeter(double P, SideRatio gamma);

/// Isosceles fixed-leg area a^2 2^((1-n)/n) sqrt(1 - 4^((1-n)/n)).
/// Requires n >= 1 or n <= -1.
AreaValue area_isosceles_extremal(double a, Degree n);

/// n -> -inf fixed-leg limit: (1/4) a^2 gamma sqrt(4 - gamma^2).
/// Requires 1 <= gamma < 2.
AreaValue area_limit_neg_inf_fixed_leg(double a, SideRatio gamma);

/// Residual of dA/dn = 0 (bracketed product form): zero iff n = 2.
double area_dn_stationarity_residual(SideRatio gamma, Degree n);

/// Residual of the dA/dgamma = 0 condition; never zero for n > 0.
double area_dgamma_condition_residual(SideRatio gamma, Degree n);

}  // namespace npyth
