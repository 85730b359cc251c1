#pragma once

#include <npyth/angle.hpp>

namespace npyth {

/// Root of (gamma^n + 1)^(1/n) = gamma - 1 on n < 0, for 1 < gamma < 2.
/// The least-negative degree that still yields a real vertex angle.
struct CriticalDegree {
    double gamma;
    double n_crit;
    double residual;
    double bracket_lo;  // sign-change bracket handed to bisection
    double bracket_hi;  // bracket_lo < n_crit < bracket_hi < 0
};

inline constexpr double default_root_tolerance = 1e-12;

/// (gamma^n + 1)^(1/n) - (gamma - 1). Negative as n -> 0-, positive as
/// n -> -inf (limit 2 - gamma), crossing zero once at n_crit.
double ncrit_residual(SideRatio gamma, Degree n);

/// Bracketing search plus bisection to |residual| <= tol_root.
/// Throws NoCriticalDegreeError (gamma = 1), RatioAtLeastTwoError
/// (gamma >= 2), InconclusiveBracketError (no sign change found).
/// Results are memoized per (gamma, tol_root) bit pattern.
CriticalDegree solve_ncrit(SideRatio gamma, double tol_root = default_root_tolerance);

/// True iff (gamma, n) yields a real vertex angle: n >= 1 always; n < 0
/// needs gamma = 1, or 1 < gamma < 2 with n <= n_crit(gamma).
bool is_real_domain(SideRatio gamma, Degree n);

}  // namespace npyth
