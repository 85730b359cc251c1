#include <npyth/critical_degree.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

namespace npyth {

namespace {

constexpr double kBracketFloor = -1e6;

double residual_unchecked(double g, double n) {
    // gamma in (1,2), n < 0: gamma^n in (0,1), safe directly.
    return std::exp(std::log1p(std::pow(g, n)) / n) - (g - 1.0);
}

std::mutex g_cache_mutex;
std::map<std::pair<std::uint64_t, std::uint64_t>, CriticalDegree> g_cache;

}  // namespace

double ncrit_residual(SideRatio gamma, Degree n) {
    const double g = gamma.value();
    const double nn = n.value();
    if (g <= 1.0 || g >= 2.0) throw std::domain_error("ncrit_residual requires 1 < gamma < 2");
    if (nn >= 0.0) throw std::domain_error("ncrit_residual requires n < 0");
    return residual_unchecked(g, nn);
}

CriticalDegree solve_ncrit(SideRatio gamma, double tol_root) {
    const double g = gamma.value();
    if (g == 1.0) throw NoCriticalDegreeError();
    if (g >= 2.0) throw RatioAtLeastTwoError(g);
    if (g < 1.0) throw std::domain_error("solve_ncrit requires gamma > 1");
    if (!(tol_root > 0.0)) throw std::domain_error("tol_root must be positive");

    const auto key = std::make_pair(std::bit_cast<std::uint64_t>(g), std::bit_cast<std::uint64_t>(tol_root));
    {
        std::lock_guard lock(g_cache_mutex);
        if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
    }

    // The residual decreases with n: limit -(g-1) < 0 as n -> 0-, limit
    // 2-g > 0 as n -> -inf. Expand [lo, hi] geometrically until it
    // straddles the sign change.
    double lo = -1.0, hi = -0.5;
    double flo = residual_unchecked(g, lo);
    double fhi = residual_unchecked(g, hi);
    while (flo * fhi > 0.0) {
        if (flo <= 0.0) {
            hi = lo;
            fhi = flo;
            lo *= 2.0;
            if (lo < kBracketFloor)
                throw InconclusiveBracketError("no sign change of the critical-degree residual above n = -1e6");
            flo = residual_unchecked(g, lo);
        } else {
            lo = hi;
            flo = fhi;
            hi /= 2.0;
            if (hi > -1e-300)
                throw InconclusiveBracketError("critical-degree residual did not change sign as n -> 0-");
            fhi = residual_unchecked(g, hi);
        }
    }

    // Uniqueness scan: one sign change across the bracket on 200 points.
    {
        int flips = 0;
        double prev = residual_unchecked(g, lo);
        for (int i = 1; i <= 200; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) / 200.0;
            const double f = residual_unchecked(g, x);
            if (prev != 0.0 && f != 0.0 && (prev > 0.0) != (f > 0.0)) ++flips;
            prev = f;
        }
        if (flips != 1)
            throw InconclusiveBracketError("critical-degree residual is not single-rooted on the bracket");
    }

    const double bracket_lo = lo, bracket_hi = hi;
    double mid = 0.5 * (lo + hi);
    double fmid = residual_unchecked(g, mid);
    for (int i = 0; i < 500 && std::abs(fmid) > tol_root; ++i) {
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        mid = 0.5 * (lo + hi);
        fmid = residual_unchecked(g, mid);
        if (hi - lo <= std::abs(mid) * 1e-17) break;
    }
    if (std::abs(fmid) > tol_root)
        throw InconclusiveBracketError("bisection stalled before reaching the residual tolerance");

    const CriticalDegree result{g, mid, fmid, bracket_lo, bracket_hi};
    std::lock_guard lock(g_cache_mutex);
    g_cache.emplace(key, result);
    return result;
}

bool is_real_domain(SideRatio gamma, Degree n) {
    const double g = gamma.value();
    const double nn = n.value();
    if (nn >= 1.0) return true;
    if (nn > 0.0) return false;
    if (g == 1.0) return true;
    if (g >= 2.0) return false;
    return nn <= solve_ncrit(gamma).n_crit;
}

}  // namespace npyth
