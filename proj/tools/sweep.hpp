#pragma once

#include <optional>
#include <string>
#include <vector>

namespace npyth::cli {

/// One sweep axis: "lo:hi:steps", or a single number (steps = 1, lo = hi).
struct AxisSpec {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;

    bool is_range() const noexcept { return steps > 1; }
    double at(int i) const noexcept {
        return steps < 2 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
};

AxisSpec parse_axis(const std::string& text);  // throws std::invalid_argument

enum class Quantity { Angle, AreaFixedLeg, AreaFixedPerimeter, Ncrit };

std::optional<Quantity> parse_quantity(const std::string& name);

struct SweepSpec {
    Quantity quantity = Quantity::Angle;
    AxisSpec gamma;
    std::optional<AxisSpec> n;  // unused for ncrit
    double a = 1.0;
    double P = 1.0;
};

/// Column headers for the quantity (gamma,n,theta_deg etc).
std::vector<std::string> column_names(Quantity q);

/// Row-major (gamma outer) table; nullopt cells are out of domain.
std::vector<std::vector<std::optional<double>>> run_sweep(const SweepSpec& spec);

/// 17 significant digits; round-trips to the identical binary value.
std::string format_double(double v);

std::string to_csv(const SweepSpec& spec, const std::vector<std::vector<std::optional<double>>>& rows);
std::string to_json(const SweepSpec& spec, const std::vector<std::vector<std::optional<double>>>& rows);

}  // namespace npyth::cli
