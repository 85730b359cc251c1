#include "sweep.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include <npyth/area.hpp>
#include <npyth/critical_degree.hpp>
#include <npyth/verification.hpp>

namespace npyth::cli {

AxisSpec parse_axis(const std::string& text) {
    const auto c1 = text.find(':');
    std::size_t pos = 0;
    AxisSpec spec;
    try {
        if (c1 == std::string::npos) {
            spec.lo = spec.hi = std::stod(text, &pos);
            spec.steps = 1;
            if (pos != text.size()) throw std::invalid_argument("");
            return spec;
        }
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos) throw std::invalid_argument("");
        const std::string lo_s = text.substr(0, c1);
        const std::string hi_s = text.substr(c1 + 1, c2 - c1 - 1);
        const std::string st_s = text.substr(c2 + 1);
        spec.lo = std::stod(lo_s, &pos);
        if (pos != lo_s.size()) throw std::invalid_argument("");
        spec.hi = std::stod(hi_s, &pos);
        if (pos != hi_s.size()) throw std::invalid_argument("");
        spec.steps = std::stoi(st_s, &pos);
        if (pos != st_s.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad axis '" + text + "': expected NUMBER or lo:hi:steps");
    }
    if (spec.steps < 1) throw std::invalid_argument("axis steps must be >= 1");
    if (spec.steps == 1 || spec.lo == spec.hi) {
        // Degenerate range collapses to a fixed value.
        spec.hi = spec.lo;
        spec.steps = 1;
        return spec;
    }
    if (spec.lo > spec.hi) throw std::invalid_argument("axis lo must be < hi");
    return spec;
}

std::optional<Quantity> parse_quantity(const std::string& name) {
    if (name == "angle") return Quantity::Angle;
    if (name == "area_fixed_leg") return Quantity::AreaFixedLeg;
    if (name == "area_fixed_perimeter") return Quantity::AreaFixedPerimeter;
    if (name == "ncrit") return Quantity::Ncrit;
    return std::nullopt;
}

std::vector<std::string> column_names(Quantity q) {
    switch (q) {
        case Quantity::Angle: return {"gamma", "n", "theta_deg"};
        case Quantity::AreaFixedLeg: return {"gamma", "n", "area"};
        case Quantity::AreaFixedPerimeter: return {"gamma", "n", "area"};
        case Quantity::Ncrit: return {"gamma", "n_crit"};
    }
    return {};
}

namespace {

std::optional<double> eval_cell(const SweepSpec& spec, double g, double n) {
    try {
        switch (spec.quantity) {
            case Quantity::Angle: {
                const auto out = vertex_angle(SideRatio::excluded_regime(g), Degree(n));
                if (!out.is_real()) return std::nullopt;
                return to_degrees(*out.theta);
            }
            case Quantity::AreaFixedLeg:
                return area_fixed_leg(spec.a, SideRatio::excluded_regime(g), Degree(n)).area;
            case Quantity::AreaFixedPerimeter:
                return area_fixed_perimeter(spec.P, SideRatio::excluded_regime(g), Degree(n)).area;
            case Quantity::Ncrit:
                return solve_ncrit(SideRatio(g)).n_crit;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::vector<std::optional<double>>> run_sweep(const SweepSpec& spec) {
    std::vector<std::vector<std::optional<double>>> rows;
    if (spec.quantity == Quantity::Ncrit) {
        rows.reserve(spec.gamma.steps);
        for (int i = 0; i < spec.gamma.steps; ++i) {
            const double g = spec.gamma.at(i);
            rows.push_back({g, eval_cell(spec, g, 0.0)});
        }
        return rows;
    }
    const AxisSpec naxis = spec.n.value_or(AxisSpec{});
    rows.reserve(static_cast<std::size_t>(spec.gamma.steps) * naxis.steps);
    for (int i = 0; i < spec.gamma.steps; ++i) {
        const double g = spec.gamma.at(i);
        for (int j = 0; j < naxis.steps; ++j) {
            const double n = naxis.at(j);
            rows.push_back({g, n, eval_cell(spec, g, n)});
        }
    }
    return rows;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const SweepSpec& spec, const std::vector<std::vector<std::optional<double>>>& rows) {
    std::string out;
    const auto cols = column_names(spec.quantity);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i] ? format_double(*row[i]) : "excluded";
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const SweepSpec& spec, const std::vector<std::vector<std::optional<double>>>& rows) {
    nlohmann::ordered_json doc;
    const auto cols = column_names(spec.quantity);
    switch (spec.quantity) {
        case Quantity::Angle: doc["quantity"] = "angle"; break;
        case Quantity::AreaFixedLeg: doc["quantity"] = "area_fixed_leg"; break;
        case Quantity::AreaFixedPerimeter: doc["quantity"] = "area_fixed_perimeter"; break;
        case Quantity::Ncrit: doc["quantity"] = "ncrit"; break;
    }
    doc["columns"] = cols;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (cell) jr.push_back(*cell);
            else jr.push_back("excluded");
        }
        doc["rows"].push_back(jr);
    }
    return doc.dump();
}

}  // namespace npyth::cli
