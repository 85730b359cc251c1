#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <npyth/area.hpp>
#include <npyth/critical_degree.hpp>
#include <npyth/verification.hpp>

#include "expectations.hpp"
#include "sweep.hpp"

namespace {

using namespace npyth;
using namespace npyth::cli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitExcluded = 2;
constexpr int kExitClaimMismatch = 3;

double env_or(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    char* end = nullptr;
    const double x = std::strtod(v, &end);
    return (end && *end == '\0') ? x : fallback;
}

const char* exclusion_text(Exclusion e) {
    switch (e) {
        case Exclusion::FractionalPositiveDegree: return "fractional positive degree (0 < n < 1)";
        case Exclusion::ExceedsCriticalDegree: return "exceeds critical degree";
        case Exclusion::RatioAtLeastTwo: return "ratio >= 2";
    }
    return "unknown";
}

int cmd_angle(double gamma, double n, bool radians) {
    const auto out = vertex_angle(SideRatio::excluded_regime(gamma), Degree(n));
    if (out.is_real()) {
        std::cout << format_double(radians ? *out.theta : to_degrees(*out.theta)) << "\n";
        return kExitOk;
    }
    std::cout << "excluded: " << exclusion_text(*out.exclusion);
    if (*out.exclusion == Exclusion::ExceedsCriticalDegree && gamma > 1.0 && gamma < 2.0) {
        std::cout << " (n_crit ~ " << format_double(solve_ncrit(SideRatio(gamma)).n_crit) << ")";
    }
    std::cout << "\n";
    return kExitExcluded;
}

int cmd_ncrit(double gamma, double tol) {
    try {
        const CriticalDegree cd = solve_ncrit(SideRatio(gamma), tol);
        std::cout << "n_crit = " << format_double(cd.n_crit)
                  << " residual = " << format_double(cd.residual) << "\n";
        return kExitOk;
    } catch (const NoCriticalDegreeError&) {
        std::cout << "no critical degree (all n < 0 valid)\n";
        return kExitExcluded;
    } catch (const RatioAtLeastTwoError&) {
        std::cout << "excluded: ratio >= 2 admits no real negative-degree angles\n";
        return kExitExcluded;
    }
}

int cmd_area(double a, double P, bool has_a, double gamma, double n) {
    try {
        const AreaValue v = has_a ? area_fixed_leg(a, SideRatio::excluded_regime(gamma), Degree(n))
                                  : area_fixed_perimeter(P, SideRatio::excluded_regime(gamma), Degree(n));
        std::cout << format_double(v.area) << "\n";
        return kExitOk;
    } catch (const std::domain_error& e) {
        std::cout << "excluded: " << e.what() << "\n";
        return kExitExcluded;
    }
}

int cmd_verify(const std::string& format, const std::string& expectations_path) {
    const auto claims = run_claims_report();

    std::map<std::string, std::string> expected;
    if (!expectations_path.empty()) {
        std::ifstream in(expectations_path);
        if (!in) {
            std::cerr << "cannot open expectations file: " << expectations_path << "\n";
            return kExitUsage;
        }
        nlohmann::json doc = nlohmann::json::parse(in);
        for (auto it = doc.begin(); it != doc.end(); ++it) expected[it.key()] = it.value().get<std::string>();
    } else {
        for (const auto& [id, status] : kExpectedClaimStatuses) expected[id] = status;
    }

    if (format == "json") {
        std::cout << claims_report_json(claims) << "\n";
    } else {
        for (const auto& c : claims) {
            std::cout << c.id << " " << to_string(c.status)
                      << " worst_residual=" << format_double(c.worst_residual)
                      << " oracle=\"" << c.oracle << "\"";
            if (!c.note.empty()) std::cout << " note=\"" << c.note << "\"";
            std::cout << "\n";
        }
    }

    bool ok = claims.size() == expected.size();
    for (const auto& c : claims) {
        auto it = expected.find(c.id);
        if (it == expected.end() || it->second != to_string(c.status)) ok = false;
    }
    return ok ? kExitOk : kExitClaimMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"real-exponent generalized Pythagorean relation: angles, domains, areas, claim checks"};
    app.require_subcommand(1);

    set_domain_tolerance(env_or("NPYTH_TOL_DOMAIN", domain_tolerance()));
    const double default_tol_root = env_or("NPYTH_TOL_ROOT", npyth::default_root_tolerance);

    double gamma = 1.0, n = 2.0, tol = default_tol_root, a = 1.0, P = 1.0;
    bool radians = false;
    std::string quantity, gamma_axis, n_axis, format = "csv", expectations_path;

    auto* angle = app.add_subcommand("angle", "vertex angle for (gamma, n)");
    angle->add_option("--gamma", gamma, "side ratio b/a")->required();
    angle->add_option("--n", n, "degree")->required();
    angle->add_flag("--radians", radians, "print radians instead of degrees");
    angle->add_flag("--degrees", "print degrees (the default)");
    angle->add_option("--domain-tol", "clamp band around |cos arg| = 1")
        ->check(CLI::NonNegativeNumber)
        ->each([](const std::string& s) { npyth::set_domain_tolerance(std::stod(s)); });

    auto* ncrit = app.add_subcommand("ncrit", "critical degree for gamma in (1, 2)");
    ncrit->add_option("--gamma", gamma, "side ratio b/a")->required();
    ncrit->add_option("--tol", tol, "residual tolerance for the root");

    auto* area = app.add_subcommand("area", "triangle area for (gamma, n)");
    auto* opt_a = area->add_option("--a", a, "fixed leg length");
    auto* opt_p = area->add_option("--perimeter", P, "fixed perimeter");
    area->add_option("--gamma", gamma, "side ratio b/a")->required();
    area->add_option("--n", n, "degree")->required();
    opt_a->excludes(opt_p);

    auto* sweep = app.add_subcommand("sweep", "emit figure data over gamma and/or n axes");
    sweep->add_option("--quantity", quantity, "angle | area_fixed_leg | area_fixed_perimeter | ncrit")
        ->required();
    sweep->add_option("--gamma", gamma_axis, "NUMBER or lo:hi:steps")->required();
    sweep->add_option("--n", n_axis, "NUMBER or lo:hi:steps");
    sweep->add_option("--a", a, "fixed leg for area_fixed_leg (default 1)");
    sweep->add_option("--perimeter", P, "fixed perimeter for area_fixed_perimeter (default 1)");
    sweep->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "run the claims report");
    verify->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--expectations", expectations_path, "JSON file of id -> expected status");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(angle)) return cmd_angle(gamma, n, radians);
        if (app.got_subcommand(ncrit)) return cmd_ncrit(gamma, tol);
        if (app.got_subcommand(area)) {
            if (opt_a->count() == 0 && opt_p->count() == 0) {
                std::cerr << "area: exactly one of --a / --perimeter is required\n";
                return kExitUsage;
            }
            return cmd_area(a, P, opt_a->count() > 0, gamma, n);
        }
        if (app.got_subcommand(sweep)) {
            const auto q = parse_quantity(quantity);
            if (!q) {
                std::cerr << "unknown quantity: " << quantity << "\n";
                return kExitUsage;
            }
            SweepSpec spec;
            spec.quantity = *q;
            spec.gamma = parse_axis(gamma_axis);
            if (*q != Quantity::Ncrit) {
                if (n_axis.empty()) {
                    std::cerr << "sweep: --n is required for this quantity\n";
                    return kExitUsage;
                }
                spec.n = parse_axis(n_axis);
            }
            spec.a = a;
            spec.P = P;
            const auto rows = run_sweep(spec);
            std::cout << (format == "json" ? to_json(spec, rows) + "\n" : to_csv(spec, rows));
            return kExitOk;
        }
        if (app.got_subcommand(verify)) {
            return cmd_verify(format == "csv" ? "text" : format, expectations_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
