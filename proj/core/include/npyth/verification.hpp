#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <npyth/area.hpp>

namespace npyth {

enum class ClaimStatus { Verified, Refuted, Inconclusive };

std::string to_string(ClaimStatus s);

/// Adjudication of one numbered claim: id, source anchor, the independent
/// oracle used, the outcome, and the worst-case numeric evidence.
struct ClaimRecord {
    struct Witness {
        std::optional<double> gamma;
        std::optional<double> n;
        std::optional<double> a;
        std::optional<double> P;
    };

    std::string id;
    std::string paper_ref;
    std::string oracle;
    ClaimStatus status = ClaimStatus::Inconclusive;
    double worst_residual = 0.0;
    Witness witness;
    std::string note;
};

/// Numerically stable Heron area (Kahan ordering). Throws std::domain_error
/// if the triangle inequality is violated beyond a 1e-9 relative slack;
/// returns 0 for degenerate triangles inside the slack.
double heron_area(const TriangleSides& sides);

/// |c^2 - (a^2 + b^2 - 2ab cos theta)| / c^2 with c from the generating
/// relation and theta from vertex_angle. Near zero by construction.
double law_of_cosines_residual(double a, SideRatio gamma, Degree n);

/// Central difference (f(x+h) - f(x-h)) / (2h).
/// h <= 0 selects the default step 1e-6 * max(1, |x|).
double finite_difference(const std::function<double(double)>& f, double x, double h = 0.0);

/// Evaluates every registered claim on fixed grids/seeds and returns the
/// records in registration order. Deterministic across runs.
std::vector<ClaimRecord> run_claims_report();

/// JSON document: { version, grid_spec, claims: [...] }.
std::string claims_report_json(const std::vector<ClaimRecord>& claims);

}  // namespace npyth
