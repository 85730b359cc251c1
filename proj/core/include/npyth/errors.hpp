#pragma once

#include <stdexcept>
#include <string>

namespace npyth {

/// Thrown when an operation restricted to side ratios below 2 receives
/// gamma >= 2 (negative-degree relations have no real solutions there).
struct RatioAtLeastTwoError : std::domain_error {
    explicit RatioAtLeastTwoError(double gamma)
        : std::domain_error("no real vertex angle for negative degrees with side ratio >= 2 (gamma = " +
                            std::to_string(gamma) + ")") {}
};

/// Thrown by the critical-degree solver for gamma = 1: every negative
/// degree yields a real angle, so no finite critical degree exists.
struct NoCriticalDegreeError : std::domain_error {
    NoCriticalDegreeError()
        : std::domain_error("no critical degree exists for gamma = 1; all negative degrees are valid") {}
};

/// Thrown when bracket expansion fails to enclose a sign change before
/// hitting the hard floor. The solver refuses to guess.
struct InconclusiveBracketError : std::runtime_error {
    explicit InconclusiveBracketError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace npyth
