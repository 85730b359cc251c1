#pragma once

#include <string>
#include <utility>
#include <vector>

namespace npyth::cli {

/// Expected adjudication of each registered claim, frozen from an oracle
/// run. `verify` exits 0 only when the live report matches these.
inline const std::vector<std::pair<std::string, std::string>> kExpectedClaimStatuses = {
    {"C-EQ6", "VERIFIED"},
    {"C-EQ11", "VERIFIED"},
    {"C-EQ21", "REFUTED"},
    {"C-EQ22", "REFUTED"},
    {"C-EQANGLE", "REFUTED"},
    {"C-GAMMA2", "VERIFIED"},
    {"C-N2ONLY", "VERIFIED"},
    {"C-EQ20", "VERIFIED"},
    {"C-SQRT2", "VERIFIED"},
    {"C-EQ26", "VERIFIED"},
    {"C-EQ30EQ", "VERIFIED"},
};

}  // namespace npyth::cli
