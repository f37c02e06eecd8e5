#pragma once

// Cross-check sweeps behind `bsdisc verify`. Each suite pits a closed form
// against its brute-force oracle or checks a numerically stated bound.

#include <string>
#include <string_view>
#include <vector>

namespace bsdisc {

struct VerifyCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    bool passed() const;
};

/// oracle, period, index, iota2, charsum, all
const std::vector<std::string> &verify_suites();

/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verify(std::string_view suite, unsigned threads = 1);

/// x < bound, where values within a relative 1e-9 of the bound count as
/// equal (floating character sums carry ~1e-13 relative error).
bool strictly_below(double x, double bound);

}  // namespace bsdisc
