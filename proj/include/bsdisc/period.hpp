#pragma once

#include <optional>

#include "bsdisc/sequence.hpp"

namespace bsdisc {

/// Eventual period of u_q modulo d. `pure` holds iff the cycle starts at
/// index 1, i.e. pre_period == 1.
struct PeriodInfo {
    u64 period;
    u64 pre_period;
    bool pure;
    friend bool operator==(const PeriodInfo &, const PeriodInfo &) = default;
};

/// Closed form. With d = 3^a * delta, 3 not dividing delta:
/// period = ord_{4 delta}(9), doubled unless d = q and ord_q(3) is odd;
/// pre-period = max(1, a). Throws std::invalid_argument for d < 2.
PeriodInfo period_closed(const SequenceSpec &spec, u64 d);

/// pre_period + 2 * period + 8 from the closed form.
u64 default_horizon(const SequenceSpec &spec, u64 d);

/// Simulation oracle. Walks the pair states (u(n), u(n+1)) mod d, which
/// determine the rest of the sequence, and reports the first repeated state.
/// Only indices up to min(horizon, 4 d^2) are examined; failing to close a
/// cycle inside that window throws std::runtime_error.
PeriodInfo period_brute(const SequenceSpec &spec, u64 d, std::optional<u64> horizon = std::nullopt);

}  // namespace bsdisc
