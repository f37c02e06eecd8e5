#include "bsdisc/period.hpp"

#include <stdexcept>
#include <unordered_map>

namespace bsdisc {

PeriodInfo period_closed(const SequenceSpec &spec, u64 d)
{
    if (d < 2) throw std::invalid_argument("period: d must be >= 2");
    if (d > kMaxModulus) throw std::overflow_error("period: d too large");
    u64 delta = d;
    u64 alpha = 0;
    while (delta % 3 == 0) {
        delta /= 3;
        ++alpha;
    }
    const u64 half = mult_order(9, Modulus(4 * delta));
    const bool odd_case = d == spec.q() && mult_order(3, Modulus(spec.q())) % 2 == 1;
    const u64 pre = alpha > 1 ? alpha : 1;
    return {odd_case ? half : 2 * half, pre, pre == 1};
}

u64 default_horizon(const SequenceSpec &spec, u64 d)
{
    const PeriodInfo closed = period_closed(spec, d);
    return closed.pre_period + 2 * closed.period + 8;
}

PeriodInfo period_brute(const SequenceSpec &spec, u64 d, std::optional<u64> horizon)
{
    if (d < 2) throw std::invalid_argument("period: d must be >= 2");
    if (d > (u64{1} << 31)) throw std::overflow_error("period_brute: d too large to simulate");
    const u64 cap = 4 * d * d;
    const u64 limit = std::min(horizon.value_or(default_horizon(spec, d)), cap);

    ResidueStream stream(spec, Modulus(d));
    std::unordered_map<u64, u64> first_seen;
    first_seen.reserve(static_cast<std::size_t>(std::min<u64>(limit, 1 << 20)));
    u64 current = stream.next();
    for (u64 n = 1; n + 1 <= limit; ++n) {
        const u64 following = stream.next();
        const u64 state = current * d + following;
        const auto [it, inserted] = first_seen.try_emplace(state, n);
        if (!inserted) {
            const u64 n0 = it->second;
            return {n - n0, n0, n0 == 1};
        }
        current = following;
    }
    throw std::runtime_error("period_brute: no period confirmed within horizon " + std::to_string(limit));
}

}  // namespace bsdisc
