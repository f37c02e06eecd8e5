#include "bsdisc/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace bsdisc {

namespace {

constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t n)
{
    std::vector<char> composite(n + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi < lo) return out;

    const auto base = small_primes(isqrt(hi));
    std::vector<char> composite;
    for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
        const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
        composite.assign(seg_hi - seg_lo + 1, 0);
        for (const std::uint64_t p : base) {
            if (p * p > seg_hi) break;
            std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= seg_hi; j += p) composite[j - seg_lo] = 1;
        }
        for (std::uint64_t i = seg_lo; i <= seg_hi; ++i) {
            if (!composite[i - seg_lo]) out.push_back(i);
        }
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
    return out;
}

std::vector<std::uint64_t> first_primes_from(std::uint64_t from, std::size_t count)
{
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t lo = std::max<std::uint64_t>(from, 2);
    std::uint64_t width = 1 << 20;
    while (out.size() < count) {
        const auto chunk = primes_in_range(lo, lo + width - 1);
        for (const auto p : chunk) {
            if (out.size() == count) break;
            out.push_back(p);
        }
        lo += width;
        width = std::min<std::uint64_t>(width * 2, std::uint64_t{1} << 26);
    }
    return out;
}

}  // namespace bsdisc
