#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bsdisc {

/// Primes in [lo, hi], ascending. Segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) { return primes_in_range(2, n); }

/// The first `count` primes that are >= `from`.
std::vector<std::uint64_t> first_primes_from(std::uint64_t from, std::size_t count);

}  // namespace bsdisc
