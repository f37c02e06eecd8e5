#pragma once

// Exact modular arithmetic on 64-bit operands. Every product goes through a
// 128-bit intermediate, so moduli up to 2^64 - 1 are safe.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bsdisc {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// A modulus m >= 1.
class Modulus {
public:
    explicit Modulus(u64 m) : m_(m)
    {
        if (m == 0) throw std::invalid_argument("modulus must be >= 1");
    }
    u64 value() const noexcept { return m_; }
    friend bool operator==(Modulus, Modulus) = default;

private:
    u64 m_;
};

struct PrimePower {
    u64 prime;
    unsigned exponent;
    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

/// Prime factorization with strictly increasing primes.
using Factorization = std::vector<PrimePower>;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

/// Signed integer reduced into [0, m).
u64 reduce(i64 a, Modulus m);

u64 mod_pow(i64 base, u64 exp, Modulus m);

/// Unchecked variant for hot loops; requires m >= 1 and base < m.
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Smallest k >= 1 with a^k = 1 (mod m). Throws std::domain_error when
/// gcd(a, m) > 1. Peels the prime factors of the Carmichael function.
u64 mult_order(i64 a, Modulus m);

/// Same contract as mult_order, by direct powering. Test oracle.
u64 mult_order_brute(i64 a, Modulus m);

/// Carmichael's lambda(m), the exponent of (Z/mZ)^*.
u64 carmichael_lambda(u64 m);

/// nu_p(n); the sign of n is ignored. Throws std::invalid_argument for n = 0.
unsigned valuation(u64 p, i64 n);

/// nu_p(r^n - 1) via the lifting-the-exponent formula. Requires
/// r = 1 (mod p), r != -1, r != 1, n >= 1.
unsigned lte_valuation(u64 p, i64 r, u64 n);

/// Deterministic for every 64-bit input.
bool is_prime(u64 n);

/// Complete factorization of n >= 2 (trial division, then Pollard-Brent rho).
Factorization factorize(u64 n);

/// Distinct prime divisors of n >= 2, increasing.
std::vector<u64> prime_divisors(u64 n);

/// True iff g generates (Z/pZ)^* for the prime p.
bool is_primitive_root(u64 g, u64 p);

/// Smallest g >= 2 generating (Z/pZ)^*.
u64 primitive_root(u64 p);

/// Euler's criterion: a is a nonzero square modulo the odd prime p.
bool is_quadratic_residue(u64 a, u64 p);

/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) > 1.
u64 inverse_mod(u64 a, u64 m);

}  // namespace bsdisc
