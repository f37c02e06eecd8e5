#include "bsdisc/modarith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace bsdisc {

namespace {

using i128 = __int128;

unsigned valuation_of_magnitude(u64 p, u128 n)
{
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

u128 magnitude(i128 n) { return n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n); }

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s)
{
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr std::array<u64, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Brent's variant of Pollard's rho. n must be odd and composite.
u64 find_factor(u64 n)
{
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 kBatch = 128;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += kBatch;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::vector<u64> &out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const u64 d = find_factor(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

u64 reduce(i64 a, Modulus m)
{
    const i128 r = static_cast<i128>(a) % static_cast<i128>(m.value());
    return static_cast<u64>(r < 0 ? r + m.value() : r);
}

u64 pow_mod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 mod_pow(i64 base, u64 exp, Modulus m) { return pow_mod(reduce(base, m), exp, m.value()); }

u64 carmichael_lambda(u64 m)
{
    if (m <= 2) return 1;
    u64 lambda = 1;
    for (const auto &[p, e] : factorize(m)) {
        u64 part;
        if (p == 2) {
            part = e <= 2 ? (u64{1} << (e - 1)) : (u64{1} << (e - 2));
        } else {
            part = p - 1;
            for (unsigned i = 1; i < e; ++i) part *= p;
        }
        lambda = std::lcm(lambda, part);
    }
    return lambda;
}

u64 mult_order(i64 a, Modulus m)
{
    const u64 mod = m.value();
    if (mod == 1) return 1;
    const u64 base = reduce(a, m);
    if (std::gcd(base, mod) != 1) throw std::domain_error("mult_order: base not coprime to modulus");
    u64 order = carmichael_lambda(mod);
    for (const u64 r : prime_divisors(order)) {
        while (order % r == 0 && pow_mod(base, order / r, mod) == 1) order /= r;
    }
    return order;
}

u64 mult_order_brute(i64 a, Modulus m)
{
    const u64 mod = m.value();
    if (mod == 1) return 1;
    const u64 base = reduce(a, m);
    if (std::gcd(base, mod) != 1) throw std::domain_error("mult_order: base not coprime to modulus");
    u64 x = base;
    u64 k = 1;
    while (x != 1) {
        x = mul_mod(x, base, mod);
        ++k;
    }
    return k;
}

unsigned valuation(u64 p, i64 n)
{
    if (p < 2) throw std::invalid_argument("valuation: p must be prime");
    if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
    return valuation_of_magnitude(p, magnitude(n));
}

unsigned lte_valuation(u64 p, i64 r, u64 n)
{
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("lte_valuation: p must be prime");
    if (n == 0) throw std::invalid_argument("lte_valuation: n must be positive");
    if (r == 1) throw std::invalid_argument("lte_valuation: r = 1 gives r^n - 1 = 0");
    if (r == -1) throw std::invalid_argument("lte_valuation: r = -1 is excluded");
    const i128 rm1 = static_cast<i128>(r) - 1;
    if (magnitude(rm1) % p != 0) throw std::invalid_argument("lte_valuation: r must be 1 mod p");

    if (p == 2 && n % 2 == 0) {
        // nu_2(r^2 - 1) = nu_2(r - 1) + nu_2(r + 1)
        const i128 rp1 = static_cast<i128>(r) + 1;
        return valuation_of_magnitude(2, n) + valuation_of_magnitude(2, magnitude(rm1)) +
               valuation_of_magnitude(2, magnitude(rp1)) - 1;
    }
    return valuation_of_magnitude(p, n) + valuation_of_magnitude(p, magnitude(rm1));
}

bool is_prime(u64 n)
{
    if (n < 2) return false;
    for (const u64 p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 97 * 97) return true;

    u64 d = n - 1;
    const unsigned s = static_cast<unsigned>(std::countr_zero(d));
    d >>= s;
    // The first twelve primes form a deterministic witness set below 3.3e24.
    for (const u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(u64 n)
{
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    std::vector<u64> primes;
    for (const u64 p : kSmallPrimes) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    for (u64 p = 101; n > 1 && p <= 1000 && p * p <= n; p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());

    Factorization result;
    for (const u64 p : primes) {
        if (!result.empty() && result.back().prime == p)
            ++result.back().exponent;
        else
            result.push_back({p, 1});
    }
    return result;
}

std::vector<u64> prime_divisors(u64 n)
{
    std::vector<u64> out;
    if (n < 2) return out;
    for (const auto &pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

bool is_primitive_root(u64 g, u64 p)
{
    if (!is_prime(p)) throw std::invalid_argument("is_primitive_root: p must be prime");
    g %= p;
    if (g == 0) return false;
    if (p == 2) return g == 1;
    for (const u64 r : prime_divisors(p - 1)) {
        if (pow_mod(g, (p - 1) / r, p) == 1) return false;
    }
    return true;
}

u64 primitive_root(u64 p)
{
    if (!is_prime(p)) throw std::invalid_argument("primitive_root: p must be prime");
    if (p == 2) return 1;
    for (u64 g = 2;; ++g) {
        if (is_primitive_root(g, p)) return g;
    }
}

bool is_quadratic_residue(u64 a, u64 p)
{
    a %= p;
    return a != 0 && pow_mod(a, (p - 1) / 2, p) == 1;
}

u64 inverse_mod(u64 a, u64 m)
{
    i128 t = 0, new_t = 1;
    i128 r = m, new_r = a % m;
    while (new_r != 0) {
        const i128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("inverse_mod: not invertible");
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

}  // namespace bsdisc
