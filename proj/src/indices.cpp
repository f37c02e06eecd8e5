#include "bsdisc/indices.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace bsdisc {

namespace {

constexpr u64 kDenseSeenLimit = 10'000'000;

}  // namespace

u64 incongruence_index(const SequenceSpec &spec, Modulus m)
{
    ResidueStream stream(spec, m);
    if (m.value() <= kDenseSeenLimit) {
        std::vector<bool> seen(m.value(), false);
        for (;;) {
            const u64 r = stream.next();
            if (seen[r]) return stream.index() - 1;
            seen[r] = true;
        }
    }
    std::unordered_set<u64> seen;
    for (;;) {
        const u64 r = stream.next();
        if (!seen.insert(r).second) return stream.index() - 1;
    }
}

bool in_p_set(u64 p)
{
    if (p <= 3 || !is_prime(p)) return false;
    return mult_order(9, Modulus(p)) == (p - 1) / 2;
}

PMembership p_membership(u64 p, u64 q)
{
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("p_membership: p must be a prime > 3");
    if (p == q) throw std::invalid_argument("p_membership: p must differ from q");
    const u64 ord3 = mult_order(3, Modulus(p));
    PPart part = PPart::none;
    if (p % 4 == 1 && ord3 == p - 1)
        part = PPart::P1;
    else if (p % 4 == 3 && ord3 == (p - 1) / 2)
        part = PPart::P2;
    else if (p % 4 == 3 && ord3 == p - 1)
        part = PPart::P3;
    return {part != PPart::none, part};
}

std::vector<u64> s_set(u64 p, u64 r)
{
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("s_set: p must be a prime > 3");
    std::vector<bool> member(p, false);
    member[0] = true;
    u64 nine_x = 1;
    for (u64 x = 1; x <= r / 2; ++x) {
        nine_x = mul_mod(nine_x, 9, p);
        const u64 lhs = mul_mod(3, nine_x, p);
        u64 nine_y = 1;
        for (u64 y = 1; y <= (r + 1) / 2; ++y) {
            nine_y = mul_mod(nine_y, 9, p);
            member[(lhs + p - nine_y) % p] = true;
        }
    }
    std::vector<u64> out;
    for (u64 v = 0; v < p; ++v) {
        if (member[v]) out.push_back(v);
    }
    return out;
}

u64 h_universal(u64 p)
{
    if (!in_p_set(p)) throw std::invalid_argument("h_universal: p must lie in P, got " + std::to_string(p));

    // Grow S(p; r) one r at a time: an even r adds x = r/2 against every
    // admissible y, an odd r adds y = (r+1)/2 against every admissible x.
    std::vector<bool> member(p, false);
    member[0] = true;
    u64 size = 1;
    std::vector<u64> three_nine_x;  // 3 * 9^x for x = 1..r/2
    std::vector<u64> nine_y;        // 9^y for y = 1..(r+1)/2
    auto add = [&](u64 v) {
        if (!member[v]) {
            member[v] = true;
            ++size;
        }
    };
    for (u64 r = 1; r <= 2 * p; ++r) {
        if (r % 2 == 0) {
            const u64 prev = three_nine_x.empty() ? 3 : three_nine_x.back();
            const u64 lhs = mul_mod(prev, 9, p);
            three_nine_x.push_back(lhs);
            for (const u64 w : nine_y) add((lhs + p - w) % p);
        } else {
            const u64 prev = nine_y.empty() ? 1 : nine_y.back();
            const u64 w = mul_mod(prev, 9, p);
            nine_y.push_back(w);
            for (const u64 lhs : three_nine_x) add((lhs + p - w) % p);
        }
        if (size == p) return r - 1;
    }
    throw std::runtime_error("h_universal: S(p; r) not full by r = 2p for p = " + std::to_string(p));
}

QMembership q_membership(u64 q)
{
    if (q < 5 || !is_prime(q)) throw std::invalid_argument("q_membership: q must be a prime >= 5");
    if (q >= (u64{1} << 32)) throw std::overflow_error("q_membership: q^2 exceeds 64 bits");
    QMembership out{false, 0, false};
    out.in_q = q > 5 && q % 4 == 3 && mult_order(3, Modulus(q)) == (q - 1) / 2;
    const u64 q2 = q * q;
    const u64 half_power = pow_mod(3, (q - 1) / 2, q2);
    out.wieferich_like = half_power == 1;
    // Only meaningful when 3^((q-1)/2) = 1 (mod q).
    if (half_power % q == 1) out.alpha_mod_q = ((half_power + q2 - 1) % q2) / q;
    return out;
}

u64 iota_q_squared_closed(u64 q)
{
    const QMembership qm = q_membership(q);
    if (!qm.in_q) throw std::domain_error("iota_q_squared_closed: q not in Q");
    if (qm.wieferich_like) throw std::domain_error("iota_q_squared_closed: 3^((q-1)/2) = 1 (mod q^2) is excluded");

    const u64 alpha_inv = inverse_mod(qm.alpha_mod_q, q);
    const bool residue_case = is_quadratic_residue(mul_mod(2, qm.alpha_mod_q, q), q);
    const u64 target = residue_case ? mul_mod(2, alpha_inv, q) : mul_mod(q - 6 % q, alpha_inv, q);
    const u64 half = (q - 1) / 2;
    u64 nine_m = 1;
    for (u64 m = 1; m <= half; ++m) {
        nine_m = mul_mod(nine_m, 9, q);
        if (nine_m == target) return residue_case ? 2 * m - 1 + half : 2 * m - 2 + half;
    }
    throw std::logic_error("iota_q_squared_closed: target outside the subgroup generated by 9");
}

CharSumResult charsum_verify(u64 p, i64 a, i64 b, i64 c, u64 g)
{
    if (p < 3 || p > 61 || !is_prime(p)) throw std::invalid_argument("charsum_verify: p must be a prime in [3, 61]");
    const Modulus mp(p);
    const u64 ar = reduce(a, mp), br = reduce(b, mp), cr = reduce(c, mp);
    if (ar == 0 || br == 0 || cr == 0) throw std::invalid_argument("charsum_verify: p divides abc");
    if (!is_primitive_root(g, p)) throw std::invalid_argument("charsum_verify: g is not a primitive root");

    const u64 n = p - 1;
    std::vector<u64> g_pow(n);
    g_pow[0] = 1;
    for (u64 i = 1; i < n; ++i) g_pow[i] = mul_mod(g_pow[i - 1], g % p, p);

    std::vector<std::pair<u64, u64>> set;
    for (u64 x = 0; x < n; ++x) {
        const u64 lhs = mul_mod(ar, g_pow[x], p);
        for (u64 y = 0; y < n; ++y) {
            if ((lhs + p - mul_mod(br, g_pow[y], p)) % p == cr) set.emplace_back(x, y);
        }
    }

    std::vector<double> cos_tab(n), sin_tab(n);
    for (u64 k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        cos_tab[k] = std::cos(angle);
        sin_tab[k] = std::sin(angle);
    }
    double best = 0.0;
    for (u64 s = 0; s < n; ++s) {
        for (u64 t = 0; t < n; ++t) {
            if (s == 0 && t == 0) continue;
            double re = 0.0, im = 0.0;
            for (const auto &[x, y] : set) {
                const u64 k = (s * x + t * y) % n;
                re += cos_tab[k];
                im += sin_tab[k];
            }
            best = std::max(best, std::hypot(re, im));
        }
    }
    return {set.size(), best};
}

}  // namespace bsdisc
