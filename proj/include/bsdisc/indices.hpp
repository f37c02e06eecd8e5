#pragma once

// Incongruence indices and the prime sets that control which primes can be
// discriminator values.

#include <vector>

#include "bsdisc/sequence.hpp"

namespace bsdisc {

/// Largest k such that u_q(1..k) are pairwise incongruent mod m. Never
/// exceeds m.
u64 incongruence_index(const SequenceSpec &spec, Modulus m);

/// Primes p > 3 with ord_p(9) = (p-1)/2, split by p mod 4 and ord_p(3):
///   P1: p = 1 (4), ord_p(3) = p-1
///   P2: p = 3 (4), ord_p(3) = (p-1)/2
///   P3: p = 3 (4), ord_p(3) = p-1
enum class PPart { none, P1, P2, P3 };

struct PMembership {
    bool in_p;
    PPart part;
    friend bool operator==(const PMembership &, const PMembership &) = default;
};

/// Membership of p in P relative to the sequence prime q. Throws
/// std::invalid_argument when p <= 3, p == q, or p is not prime.
PMembership p_membership(u64 p, u64 q);

/// p > 3 prime with ord_p(9) = (p-1)/2, ignoring the p != q exclusion.
bool in_p_set(u64 p);

/// S(p; r) = {3 * 9^x - 9^y mod p : 1 <= x <= r/2, 1 <= y <= (r+1)/2} u {0},
/// sorted ascending.
std::vector<u64> s_set(u64 p, u64 r);

/// h(p) = max{r : S(p; r) != Z/pZ}, which equals the maximum of the
/// incongruence index mod p over all admissible q. Requires p in P; gives
/// up with std::runtime_error if S(p; r) is not full by r = 2p.
u64 h_universal(u64 p);

/// q in Q: q > 5, q = 3 (mod 4), ord_q(3) = (q-1)/2. `alpha_mod_q` is
/// (3^((q-1)/2) - 1)/q reduced mod q, which is all the closed form below
/// needs; the exact integer has ~q/4 digits.
struct QMembership {
    bool in_q;
    u64 alpha_mod_q;
    bool wieferich_like;  // 3^((q-1)/2) = 1 (mod q^2)
};

QMembership q_membership(u64 q);

/// Closed form for iota_q(q^2) when q in Q and 3^((q-1)/2) != 1 (mod q^2):
///   2 alpha a square mod q:  2m - 1 + (q-1)/2, m minimal with 9^m = 2/alpha
///   otherwise:               2m - 2 + (q-1)/2, m minimal with 9^m = -6/alpha
/// Throws std::domain_error outside those hypotheses.
u64 iota_q_squared_closed(u64 q);

struct CharSumResult {
    u64 set_size;
    double max_magnitude;
};

/// Enumerates A = {(x, y) in Z_{p-1}^2 : a g^x - b g^y = c (mod p)} and the
/// largest |sum_{(x,y) in A} e((s x + t y)/(p-1))| over (s, t) != (0, 0).
/// Requires prime 3 <= p <= 61, p not dividing abc, g a primitive root.
CharSumResult charsum_verify(u64 p, i64 a, i64 b, i64 c, u64 g);

}  // namespace bsdisc
