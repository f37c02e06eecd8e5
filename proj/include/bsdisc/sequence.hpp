#pragma once

// The sequence u_q(j) = (3^j - q*(-1)^j) / 4 with q* = (-1)^((q-1)/2) q,
// for a prime q >= 5. It obeys u(j) = 2u(j-1) + 3u(j-2).

#include <boost/multiprecision/cpp_int.hpp>

#include "bsdisc/modarith.hpp"

namespace bsdisc {

using BigInt = boost::multiprecision::cpp_int;

class SequenceSpec {
public:
    /// Throws std::invalid_argument unless q is a prime >= 5.
    explicit SequenceSpec(i64 q);

    u64 q() const noexcept { return q_; }
    /// Signed companion; always 1 mod 4.
    i64 q_star() const noexcept { return q_star_; }

    friend bool operator==(const SequenceSpec &, const SequenceSpec &) = default;

private:
    u64 q_;
    i64 q_star_;
};

inline SequenceSpec make_spec(i64 q) { return SequenceSpec(q); }

/// Exact u_q(j), j >= 1. Terms may be negative when q = 3 (mod 4).
BigInt term_exact(const SequenceSpec &spec, u64 j);

/// Largest modulus accepted by the residue routines (4m must fit 64 bits).
inline constexpr u64 kMaxModulus = (~u64{0}) / 4;

/// u_q(j) mod m in [0, m). Evaluates (3^j - q*(-1)^j) mod 4m and divides
/// by 4, which avoids inverting 4 when m is even.
u64 term_mod(const SequenceSpec &spec, u64 j, Modulus m);

/// Successive residues u_q(1), u_q(2), ... mod m, one multiplication each.
class ResidueStream {
public:
    ResidueStream(const SequenceSpec &spec, Modulus m);

    /// Residue of the next term; the first call yields u_q(1).
    u64 next() noexcept
    {
        pow3_ = mul_mod(pow3_, 3, four_m_);
        ++index_;
        // odd j: 3^j + q*; even j: 3^j - q*
        const u64 shift = (index_ & 1) ? q_star_ : neg_q_star_;
        u64 t = pow3_ + shift;
        if (t >= four_m_ || t < pow3_) t -= four_m_;
        return t / 4;
    }

    u64 index() const noexcept { return index_; }

private:
    u64 four_m_;
    u64 q_star_;      // q* mod 4m
    u64 neg_q_star_;  // -q* mod 4m
    u64 pow3_ = 1;
    u64 index_ = 0;
};

}  // namespace bsdisc
