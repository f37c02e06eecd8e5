#pragma once

// D_q(n): the least m such that u_q(1), ..., u_q(n) are pairwise
// incongruent mod m. Always n <= D_q(n) <= 2n - 1, never divisible by 3,
// and always a power of 2, a power of q, or the sporadic value 7.

#include <optional>
#include <vector>

#include "bsdisc/primeclass.hpp"
#include "bsdisc/sequence.hpp"

namespace bsdisc {

enum class DiscBranch { PowerOfTwo, PowerOfQ, Exceptional7 };

const char *to_string(DiscBranch b) noexcept;

struct DiscriminatorResult {
    u64 n;
    u64 value;
    DiscBranch branch;
    u64 pow2_candidate;                 // least 2^e >= n
    std::optional<u128> powq_candidate;  // least admissible q^f, if the case allows one
};

/// Largest n accepted by the discriminator routines.
inline constexpr u64 kMaxN = u64{1} << 62;

/// Definitional oracle: tries m = n, n+1, ..., 2n-1 and returns the first
/// modulus separating the first n terms.
u64 disc_brute(const SequenceSpec &spec, u64 n);

/// Closed form with the q classification computed once.
class ClosedDiscriminator {
public:
    explicit ClosedDiscriminator(const SequenceSpec &spec);

    DiscriminatorResult operator()(u64 n) const;

    const SequenceSpec &spec() const noexcept { return spec_; }
    const PrimeClassification &classification() const noexcept { return class_; }

private:
    SequenceSpec spec_;
    PrimeClassification class_;
};

DiscriminatorResult disc_closed(const SequenceSpec &spec, u64 n);

/// f in F_q iff [(q-1) q^(f-1), q^f] contains no power of 2. Decided with
/// exact integers.
struct ExponentSet {
    u64 q;
    std::vector<u64> members;
    bool contains(u64 f) const;
};

ExponentSet f_exponents(u64 q, u64 max_f);

/// All discriminator values <= bound, ascending.
std::vector<u64> value_set(u64 q, u64 bound);

struct FDensity {
    u64 count;         // #{f in F_q : f <= x}
    double asymptote;  // x * log(2(q-1)/q) / log 2
};

FDensity f_density_check(u64 q, u64 x);

struct RunLengthRow {
    u64 n_low;
    u64 n_high;
    u64 value;
    friend bool operator==(const RunLengthRow &, const RunLengthRow &) = default;
};

/// Maximal runs of constant D_q(n) covering 1..n_max.
struct RunLengthTable {
    u64 q;
    std::vector<RunLengthRow> rows;
};

RunLengthTable disc_table(const SequenceSpec &spec, u64 n_max, unsigned threads = 1);

/// D_q(n) for n = 1..6 without the general machinery.
u64 small_n(u64 q, u64 n);

}  // namespace bsdisc
