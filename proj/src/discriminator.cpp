#include "bsdisc/discriminator.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "bsdisc/parallel.hpp"

namespace bsdisc {

namespace {

void check_n(u64 n)
{
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    if (n > kMaxN) throw std::overflow_error("n too large");
}

bool exceptional_mod28(u64 q) { return q % 28 == 1 || q % 28 == 27; }

}  // namespace

const char *to_string(DiscBranch b) noexcept
{
    switch (b) {
    case DiscBranch::PowerOfTwo: return "PowerOfTwo";
    case DiscBranch::PowerOfQ: return "PowerOfQ";
    case DiscBranch::Exceptional7: return "Exceptional7";
    }
    return "?";
}

u64 disc_brute(const SequenceSpec &spec, u64 n)
{
    check_n(n);
    if (n > (u64{1} << 31)) throw std::overflow_error("disc_brute: n too large for exhaustive search");
    std::vector<u64> stamp(2 * n, 0);
    u64 token = 0;
    const u64 last = n == 1 ? 1 : 2 * n - 1;
    for (u64 m = n; m <= last; ++m) {
        ++token;
        ResidueStream stream(spec, Modulus(m));
        bool separated = true;
        for (u64 j = 1; j <= n; ++j) {
            const u64 r = stream.next();
            if (stamp[r] == token) {
                separated = false;
                break;
            }
            stamp[r] = token;
        }
        if (separated) return m;
    }
    throw std::logic_error("disc_brute: no modulus in [n, 2n-1] separates the terms");
}

ClosedDiscriminator::ClosedDiscriminator(const SequenceSpec &spec) : spec_(spec), class_(classify(spec.q())) {}

DiscriminatorResult ClosedDiscriminator::operator()(u64 n) const
{
    check_n(n);
    const u64 q = spec_.q();
    DiscriminatorResult out{n, 0, DiscBranch::PowerOfTwo, std::bit_ceil(n), std::nullopt};

    switch (class_.theorem_case) {
    case TheoremCase::ArtinNotMirimanoff: {
        // least q^f with q^f (q-1) >= q n; q < 2^32 and n <= 2^62 keep this
        // inside 128 bits
        u128 power = q;
        const u128 need = static_cast<u128>(q) * n;
        while (power * (q - 1) < need) power *= q;
        out.powq_candidate = power;
        break;
    }
    case TheoremCase::ArtinMirimanoffNotFermat:
        if (q >= n + 1) out.powq_candidate = q;
        break;
    case TheoremCase::ArtinMirimanoffFermat:
    case TheoremCase::NotArtin:
        break;
    }

    if (n == 5 && exceptional_mod28(q)) {
        out.value = 7;
        out.branch = DiscBranch::Exceptional7;
        return out;
    }
    if (out.powq_candidate && *out.powq_candidate < out.pow2_candidate) {
        out.value = static_cast<u64>(*out.powq_candidate);
        out.branch = DiscBranch::PowerOfQ;
    } else {
        out.value = out.pow2_candidate;
    }
    return out;
}

DiscriminatorResult disc_closed(const SequenceSpec &spec, u64 n) { return ClosedDiscriminator(spec)(n); }

bool ExponentSet::contains(u64 f) const { return std::binary_search(members.begin(), members.end(), f); }

ExponentSet f_exponents(u64 q, u64 max_f)
{
    if (q < 5 || !is_prime(q)) throw std::invalid_argument("f_exponents: q must be a prime >= 5");
    if (max_f == 0) throw std::invalid_argument("f_exponents: max_f must be >= 1");
    ExponentSet out{q, {}};
    BigInt lower_power = 1;  // q^(f-1)
    for (u64 f = 1; f <= max_f; ++f) {
        const BigInt low = lower_power * (q - 1);
        const BigInt high = lower_power * q;
        // the largest power of two not exceeding q^f
        const BigInt top_two = BigInt(1) << boost::multiprecision::msb(high);
        if (top_two < low) out.members.push_back(f);
        lower_power = high;
    }
    return out;
}

std::vector<u64> value_set(u64 q, u64 bound)
{
    if (bound == 0) throw std::invalid_argument("value_set: bound must be >= 1");
    const PrimeClassification c = classify(q);
    std::set<u64> values;
    for (u64 v = 1; v <= bound; v *= 2) {
        values.insert(v);
        if (v > bound / 2) break;
    }
    if ((q == 7 || c.mod28_exceptional) && bound >= 7) values.insert(7);
    if (c.artin && !c.fermat && q <= bound) values.insert(q);
    if (c.artin && !c.mirimanoff && q <= bound / q) {
        u64 max_f = 1;
        for (u64 v = q; v <= bound / q; v *= q) ++max_f;
        const ExponentSet fs = f_exponents(q, max_f);
        u64 v = q;
        for (u64 f = 2; f <= max_f; ++f) {
            v *= q;
            if (fs.contains(f)) values.insert(v);
        }
    }
    return {values.begin(), values.end()};
}

FDensity f_density_check(u64 q, u64 x)
{
    const ExponentSet fs = f_exponents(q, x);
    const double qd = static_cast<double>(q);
    return {fs.members.size(), static_cast<double>(x) * std::log(2.0 * (qd - 1.0) / qd) / std::log(2.0)};
}

RunLengthTable disc_table(const SequenceSpec &spec, u64 n_max, unsigned threads)
{
    check_n(n_max);
    const ClosedDiscriminator closed(spec);
    std::vector<u64> values(n_max);
    parallel_chunks(values.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) values[i] = closed(i + 1).value;
    });
    RunLengthTable table{spec.q(), {}};
    for (u64 n = 1; n <= n_max; ++n) {
        const u64 v = values[n - 1];
        if (!table.rows.empty() && table.rows.back().value == v)
            table.rows.back().n_high = n;
        else
            table.rows.push_back({n, n, v});
    }
    return table;
}

u64 small_n(u64 q, u64 n)
{
    if (q < 5 || !is_prime(q)) throw std::invalid_argument("small_n: q must be a prime >= 5");
    switch (n) {
    case 1: return 1;
    case 2: return 2;
    case 3:
    case 4: return 4;
    case 5: return (q == 7 || exceptional_mod28(q)) ? 7 : 8;
    case 6: return q == 7 ? 7 : 8;
    default: throw std::invalid_argument("small_n: n must be in 1..6");
    }
}

}  // namespace bsdisc
