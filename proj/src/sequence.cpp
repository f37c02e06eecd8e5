#include "bsdisc/sequence.hpp"

#include <stdexcept>
#include <string>

namespace bsdisc {

namespace {

u64 checked_four_m(Modulus m)
{
    if (m.value() > kMaxModulus) throw std::overflow_error("modulus too large for residue arithmetic");
    return 4 * m.value();
}

}  // namespace

SequenceSpec::SequenceSpec(i64 q)
{
    if (q < 5 || !is_prime(static_cast<u64>(q)))
        throw std::invalid_argument("q must be a prime >= 5, got " + std::to_string(q));
    q_ = static_cast<u64>(q);
    q_star_ = (q_ % 4 == 1) ? q : -q;
}

BigInt term_exact(const SequenceSpec &spec, u64 j)
{
    if (j == 0) throw std::invalid_argument("term index must be >= 1");
    BigInt value = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(j));
    if (j % 2 == 0)
        value -= spec.q_star();
    else
        value += spec.q_star();
    return value / 4;
}

u64 term_mod(const SequenceSpec &spec, u64 j, Modulus m)
{
    if (j == 0) throw std::invalid_argument("term index must be >= 1");
    const Modulus four_m(checked_four_m(m));
    const u64 p = mod_pow(3, j, four_m);
    const u64 s = reduce(j % 2 == 0 ? -spec.q_star() : spec.q_star(), four_m);
    u64 t = p + s;
    if (t >= four_m.value() || t < p) t -= four_m.value();
    return t / 4;
}

ResidueStream::ResidueStream(const SequenceSpec &spec, Modulus m)
    : four_m_(checked_four_m(m)),
      q_star_(reduce(spec.q_star(), Modulus(four_m_))),
      neg_q_star_(reduce(-spec.q_star(), Modulus(four_m_))),
      pow3_(1 % four_m_)
{
}

}  // namespace bsdisc
