#include <gtest/gtest.h>

#include <numeric>

#include "bsdisc/period.hpp"
#include "bsdisc/sieve.hpp"

using namespace bsdisc;

namespace {

u64 nu3(u64 d)
{
    u64 a = 0;
    for (; d % 3 == 0; d /= 3) ++a;
    return a;
}

}  // namespace

TEST(PeriodClosed, Examples)
{
    EXPECT_EQ(period_closed(make_spec(5), 32), (PeriodInfo{32, 1, true}));
    EXPECT_EQ(period_closed(make_spec(5), 9), (PeriodInfo{2, 2, false}));
    EXPECT_EQ(period_closed(make_spec(11), 11), (PeriodInfo{5, 1, true}));
}

TEST(PeriodBrute, Examples)
{
    EXPECT_EQ(period_brute(make_spec(5), 7), (PeriodInfo{6, 1, true}));
    EXPECT_EQ(period_brute(make_spec(7), 2), (PeriodInfo{2, 1, true}));
    EXPECT_EQ(period_brute(make_spec(5), 18), (PeriodInfo{2, 2, false}));
}

TEST(PeriodClosed, SmallModuliNeedNoSpecialCase)
{
    for (const i64 q : {5, 7, 11}) {
        EXPECT_EQ(period_closed(make_spec(q), 2), (PeriodInfo{2, 1, true}));
        EXPECT_EQ(period_closed(make_spec(q), 3), (PeriodInfo{2, 1, true}));
    }
}

TEST(PeriodClosed, RejectsSmallModulus)
{
    EXPECT_THROW(period_closed(make_spec(5), 1), std::invalid_argument);
    EXPECT_THROW(period_brute(make_spec(5), 0), std::invalid_argument);
}

TEST(PeriodBrute, TooShortHorizonIsAnError)
{
    EXPECT_THROW(period_brute(make_spec(5), 7, 3), std::runtime_error);
}

TEST(PeriodOracle, ClosedEqualsSimulation)
{
    for (const u64 q : first_primes_from(5, 10)) {
        const auto spec = make_spec(static_cast<i64>(q));
        for (u64 d = 2; d <= 2000; ++d) {
            const PeriodInfo closed = period_closed(spec, d);
            ASSERT_EQ(closed, period_brute(spec, d)) << "q=" << q << " d=" << d;
            ASSERT_EQ(closed.pure, d % 9 != 0);
            ASSERT_EQ(closed.pre_period, std::max<u64>(1, nu3(d)));
        }
    }
}

TEST(PeriodProperties, MultiplicativeOnCoprimeModuli)
{
    for (const i64 q : {5, 7, 13}) {
        const auto spec = make_spec(q);
        for (u64 a = 2; a <= 200; ++a) {
            for (u64 b = 2; b <= 200 && a * b <= 40000; ++b) {
                if (std::gcd(a, b) != 1) continue;
                const PeriodInfo pa = period_closed(spec, a), pb = period_closed(spec, b);
                if (!pa.pure || !pb.pure) continue;
                ASSERT_EQ(period_closed(spec, a * b).period, std::lcm(pa.period, pb.period)) << a << " " << b;
            }
        }
    }
}

TEST(PeriodProperties, DividesAlongDivisors)
{
    for (const i64 q : {5, 7}) {
        const auto spec = make_spec(q);
        std::vector<u64> rho(2001, 0);
        for (u64 d = 2; d <= 2000; ++d) rho[d] = period_closed(spec, d).period;
        for (u64 d1 = 2; d1 <= 2000; ++d1)
            for (u64 d2 = 2 * d1; d2 <= 2000; d2 += d1) ASSERT_EQ(rho[d2] % rho[d1], 0u) << d1 << " | " << d2;
    }
}

TEST(PeriodProperties, Bounds)
{
    for (const i64 q : {5, 7, 11, 29}) {
        const auto spec = make_spec(q);
        for (u64 d = 2; d <= 2000; ++d) {
            const u64 rho = period_closed(spec, d).period;
            ASSERT_LE(std::lcm<u64>(2, rho), d) << q << " " << d;
        }
        for (u64 a = 2; a <= 60; ++a)
            for (u64 b = 2; b <= 60; ++b)
                if (std::gcd(a, b) == 1) ASSERT_LE(2 * period_closed(spec, a * b).period, a * b) << a << " " << b;
    }
}

TEST(PeriodProperties, OddExactlyAtQWithOddOrder)
{
    for (const u64 q : first_primes_from(5, 40)) {
        const auto spec = make_spec(static_cast<i64>(q));
        const bool odd_order = mult_order(3, Modulus(q)) % 2 == 1;
        for (u64 d = 2; d <= 400; ++d) {
            const bool odd = period_closed(spec, d).period % 2 == 1;
            ASSERT_EQ(odd, d == q && odd_order) << "q=" << q << " d=" << d;
        }
        EXPECT_EQ(period_closed(spec, q).period % 2 == 1, odd_order);
    }
}

TEST(PeriodBrute, DefaultHorizon)
{
    const auto spec = make_spec(7);
    const PeriodInfo p = period_closed(spec, 54);
    EXPECT_EQ(default_horizon(spec, 54), p.pre_period + 2 * p.period + 8);
}
