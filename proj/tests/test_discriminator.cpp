#include <gtest/gtest.h>

#include <bit>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <fstream>
#include <sstream>

#include "bsdisc/discriminator.hpp"
#include "bsdisc/indices.hpp"
#include "bsdisc/sieve.hpp"

using namespace bsdisc;

namespace {

std::string fixture(u64 q)
{
    std::ifstream in(std::string(BSDISC_FIXTURE_DIR) + "/table_q" + std::to_string(q) + ".csv");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string to_csv(const RunLengthTable &t)
{
    std::string s = "n_low,n_high,value\n";
    for (const auto &r : t.rows)
        s += std::to_string(r.n_low) + "," + std::to_string(r.n_high) + "," + std::to_string(r.value) + "\n";
    return s;
}

}  // namespace

TEST(DiscBrute, Examples)
{
    EXPECT_EQ(disc_brute(make_spec(5), 17), 25u);
    EXPECT_EQ(disc_brute(make_spec(13), 1), 1u);
    EXPECT_EQ(disc_brute(make_spec(29), 5), 7u);
    EXPECT_THROW(disc_brute(make_spec(5), 0), std::invalid_argument);
}

TEST(DiscClosed, Examples)
{
    const auto r = disc_closed(make_spec(17), 257);
    EXPECT_EQ(r.value, 289u);
    EXPECT_EQ(r.branch, DiscBranch::PowerOfQ);
    EXPECT_EQ(r.pow2_candidate, 512u);
    EXPECT_EQ(disc_closed(make_spec(7), 6).value, 7u);
    EXPECT_EQ(disc_closed(make_spec(11), 1000).value, 1024u);
    EXPECT_EQ(disc_closed(make_spec(29), 5).branch, DiscBranch::Exceptional7);
    EXPECT_EQ(disc_closed(make_spec(11), 1000).powq_candidate, std::nullopt);
}

TEST(DiscClosed, HugeArguments)
{
    const auto r = disc_closed(make_spec(1006003), kMaxN);
    EXPECT_EQ(r.value, kMaxN);
    EXPECT_THROW(disc_closed(make_spec(5), kMaxN + 1), std::overflow_error);
    // q^f beyond 64 bits stays exact in the candidate
    u64 q = (u64{1} << 32) - 1;
    while (!is_prime(q) || classify(q).theorem_case != TheoremCase::ArtinNotMirimanoff) q -= 2;
    const auto big = disc_closed(make_spec(static_cast<i64>(q)), kMaxN);
    ASSERT_TRUE(big.powq_candidate.has_value());
    EXPECT_GT(*big.powq_candidate, u128{kMaxN});
}

TEST(DiscOracle, ClosedEqualsBruteWithStructure)
{
    for (const u64 q : first_primes_from(5, 30)) {
        const auto spec = make_spec(static_cast<i64>(q));
        const ClosedDiscriminator closed(spec);
        for (u64 n = 1; n <= 1024; ++n) {
            const u64 brute = disc_brute(spec, n);
            ASSERT_EQ(closed(n).value, brute) << "q=" << q << " n=" << n;
            ASSERT_GE(brute, n);
            ASSERT_LE(brute, std::max<u64>(1, 2 * n - 1));
            ASSERT_NE(brute % 3, 0u);
            u64 v = brute;
            while (v % q == 0) v /= q;
            const bool seven = brute == 7 && q != 7;
            ASSERT_TRUE(std::has_single_bit(brute) || v == 1 || seven) << q << " " << n;
            if (seven) ASSERT_EQ(n, 5u);
        }
    }
}

TEST(DiscOracle, SeparationByPowersOfQ)
{
    // u(1..n) distinct mod q^f  <=>  q^f (q-1) >= q n
    for (const i64 q : {5, 7, 17, 29}) {
        const auto spec = make_spec(q);
        u64 qf = 1;
        for (int f = 1; f <= 3; ++f) {
            qf *= static_cast<u64>(q);
            const u64 iota = incongruence_index(spec, Modulus(qf));
            for (u64 n = 1; n <= qf; ++n) ASSERT_EQ(n <= iota, qf * (q - 1) >= q * n) << q << "^" << f << " n=" << n;
        }
    }
}

TEST(FExponents, Examples)
{
    EXPECT_EQ(f_exponents(5, 6).members, (std::vector<u64>{2, 3, 5, 6}));
    const auto seven = f_exponents(7, 4);
    EXPECT_TRUE(seven.contains(2));
    EXPECT_TRUE(seven.contains(3));
    EXPECT_TRUE(seven.contains(4));
}

TEST(FExponents, FirstExponentIffNotFermat)
{
    for (const u64 q : first_primes_from(5, 100)) EXPECT_EQ(f_exponents(q, 1).contains(1), !is_fermat(q)) << q;
}

TEST(FExponents, MatchesFractionalPartCriterion)
{
    using Real = boost::multiprecision::cpp_bin_float_100;
    for (const u64 q : primes_in_range(5, 100)) {
        const auto fs = f_exponents(q, 50);
        const Real log2q = log(Real(q)) / log(Real(2));
        const Real threshold = log(Real(q) / Real(q - 1)) / log(Real(2));
        for (u64 f = 1; f <= 50; ++f) {
            const Real x = f * log2q;
            const Real frac = x - floor(x);
            // Fermat primes tie exactly at f = 1, which the strict inequality excludes
            const bool member = f == 1 && is_fermat(q) ? false : frac > threshold;
            ASSERT_EQ(fs.contains(f), member) << "q=" << q << " f=" << f;
        }
    }
}

TEST(FExponents, MembershipMatchesOccurrence)
{
    // q^f occurs as a value for Artin, non-Mirimanoff q exactly when f is in F_q
    for (const i64 q : {5, 7, 17, 29, 43}) {
        const auto values = value_set(static_cast<u64>(q), 1u << 20);
        const auto fs = f_exponents(static_cast<u64>(q), 8);
        u64 v = 1;
        for (u64 f = 1; f <= 8; ++f) {
            v *= static_cast<u64>(q);
            if (v > (1u << 20)) break;
            const bool listed = std::binary_search(values.begin(), values.end(), v);
            const bool expected = f == 1 ? !is_fermat(static_cast<u64>(q)) : fs.contains(f);
            EXPECT_EQ(listed, expected) << q << "^" << f;
        }
    }
}

TEST(ValueSet, Examples)
{
    EXPECT_EQ(value_set(5, 200), (std::vector<u64>{1, 2, 4, 8, 16, 25, 32, 64, 125, 128}));
    EXPECT_EQ(value_set(11, 100), (std::vector<u64>{1, 2, 4, 8, 16, 32, 64}));
    EXPECT_EQ(value_set(29, 50), (std::vector<u64>{1, 2, 4, 7, 8, 16, 29, 32}));
}

TEST(ValueSet, AgreesWithKnownValues)
{
    for (const i64 q : {5, 7, 11, 17, 29, 43, 113}) {
        const auto table = disc_table(make_spec(q), 1u << 16);
        std::vector<u64> seen;
        for (const auto &r : table.rows) seen.push_back(r.value);
        std::sort(seen.begin(), seen.end());
        EXPECT_EQ(value_set(static_cast<u64>(q), 1u << 16), seen) << q;
    }
}

TEST(FDensityCheck, Examples)
{
    const auto d = f_density_check(5, 10000);
    EXPECT_NEAR(d.asymptote, 6780.7, 0.1);
    EXPECT_LE(std::abs(static_cast<double>(d.count) - d.asymptote), 0.02 * d.asymptote);
    for (const u64 x : {1, 2, 3, 10}) EXPECT_LE(f_density_check(7, x).count, x);
    EXPECT_GE(f_density_check(1000003, 100).count, 99u);
}

TEST(DiscTable, Fixtures)
{
    for (const u64 q : {5, 7, 11, 17, 29}) EXPECT_EQ(to_csv(disc_table(make_spec(static_cast<i64>(q)), 32768)), fixture(q)) << q;
}

TEST(DiscTable, SmallShapes)
{
    const auto five = disc_table(make_spec(5), 4);
    EXPECT_EQ(five.rows, (std::vector<RunLengthRow>{{1, 1, 1}, {2, 2, 2}, {3, 4, 4}}));
    const auto seven = disc_table(make_spec(7), 16);
    EXPECT_EQ(seven.rows,
              (std::vector<RunLengthRow>{{1, 1, 1}, {2, 2, 2}, {3, 4, 4}, {5, 6, 7}, {7, 8, 8}, {9, 16, 16}}));
    const auto eleven = disc_table(make_spec(11), 32768);
    for (const auto &r : eleven.rows) EXPECT_TRUE(std::has_single_bit(r.value));
}

TEST(DiscTable, ThreadIndependent)
{
    const auto spec = make_spec(29);
    EXPECT_EQ(disc_table(spec, 50000, 1).rows, disc_table(spec, 50000, 5).rows);
}

TEST(SmallN, Examples)
{
    EXPECT_EQ(small_n(13, 5), 8u);
    EXPECT_EQ(small_n(29, 5), 7u);
    for (const u64 q : {5, 7, 11, 13}) EXPECT_EQ(small_n(q, 4), 4u);
    EXPECT_THROW(small_n(13, 7), std::invalid_argument);
}

TEST(SmallN, AgreesWithBruteForce)
{
    for (const u64 q : first_primes_from(5, 200)) {
        const auto spec = make_spec(static_cast<i64>(q));
        for (u64 n = 1; n <= 6; ++n) ASSERT_EQ(small_n(q, n), disc_brute(spec, n)) << q << " " << n;
    }
}
