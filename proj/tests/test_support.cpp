#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>

#include "bsdisc/modarith.hpp"
#include "bsdisc/parallel.hpp"
#include "bsdisc/sieve.hpp"

using namespace bsdisc;

TEST(Sieve, SmallRanges)
{
    EXPECT_EQ(primes_up_to(30), (std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
    EXPECT_TRUE(primes_in_range(24, 28).empty());
    EXPECT_TRUE(primes_in_range(10, 5).empty());
    EXPECT_EQ(primes_in_range(0, 2), (std::vector<u64>{2}));
}

TEST(Sieve, SegmentsJoinCleanly)
{
    const u64 lo = (u64{1} << 18) - 100, hi = (u64{1} << 19) + 100;
    const auto ps = primes_in_range(lo, hi);
    u64 expect = 0;
    for (u64 n = lo; n <= hi; ++n) expect += is_prime(n);
    EXPECT_EQ(ps.size(), expect);
    for (const u64 p : ps) ASSERT_TRUE(is_prime(p));
}

TEST(Sieve, HighWindow)
{
    const u64 lo = 1'000'000'000'000ull;
    for (const u64 p : primes_in_range(lo, lo + 10000)) ASSERT_TRUE(is_prime(p));
    EXPECT_EQ(primes_in_range(lo, lo + 10000).size(), 335u);
}

TEST(Sieve, FirstPrimes)
{
    const auto ps = first_primes_from(5, 1'000'000);
    ASSERT_EQ(ps.size(), 1'000'000u);
    EXPECT_EQ(ps.front(), 5u);
    EXPECT_EQ(ps.back(), 15485917u);  // the 1000002nd prime
    EXPECT_EQ(first_primes_from(1006000, 2), (std::vector<u64>{1006003, 1006007}));
    EXPECT_TRUE(first_primes_from(5, 0).empty());
}

TEST(Parallel, CoversEveryIndexOnce)
{
    for (const unsigned threads : {1u, 2u, 3u, 8u, 64u}) {
        std::vector<std::atomic<int>> hits(1000);
        parallel_chunks(hits.size(), threads, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) ++hits[i];
        });
        for (const auto &h : hits) ASSERT_EQ(h.load(), 1);
    }
}

TEST(Parallel, RethrowsWorkerFailure)
{
    EXPECT_THROW(parallel_chunks(100, 4,
                                 [](std::size_t b, std::size_t) {
                                     if (b > 0) throw std::domain_error("boom");
                                 }),
                 std::domain_error);
}

TEST(Parallel, ThreadResolution)
{
    EXPECT_EQ(resolve_threads(3), 3u);
    ::setenv("BSDISC_THREADS", "5", 1);
    EXPECT_EQ(resolve_threads(0), 5u);
    ::setenv("BSDISC_THREADS", "junk", 1);
    EXPECT_GE(resolve_threads(0), 1u);
    ::unsetenv("BSDISC_THREADS");
    EXPECT_GE(resolve_threads(0), 1u);
}
