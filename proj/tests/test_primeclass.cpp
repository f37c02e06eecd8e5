#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "bsdisc/primeclass.hpp"
#include "bsdisc/sieve.hpp"

using namespace bsdisc;

TEST(Predicates, Artin)
{
    for (const u64 q : {5, 7, 17, 19, 31, 43, 53, 79}) EXPECT_TRUE(is_artin(q)) << q;
    EXPECT_FALSE(is_artin(11));
    EXPECT_FALSE(is_artin(13));
    EXPECT_TRUE(is_artin(1006003));
    EXPECT_THROW(is_artin(9), std::invalid_argument);
    EXPECT_THROW(is_artin(3), std::invalid_argument);
}

TEST(Predicates, Fermat)
{
    EXPECT_TRUE(is_fermat(17));
    EXPECT_FALSE(is_fermat(7));
    EXPECT_TRUE(is_fermat(65537));
    EXPECT_TRUE(is_fermat(5));
    EXPECT_FALSE(is_fermat(9));  // 8 + 1, not prime
}

TEST(Predicates, Mirimanoff)
{
    EXPECT_TRUE(is_mirimanoff(11));
    EXPECT_TRUE(is_mirimanoff(1006003));
    EXPECT_FALSE(is_mirimanoff(5));
}

TEST(Classify, KnownRows)
{
    for (const u64 q : {29, 113, 197, 223, 281}) EXPECT_EQ(classify(q).eight_class, 1) << q;
    for (const u64 q : {83, 167, 251, 307, 337}) EXPECT_EQ(classify(q).eight_class, 7) << q;
    const auto big = classify(1006003);
    EXPECT_EQ(big.eight_class, 4);
    EXPECT_EQ(big.theorem_case, TheoremCase::ArtinMirimanoffNotFermat);
    const auto eleven = classify(11);
    EXPECT_FALSE(eleven.artin);
    EXPECT_TRUE(eleven.mirimanoff);
    EXPECT_EQ(eleven.theorem_case, TheoremCase::NotArtin);
    EXPECT_EQ(classify(5).eight_class, 2);
    EXPECT_EQ(classify(5).theorem_case, TheoremCase::ArtinNotMirimanoff);
}

TEST(Classify, EightClassLayout)
{
    EXPECT_EQ(eight_class_of(true, true, false, false), 1);
    EXPECT_EQ(eight_class_of(false, true, false, true), 2);
    EXPECT_EQ(eight_class_of(true, true, true, false), 3);
    EXPECT_EQ(eight_class_of(false, true, true, false), 4);
    EXPECT_EQ(eight_class_of(true, true, true, true), 5);
    EXPECT_EQ(eight_class_of(false, true, true, true), 6);
    EXPECT_EQ(eight_class_of(true, false, true, false), 7);
    EXPECT_EQ(eight_class_of(false, false, false, false), 8);
}

TEST(ArtinConstantTest, Values)
{
    EXPECT_NEAR(artin_constant(10'000'000).value, 0.373955813619, 1e-6);
    EXPECT_NEAR(artin_constant(100).value, 0.373956, 1e-3);
    EXPECT_DOUBLE_EQ(artin_constant(2).value, 0.5);
    EXPECT_THROW(artin_constant(1), std::invalid_argument);
}

TEST(ArtinConstantTest, ErrorBoundCoversTail)
{
    const double reference = artin_constant(10'000'000).value;
    for (const u64 bound : {100, 1000, 100000}) {
        const auto a = artin_constant(bound);
        EXPECT_LE(std::abs(std::log(a.value) - std::log(reference)), a.log_error_bound) << bound;
    }
}

TEST(MirimanoffScan, Examples)
{
    EXPECT_EQ(mirimanoff_scan(1'100'000), (std::vector<u64>{11, 1006003}));
    EXPECT_TRUE(mirimanoff_scan(10).empty());
    EXPECT_EQ(mirimanoff_scan(2'000'000, 3), (std::vector<u64>{11, 1006003}));
}

TEST(FermatPrimes, UpTo100000AreArtin)
{
    std::vector<u64> found;
    for (const u64 q : primes_in_range(5, 100000)) {
        if (!is_fermat(q)) continue;
        found.push_back(q);
        EXPECT_TRUE(is_artin(q)) << q;
    }
    EXPECT_EQ(found, (std::vector<u64>{5, 17, 257, 65537}));
}

TEST(Density, SinglePrime)
{
    const auto r = density_scan(1);
    EXPECT_EQ(r.counts[1], 1u);
    EXPECT_EQ(std::accumulate(r.counts.begin(), r.counts.end(), u64{0}), 1u);
}

TEST(Density, CountsSumAndThreadIndependence)
{
    const auto a = density_scan(20000, 1);
    const auto b = density_scan(20000, 4);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.empirical, b.empirical);
    EXPECT_EQ(std::accumulate(a.counts.begin(), a.counts.end(), u64{0}), 20000u);
    EXPECT_EQ(classify_scan(5000, 1), classify_scan(5000, 7));
}

TEST(Density, ScaledDownRunNearReference)
{
    const auto r = density_scan(100000, 0);
    const double reference[8] = {0.0584, 0.3155, 0, 0, 0, 0, 0.1083, 0.5178};
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(r.empirical[i], reference[i], 0.01) << "class " << i + 1;
}

TEST(Density, ConjecturalSumsToOne)
{
    const auto c = conjectural_densities(artin_constant(1000).value);
    EXPECT_NEAR(std::accumulate(c.begin(), c.end(), 0.0), 1.0, 1e-15);
    EXPECT_EQ(c[2], 0.0);
    EXPECT_EQ(c[5], 0.0);
}

TEST(ScanCsv, RoundTrip)
{
    const auto rows = classify_scan(500, 2);
    std::stringstream ss;
    write_scan_csv(ss, rows);
    EXPECT_EQ(read_scan_csv(ss), rows);
}

TEST(ScanCsv, RejectsCorruptInput)
{
    std::stringstream missing("q,artin\n5,1\n");
    EXPECT_THROW(read_scan_csv(missing), std::runtime_error);
    std::stringstream inconsistent("q,artin,fermat,mirimanoff,mod28,class\n5,1,1,0,0,7\n");
    EXPECT_THROW(read_scan_csv(inconsistent), std::runtime_error);
}

TEST(ScanCsv, CacheIsReusedOnlyForMatchingCount)
{
    const auto path = std::filesystem::temp_directory_path() / "bsdisc_scan_cache_test.csv";
    std::filesystem::remove(path);
    const auto first = classify_scan_cached(300, 1, path.string());
    ASSERT_TRUE(std::filesystem::exists(path));
    EXPECT_EQ(classify_scan_cached(300, 1, path.string()), first);
    const auto longer = classify_scan_cached(400, 1, path.string());
    EXPECT_EQ(longer.size(), 400u);
    std::ifstream in(path);
    EXPECT_EQ(read_scan_csv(in).size(), 400u);
    std::filesystem::remove(path);
}
