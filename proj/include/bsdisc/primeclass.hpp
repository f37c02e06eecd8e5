#pragma once

// Artin / Fermat / Mirimanoff predicates for the sequence prime q, the
// eight-way partition they induce, and density estimates for it.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "bsdisc/modarith.hpp"

namespace bsdisc {

/// Which closed-form branch governs D_q(n).
enum class TheoremCase { ArtinNotMirimanoff, ArtinMirimanoffNotFermat, ArtinMirimanoffFermat, NotArtin };

const char *to_string(TheoremCase c) noexcept;

struct PrimeClassification {
    u64 q;
    bool artin;
    bool fermat;
    bool mirimanoff;
    bool mod28_exceptional;  // q = +-1 (mod 28)
    int eight_class;         // 1..8
    TheoremCase theorem_case;
    friend bool operator==(const PrimeClassification &, const PrimeClassification &) = default;
};

/// 3 is a primitive root mod q. Requires a prime q >= 5.
bool is_artin(u64 q);
/// q - 1 is a power of two (and q >= 3 is prime).
bool is_fermat(u64 q);
/// 3^(q-1) = 1 (mod q^2). Requires a prime q >= 5 below 2^32.
bool is_mirimanoff(u64 q);

PrimeClassification classify(u64 q);

/// Class index from the four flags:
///   1-2 Artin, not Mirimanoff; 3-4 Artin, Mirimanoff, not Fermat;
///   5-6 Artin, Mirimanoff, Fermat; 7-8 not Artin.
/// Odd classes are q = +-1 (mod 28), even classes are not.
int eight_class_of(bool mod28, bool artin, bool mirimanoff, bool fermat) noexcept;

struct ArtinConstant {
    double value;
    double log_error_bound;  // 2 / prime_bound
};

/// prod_{p <= prime_bound} (1 - 1/(p(p-1))). Requires prime_bound >= 2.
ArtinConstant artin_constant(u64 prime_bound);

/// Primes 5 <= q <= bound that are Mirimanoff.
std::vector<u64> mirimanoff_scan(u64 bound, unsigned threads = 1);

/// Classification of the first `prime_count` primes >= 5, in order.
std::vector<PrimeClassification> classify_scan(std::size_t prime_count, unsigned threads = 1);

struct DensityReport {
    u64 prime_count;
    std::array<u64, 8> counts;
    std::array<double, 8> empirical;
    std::array<double, 8> conjectural;
    double artin_constant;
};

/// {32A/205, 173A/205, 0, 0, 0, 0, 1/6 - 32A/205, 5/6 - 173A/205}
std::array<double, 8> conjectural_densities(double artin_constant);

/// Bound used for the Artin constant in density reports.
inline constexpr u64 kDensityArtinBound = 10'000'000;

DensityReport density_from(const std::vector<PrimeClassification> &rows);
DensityReport density_scan(std::size_t prime_count, unsigned threads = 1);

/// Cache format: header `q,artin,fermat,mirimanoff,mod28,class`, one row per
/// prime, booleans as 0/1.
void write_scan_csv(std::ostream &out, const std::vector<PrimeClassification> &rows);
/// Parses the cache format. Throws std::runtime_error on malformed input.
std::vector<PrimeClassification> read_scan_csv(std::istream &in);

/// Loads `path` if it holds exactly `prime_count` rows, otherwise scans and
/// rewrites it. An empty path disables caching.
std::vector<PrimeClassification> classify_scan_cached(std::size_t prime_count, unsigned threads,
                                                      const std::string &path);

}  // namespace bsdisc
