#include "bsdisc/primeclass.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bsdisc/parallel.hpp"
#include "bsdisc/sieve.hpp"

namespace bsdisc {

namespace {

void require_sequence_prime(u64 q, const char *what)
{
    if (q < 5 || !is_prime(q)) throw std::invalid_argument(std::string(what) + ": q must be a prime >= 5");
}

constexpr const char *kCsvHeader = "q,artin,fermat,mirimanoff,mod28,class";

TheoremCase theorem_case_of(bool artin, bool mirimanoff, bool fermat)
{
    if (!artin) return TheoremCase::NotArtin;
    if (!mirimanoff) return TheoremCase::ArtinNotMirimanoff;
    return fermat ? TheoremCase::ArtinMirimanoffFermat : TheoremCase::ArtinMirimanoffNotFermat;
}

}  // namespace

const char *to_string(TheoremCase c) noexcept
{
    switch (c) {
    case TheoremCase::ArtinNotMirimanoff: return "ArtinNotMirimanoff";
    case TheoremCase::ArtinMirimanoffNotFermat: return "ArtinMirimanoffNotFermat";
    case TheoremCase::ArtinMirimanoffFermat: return "ArtinMirimanoffFermat";
    case TheoremCase::NotArtin: return "NotArtin";
    }
    return "?";
}

bool is_artin(u64 q)
{
    require_sequence_prime(q, "is_artin");
    for (const u64 r : prime_divisors(q - 1)) {
        if (pow_mod(3, (q - 1) / r, q) == 1) return false;
    }
    return true;
}

bool is_fermat(u64 q) { return q >= 3 && std::has_single_bit(q - 1) && is_prime(q); }

bool is_mirimanoff(u64 q)
{
    require_sequence_prime(q, "is_mirimanoff");
    if (q >= (u64{1} << 32)) throw std::overflow_error("is_mirimanoff: q^2 exceeds 64 bits");
    return pow_mod(3, q - 1, q * q) == 1;
}

int eight_class_of(bool mod28, bool artin, bool mirimanoff, bool fermat) noexcept
{
    int row;
    if (!artin)
        row = 7;
    else if (!mirimanoff)
        row = 1;
    else
        row = fermat ? 5 : 3;
    return mod28 ? row : row + 1;
}

PrimeClassification classify(u64 q)
{
    PrimeClassification c{};
    c.q = q;
    c.artin = is_artin(q);
    c.fermat = is_fermat(q);
    c.mirimanoff = is_mirimanoff(q);
    c.mod28_exceptional = q % 28 == 1 || q % 28 == 27;
    c.eight_class = eight_class_of(c.mod28_exceptional, c.artin, c.mirimanoff, c.fermat);
    c.theorem_case = theorem_case_of(c.artin, c.mirimanoff, c.fermat);
    return c;
}

ArtinConstant artin_constant(u64 prime_bound)
{
    if (prime_bound < 2) throw std::invalid_argument("artin_constant: prime_bound must be >= 2");
    long double log_sum = 0.0L;
    for (const u64 p : primes_up_to(prime_bound)) {
        const long double pl = static_cast<long double>(p);
        log_sum += std::log1p(-1.0L / (pl * (pl - 1.0L)));
    }
    return {static_cast<double>(std::exp(log_sum)), 2.0 / static_cast<double>(prime_bound)};
}

std::vector<u64> mirimanoff_scan(u64 bound, unsigned threads)
{
    const auto primes = primes_in_range(5, bound);
    std::vector<char> hit(primes.size(), 0);
    parallel_chunks(primes.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) hit[i] = is_mirimanoff(primes[i]);
    });
    std::vector<u64> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (hit[i]) out.push_back(primes[i]);
    }
    return out;
}

std::vector<PrimeClassification> classify_scan(std::size_t prime_count, unsigned threads)
{
    const auto primes = first_primes_from(5, prime_count);
    std::vector<PrimeClassification> rows(primes.size());
    parallel_chunks(primes.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) rows[i] = classify(primes[i]);
    });
    return rows;
}

std::array<double, 8> conjectural_densities(double a)
{
    const double c1 = 32.0 * a / 205.0;
    const double c2 = 173.0 * a / 205.0;
    return {c1, c2, 0.0, 0.0, 0.0, 0.0, 1.0 / 6.0 - c1, 5.0 / 6.0 - c2};
}

DensityReport density_from(const std::vector<PrimeClassification> &rows)
{
    if (rows.empty()) throw std::invalid_argument("density: need at least one prime");
    DensityReport report{};
    report.prime_count = rows.size();
    for (const auto &row : rows) ++report.counts[row.eight_class - 1];
    for (std::size_t k = 0; k < 8; ++k)
        report.empirical[k] = static_cast<double>(report.counts[k]) / static_cast<double>(rows.size());
    report.artin_constant = artin_constant(kDensityArtinBound).value;
    report.conjectural = conjectural_densities(report.artin_constant);
    return report;
}

DensityReport density_scan(std::size_t prime_count, unsigned threads)
{
    return density_from(classify_scan(prime_count, threads));
}

void write_scan_csv(std::ostream &out, const std::vector<PrimeClassification> &rows)
{
    out << kCsvHeader << '\n';
    for (const auto &r : rows) {
        out << r.q << ',' << int(r.artin) << ',' << int(r.fermat) << ',' << int(r.mirimanoff) << ','
            << int(r.mod28_exceptional) << ',' << r.eight_class << '\n';
    }
}

std::vector<PrimeClassification> read_scan_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("scan csv: missing or wrong header");
    std::vector<PrimeClassification> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        PrimeClassification r{};
        int flags[4];
        char comma[5];
        fields >> r.q >> comma[0] >> flags[0] >> comma[1] >> flags[1] >> comma[2] >> flags[2] >> comma[3] >>
            flags[3] >> comma[4] >> r.eight_class;
        bool ok = static_cast<bool>(fields) && (fields >> std::ws).eof();
        for (const char c : comma) ok = ok && c == ',';
        for (const int f : flags) ok = ok && (f == 0 || f == 1);
        if (!ok) throw std::runtime_error("scan csv: malformed row at line " + std::to_string(line_no));
        r.artin = flags[0];
        r.fermat = flags[1];
        r.mirimanoff = flags[2];
        r.mod28_exceptional = flags[3];
        if (r.eight_class != eight_class_of(r.mod28_exceptional, r.artin, r.mirimanoff, r.fermat) ||
            (!rows.empty() && rows.back().q >= r.q))
            throw std::runtime_error("scan csv: inconsistent row at line " + std::to_string(line_no));
        r.theorem_case = theorem_case_of(r.artin, r.mirimanoff, r.fermat);
        rows.push_back(r);
    }
    return rows;
}

std::vector<PrimeClassification> classify_scan_cached(std::size_t prime_count, unsigned threads,
                                                      const std::string &path)
{
    if (!path.empty()) {
        std::ifstream in(path);
        if (in) {
            try {
                auto rows = read_scan_csv(in);
                if (rows.size() == prime_count) {
                    const auto primes = first_primes_from(5, prime_count);
                    bool same = true;
                    for (std::size_t i = 0; same && i < rows.size(); ++i) same = rows[i].q == primes[i];
                    if (same) return rows;
                }
            } catch (const std::runtime_error &) {
                // stale or foreign file; rebuild below
            }
        }
    }
    auto rows = classify_scan(prime_count, threads);
    if (!path.empty()) {
        std::ofstream out(path, std::ios::trunc);
        if (!out) throw std::ios_base::failure("cannot write scan cache " + path);
        write_scan_csv(out, rows);
    }
    return rows;
}

}  // namespace bsdisc
