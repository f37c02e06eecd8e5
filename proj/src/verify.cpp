#include "bsdisc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bsdisc/discriminator.hpp"
#include "bsdisc/indices.hpp"
#include "bsdisc/parallel.hpp"
#include "bsdisc/period.hpp"
#include "bsdisc/sieve.hpp"

namespace bsdisc {

namespace {

template <class... Parts>
std::string concat(const Parts &...parts)
{
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

void oracle_suite(VerifyReport &report, unsigned threads)
{
    constexpr u64 kMaxN = 1024;
    const auto primes = first_primes_from(5, 30);
    struct Tally {
        u64 cases = 0, mismatches = 0, bound_fail = 0, three_fail = 0, shape_fail = 0;
        std::string first;
    };
    std::vector<Tally> per_q(primes.size());
    parallel_chunks(primes.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const SequenceSpec spec(static_cast<i64>(primes[i]));
            const ClosedDiscriminator closed(spec);
            Tally &t = per_q[i];
            for (u64 n = 1; n <= kMaxN; ++n) {
                const u64 brute = disc_brute(spec, n);
                const u64 formula = closed(n).value;
                ++t.cases;
                if (brute != formula) {
                    if (t.mismatches++ == 0) t.first = concat("q=", spec.q(), " n=", n, " closed=", formula, " brute=", brute);
                }
                if (brute < n || brute > std::max<u64>(1, 2 * n - 1)) ++t.bound_fail;
                if (brute % 3 == 0) ++t.three_fail;
                u64 v = brute;
                while (v % spec.q() == 0) v /= spec.q();
                const bool shape = std::has_single_bit(brute) || v == 1 || (brute == 7 && n == 5);
                if (!shape) ++t.shape_fail;
            }
        }
    });
    Tally total;
    for (const auto &t : per_q) {
        total.cases += t.cases;
        total.mismatches += t.mismatches;
        total.bound_fail += t.bound_fail;
        total.three_fail += t.three_fail;
        total.shape_fail += t.shape_fail;
        if (total.first.empty()) total.first = t.first;
    }
    report.checks.push_back({"closed form equals brute force", total.mismatches == 0,
                             concat(total.cases, " cases, ", total.mismatches, " mismatches",
                                    total.first.empty() ? "" : "; first: ", total.first)});
    report.checks.push_back({"n <= D_q(n) <= 2n-1", total.bound_fail == 0, concat(total.bound_fail, " violations")});
    report.checks.push_back({"3 never divides D_q(n)", total.three_fail == 0, concat(total.three_fail, " violations")});
    report.checks.push_back({"values are 2^e, q^f or 7 at n=5", total.shape_fail == 0,
                             concat(total.shape_fail, " violations")});
}

void period_suite(VerifyReport &report, unsigned threads)
{
    constexpr u64 kMaxD = 2000;
    const auto primes = first_primes_from(5, 10);
    std::vector<u64> mismatches(primes.size()), purity(primes.size()), pre(primes.size());
    parallel_chunks(primes.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const SequenceSpec spec(static_cast<i64>(primes[i]));
            for (u64 d = 2; d <= kMaxD; ++d) {
                const PeriodInfo closed = period_closed(spec, d);
                const PeriodInfo brute = period_brute(spec, d);
                if (!(closed == brute)) ++mismatches[i];
                if (brute.pure != (d % 9 != 0)) ++purity[i];
                u64 alpha = 0;
                for (u64 t = d; t % 3 == 0; t /= 3) ++alpha;
                if (brute.pre_period != std::max<u64>(1, alpha)) ++pre[i];
            }
        }
    });
    auto sum = [](const std::vector<u64> &v) {
        u64 s = 0;
        for (auto x : v) s += x;
        return s;
    };
    const u64 cases = primes.size() * (kMaxD - 1);
    report.checks.push_back({"period closed form equals simulation", sum(mismatches) == 0,
                             concat(cases, " cases, ", sum(mismatches), " mismatches")});
    report.checks.push_back({"pure iff 9 does not divide d", sum(purity) == 0, concat(sum(purity), " violations")});
    report.checks.push_back({"pre-period = max(1, nu_3(d))", sum(pre) == 0, concat(sum(pre), " violations")});
}

void index_suite(VerifyReport &report, unsigned threads)
{
    const std::vector<std::pair<u64, u64>> table = {{5, 3},   {7, 5},   {11, 7},  {17, 11}, {19, 11},
                                                    {23, 12}, {29, 16}, {31, 16}, {43, 21}, {47, 20},
                                                    {53, 20}, {59, 23}, {71, 25}, {79, 27}};
    std::vector<u64> listed;
    u64 table_bad = 0;
    std::string table_detail;
    for (const auto &[p, h] : table) {
        const u64 got = h_universal(p);
        if (got != h) {
            ++table_bad;
            table_detail += concat(" h(", p, ")=", got, " expected ", h, ";");
        }
    }
    for (const u64 p : primes_up_to(79)) {
        if (in_p_set(p)) listed.push_back(p);
    }
    const bool same_primes = listed.size() == table.size();
    report.checks.push_back({"h(p) table for p <= 79", table_bad == 0 && same_primes,
                             concat(table.size(), " entries, ", table_bad, " wrong,",
                                    same_primes ? " P matches" : " P mismatch", table_detail)});

    std::vector<u64> candidates;
    for (const u64 p : primes_in_range(31, 2999)) {
        if (in_p_set(p)) candidates.push_back(p);
    }
    std::vector<u64> h_values(candidates.size());
    parallel_chunks(candidates.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) h_values[i] = h_universal(candidates[i]);
    });
    u64 bound_bad = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (2 * h_values[i] > candidates[i] + 1) ++bound_bad;
    }
    report.checks.push_back({"h(p) <= (p+1)/2 for p in P, 31 <= p < 3000", bound_bad == 0,
                             concat(candidates.size(), " primes, ", bound_bad, " violations")});

    const auto qs = first_primes_from(5, 20);
    u64 pairs = 0, violations = 0;
    for (const u64 p : primes_in_range(5, 499)) {
        if (!in_p_set(p)) continue;
        for (const u64 q : qs) {
            if (q == p) continue;
            ++pairs;
            if (incongruence_index(SequenceSpec(static_cast<i64>(q)), Modulus(p)) >= p - 1) ++violations;
        }
    }
    report.checks.push_back({"iota_q(p) < rho(p) = p-1 for p in P, p < 500", violations == 0,
                             concat(pairs, " pairs, ", violations, " violations")});
}

void iota2_suite(VerifyReport &report, unsigned)
{
    u64 tested = 0, bad = 0, bound_bad = 0;
    std::string detail;
    for (const u64 q : primes_in_range(7, 200)) {
        const QMembership qm = q_membership(q);
        if (!qm.in_q || qm.wieferich_like) continue;
        ++tested;
        const u64 closed = iota_q_squared_closed(q);
        const u64 brute = incongruence_index(SequenceSpec(static_cast<i64>(q)), Modulus(q * q));
        if (closed != brute) {
            ++bad;
            detail += concat(" q=", q, " closed=", closed, " brute=", brute, ";");
        }
        if (2 * closed > 3 * (q - 1) - 2) ++bound_bad;
    }
    report.checks.push_back({"iota_q(q^2) closed form equals brute force", bad == 0,
                             concat(tested, " primes in Q, ", bad, " mismatches", detail)});
    report.checks.push_back({"iota_q(q^2) <= 3(q-1)/2 - 1", bound_bad == 0, concat(bound_bad, " violations")});
}

void charsum_suite(VerifyReport &report, unsigned)
{
    u64 cases = 0, size_bad = 0, strict_bad = 0, weak_bad = 0;
    double worst_ratio = 0.0;
    for (const u64 p : primes_in_range(7, 61)) {
        const u64 g = primitive_root(p);
        for (const i64 q : {5, 7, 11, 13}) {
            const SequenceSpec spec(q);
            const u64 c = reduce(6 * spec.q_star(), Modulus(p));
            if (c == 0) continue;
            ++cases;
            const CharSumResult r = charsum_verify(p, 3, 1, static_cast<i64>(c), g);
            const double root = std::sqrt(static_cast<double>(p));
            if (r.set_size != p - 2) ++size_bad;
            if (!strictly_below(r.max_magnitude, root)) ++strict_bad;
            if (r.max_magnitude > root * (1.0 + 1e-9)) ++weak_bad;
            worst_ratio = std::max(worst_ratio, r.max_magnitude / root);
        }
    }
    report.checks.push_back({"|A_g(p;3,1,6q*)| = p-2", size_bad == 0, concat(cases, " cases, ", size_bad, " violations")});
    report.checks.push_back({"max nontrivial character sum < sqrt(p)", strict_bad == 0,
                             concat(strict_bad, " of ", cases, " cases reach sqrt(p); max/sqrt(p) = ", worst_ratio)});
    report.checks.push_back({"max nontrivial character sum <= sqrt(p)", weak_bad == 0,
                             concat(weak_bad, " violations")});
}

}  // namespace

bool VerifyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck &c) { return c.passed; });
}

const std::vector<std::string> &verify_suites()
{
    static const std::vector<std::string> names = {"oracle", "period", "index", "iota2", "charsum", "all"};
    return names;
}

bool strictly_below(double x, double bound) { return x < bound * (1.0 - 1e-9); }

VerifyReport run_verify(std::string_view suite, unsigned threads)
{
    threads = resolve_threads(threads);
    VerifyReport report{std::string(suite), {}};
    const bool all = suite == "all";
    bool known = all;
    auto run = [&](std::string_view name, void (*fn)(VerifyReport &, unsigned)) {
        if (all || suite == name) {
            known = true;
            const std::size_t before = report.checks.size();
            fn(report, threads);
            if (all) {
                for (std::size_t i = before; i < report.checks.size(); ++i)
                    report.checks[i].name = std::string(name) + ": " + report.checks[i].name;
            }
        }
    };
    run("oracle", oracle_suite);
    run("period", period_suite);
    run("index", index_suite);
    run("iota2", iota2_suite);
    run("charsum", charsum_suite);
    if (!known) throw std::invalid_argument("unknown verify suite: " + std::string(suite));
    return report;
}

}  // namespace bsdisc
