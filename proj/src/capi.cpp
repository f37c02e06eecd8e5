#include "bsdisc/bsdisc.h"

#include <cstring>
#include <exception>
#include <ios>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsdisc/discriminator.hpp"
#include "bsdisc/indices.hpp"
#include "bsdisc/parallel.hpp"
#include "bsdisc/period.hpp"
#include "bsdisc/primeclass.hpp"
#include "bsdisc/sieve.hpp"
#include "bsdisc/verify.hpp"

struct bsdisc_sequence {
    bsdisc::SequenceSpec spec;
};

struct bsdisc_table {
    std::vector<std::string> columns;
    std::vector<uint64_t> cells;  // row-major
};

struct bsdisc_report {
    bsdisc::VerifyReport report;
};

namespace {

thread_local std::string last_error;

bsdisc_status fail(bsdisc_status status, const char *what)
{
    last_error = what;
    return status;
}

// Translates the core's exception taxonomy into status codes.
template <class Body>
bsdisc_status guarded(Body &&body) noexcept
{
    try {
        body();
        return BSDISC_OK;
    } catch (const std::invalid_argument &e) {
        return fail(BSDISC_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error &e) {
        return fail(BSDISC_DOMAIN_ERROR, e.what());
    } catch (const std::out_of_range &e) {
        return fail(BSDISC_OUT_OF_RANGE, e.what());
    } catch (const std::overflow_error &e) {
        return fail(BSDISC_OVERFLOW, e.what());
    } catch (const std::bad_alloc &) {
        return fail(BSDISC_LIMIT_EXCEEDED, "out of memory");
    } catch (const std::ios_base::failure &e) {
        return fail(BSDISC_IO_ERROR, e.what());
    } catch (const std::runtime_error &e) {
        return fail(BSDISC_LIMIT_EXCEEDED, e.what());
    } catch (const std::exception &e) {
        return fail(BSDISC_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(BSDISC_INTERNAL_ERROR, "unknown exception");
    }
}

void require(const void *p, const char *name)
{
    if (!p) throw std::invalid_argument(std::string(name) + " must not be NULL");
}

bsdisc_table *column_table(const char *name, const std::vector<uint64_t> &values)
{
    return new bsdisc_table{{name}, values};
}

bsdisc_classification to_c(const bsdisc::PrimeClassification &c)
{
    return {c.q,          c.artin,       c.fermat, c.mirimanoff, c.mod28_exceptional,
            c.eight_class, static_cast<bsdisc_theorem_case>(c.theorem_case)};
}

bsdisc_table *scan_table(const std::vector<bsdisc::PrimeClassification> &rows)
{
    auto *t = new bsdisc_table{{"q", "artin", "fermat", "mirimanoff", "mod28", "class"}, {}};
    t->cells.reserve(rows.size() * 6);
    for (const auto &r : rows) {
        t->cells.insert(t->cells.end(), {r.q, r.artin, r.fermat, r.mirimanoff, r.mod28_exceptional,
                                         static_cast<uint64_t>(r.eight_class)});
    }
    return t;
}

std::vector<bsdisc::PrimeClassification> scan(size_t count, unsigned threads, const char *cache_path)
{
    if (cache_path && *cache_path) return bsdisc::classify_scan_cached(count, threads, cache_path);
    return bsdisc::classify_scan(count, threads);
}

}  // namespace

extern "C" {

const char *bsdisc_version(void) { return "1.0.0"; }

const char *bsdisc_status_string(bsdisc_status status)
{
    switch (status) {
    case BSDISC_OK: return "ok";
    case BSDISC_INVALID_ARGUMENT: return "invalid argument";
    case BSDISC_DOMAIN_ERROR: return "domain error";
    case BSDISC_OVERFLOW: return "overflow";
    case BSDISC_LIMIT_EXCEEDED: return "limit exceeded";
    case BSDISC_IO_ERROR: return "io error";
    case BSDISC_OUT_OF_RANGE: return "out of range";
    case BSDISC_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

const char *bsdisc_last_error(void) { return last_error.c_str(); }

int bsdisc_is_prime(uint64_t n) { return bsdisc::is_prime(n) ? 1 : 0; }

bsdisc_status bsdisc_mult_order(int64_t a, uint64_t m, uint64_t *out)
{
    return guarded([&] {
        require(out, "out");
        *out = bsdisc::mult_order(a, bsdisc::Modulus(m));
    });
}

bsdisc_status bsdisc_sequence_create(int64_t q, bsdisc_sequence **out)
{
    return guarded([&] {
        require(out, "out");
        *out = new bsdisc_sequence{bsdisc::SequenceSpec(q)};
    });
}

void bsdisc_sequence_destroy(bsdisc_sequence *seq) { delete seq; }

uint64_t bsdisc_sequence_q(const bsdisc_sequence *seq) { return seq ? seq->spec.q() : 0; }

int64_t bsdisc_sequence_q_star(const bsdisc_sequence *seq) { return seq ? seq->spec.q_star() : 0; }

bsdisc_status bsdisc_term_mod(const bsdisc_sequence *seq, uint64_t j, uint64_t m, uint64_t *out)
{
    return guarded([&] {
        require(seq, "seq");
        require(out, "out");
        *out = bsdisc::term_mod(seq->spec, j, bsdisc::Modulus(m));
    });
}

bsdisc_status bsdisc_term_exact(const bsdisc_sequence *seq, uint64_t j, char *buffer, size_t capacity,
                                size_t *needed)
{
    return guarded([&] {
        require(seq, "seq");
        if (j > 1'000'000) throw std::overflow_error("term_exact: j > 1000000");
        const std::string text = bsdisc::term_exact(seq->spec, j).str();
        if (needed) *needed = text.size() + 1;
        if (!buffer || capacity < text.size() + 1) throw std::out_of_range("term_exact: buffer too small");
        std::memcpy(buffer, text.c_str(), text.size() + 1);
    });
}

bsdisc_status bsdisc_period_closed(const bsdisc_sequence *seq, uint64_t d, bsdisc_period *out)
{
    return guarded([&] {
        require(seq, "seq");
        require(out, "out");
        const auto p = bsdisc::period_closed(seq->spec, d);
        *out = {p.period, p.pre_period, p.pure};
    });
}

bsdisc_status bsdisc_period_brute(const bsdisc_sequence *seq, uint64_t d, uint64_t horizon, bsdisc_period *out)
{
    return guarded([&] {
        require(seq, "seq");
        require(out, "out");
        const auto p = bsdisc::period_brute(seq->spec, d, horizon ? std::optional<uint64_t>(horizon) : std::nullopt);
        *out = {p.period, p.pre_period, p.pure};
    });
}

size_t bsdisc_table_rows(const bsdisc_table *t)
{
    return t && !t->columns.empty() ? t->cells.size() / t->columns.size() : 0;
}

size_t bsdisc_table_cols(const bsdisc_table *t) { return t ? t->columns.size() : 0; }

const char *bsdisc_table_column_name(const bsdisc_table *t, size_t col)
{
    return t && col < t->columns.size() ? t->columns[col].c_str() : nullptr;
}

bsdisc_status bsdisc_table_at(const bsdisc_table *t, size_t row, size_t col, uint64_t *out)
{
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        if (col >= t->columns.size() || row >= bsdisc_table_rows(t)) throw std::out_of_range("table index past the end");
        *out = t->cells[row * t->columns.size() + col];
    });
}

void bsdisc_table_destroy(bsdisc_table *t) { delete t; }

bsdisc_status bsdisc_incongruence_index(const bsdisc_sequence *seq, uint64_t m, uint64_t *out)
{
    return guarded([&] {
        require(seq, "seq");
        require(out, "out");
        *out = bsdisc::incongruence_index(seq->spec, bsdisc::Modulus(m));
    });
}

bsdisc_status bsdisc_p_membership(uint64_t p, uint64_t q, bsdisc_p_part *out)
{
    return guarded([&] {
        require(out, "out");
        *out = static_cast<bsdisc_p_part>(bsdisc::p_membership(p, q).part);
    });
}

bsdisc_status bsdisc_s_set(uint64_t p, uint64_t r, bsdisc_table **out)
{
    return guarded([&] {
        require(out, "out");
        *out = column_table("residue", bsdisc::s_set(p, r));
    });
}

bsdisc_status bsdisc_h_universal(uint64_t p, uint64_t *out)
{
    return guarded([&] {
        require(out, "out");
        *out = bsdisc::h_universal(p);
    });
}

bsdisc_status bsdisc_h_table(uint64_t p_max, unsigned threads, bsdisc_table **out)
{
    return guarded([&] {
        require(out, "out");
        std::vector<uint64_t> members;
        for (const uint64_t p : bsdisc::primes_in_range(5, p_max)) {
            if (bsdisc::in_p_set(p)) members.push_back(p);
        }
        std::vector<uint64_t> h(members.size());
        bsdisc::parallel_chunks(members.size(), bsdisc::resolve_threads(threads), [&](size_t begin, size_t end) {
            for (size_t i = begin; i < end; ++i) h[i] = bsdisc::h_universal(members[i]);
        });
        auto *t = new bsdisc_table{{"p", "h"}, {}};
        for (size_t i = 0; i < members.size(); ++i) t->cells.insert(t->cells.end(), {members[i], h[i]});
        *out = t;
    });
}

bsdisc_status bsdisc_iota_q_squared(uint64_t q, uint64_t *out)
{
    return guarded([&] {
        require(out, "out");
        *out = bsdisc::iota_q_squared_closed(q);
    });
}

bsdisc_status bsdisc_charsum(uint64_t p, int64_t a, int64_t b, int64_t c, uint64_t g, uint64_t *set_size,
                             double *max_magnitude)
{
    return guarded([&] {
        require(set_size, "set_size");
        require(max_magnitude, "max_magnitude");
        const auto r = bsdisc::charsum_verify(p, a, b, c, g);
        *set_size = r.set_size;
        *max_magnitude = r.max_magnitude;
    });
}

const char *bsdisc_theorem_case_name(bsdisc_theorem_case c)
{
    return bsdisc::to_string(static_cast<bsdisc::TheoremCase>(c));
}

bsdisc_status bsdisc_classify(uint64_t q, bsdisc_classification *out)
{
    return guarded([&] {
        require(out, "out");
        *out = to_c(bsdisc::classify(q));
    });
}

bsdisc_status bsdisc_classify_scan(size_t prime_count, unsigned threads, const char *cache_path, bsdisc_table **out)
{
    return guarded([&] {
        require(out, "out");
        *out = scan_table(scan(prime_count, bsdisc::resolve_threads(threads), cache_path));
    });
}

bsdisc_status bsdisc_density_scan(size_t prime_count, unsigned threads, const char *cache_path,
                                  bsdisc_density_report *out)
{
    return guarded([&] {
        require(out, "out");
        const auto rep = bsdisc::density_from(scan(prime_count, bsdisc::resolve_threads(threads), cache_path));
        out->prime_count = rep.prime_count;
        for (int i = 0; i < 8; ++i) {
            out->counts[i] = rep.counts[i];
            out->empirical[i] = rep.empirical[i];
            out->conjectural[i] = rep.conjectural[i];
        }
        out->artin_constant = rep.artin_constant;
    });
}

bsdisc_status bsdisc_artin_constant(uint64_t prime_bound, double *value, double *log_error_bound)
{
    return guarded([&] {
        require(value, "value");
        const auto a = bsdisc::artin_constant(prime_bound);
        *value = a.value;
        if (log_error_bound) *log_error_bound = a.log_error_bound;
    });
}

bsdisc_status bsdisc_mirimanoff_scan(uint64_t bound, unsigned threads, bsdisc_table **out)
{
    return guarded([&] {
        require(out, "out");
        *out = column_table("q", bsdisc::mirimanoff_scan(bound, bsdisc::resolve_threads(threads)));
    });
}

const char *bsdisc_branch_name(bsdisc_branch b) { return bsdisc::to_string(static_cast<bsdisc::DiscBranch>(b)); }

bsdisc_status bsdisc_disc_closed(const bsdisc_sequence *seq, uint64_t n, bsdisc_disc_result *out)
{
    return guarded([&] {
        require(seq, "seq");
        require(out, "out");
        const auto r = bsdisc::disc_closed(seq->spec, n);
        *out = {r.n, r.value, static_cast<bsdisc_branch>(r.branch), r.pow2_candidate, BSDISC_POWQ_NONE, 0};
        if (r.powq_candidate) {
            if (*r.powq_candidate >> 64) {
                out->powq_state = BSDISC_POWQ_TOO_LARGE;
            } else {
                out->powq_state = BSDISC_POWQ_PRESENT;
                out->powq_candidate = static_cast<uint64_t>(*r.powq_candidate);
            }
        }
    });
}

bsdisc_status bsdisc_disc_brute(const bsdisc_sequence *seq, uint64_t n, uint64_t *out)
{
    return guarded([&] {
        require(seq, "seq");
        require(out, "out");
        *out = bsdisc::disc_brute(seq->spec, n);
    });
}

bsdisc_status bsdisc_disc_table(const bsdisc_sequence *seq, uint64_t n_max, unsigned threads, bsdisc_table **out)
{
    return guarded([&] {
        require(seq, "seq");
        require(out, "out");
        if (n_max > (uint64_t{1} << 32)) throw std::overflow_error("disc_table: n_max > 2^32");
        const auto table = bsdisc::disc_table(seq->spec, n_max, bsdisc::resolve_threads(threads));
        auto *t = new bsdisc_table{{"n_low", "n_high", "value"}, {}};
        t->cells.reserve(table.rows.size() * 3);
        for (const auto &r : table.rows) t->cells.insert(t->cells.end(), {r.n_low, r.n_high, r.value});
        *out = t;
    });
}

bsdisc_status bsdisc_small_n(uint64_t q, uint64_t n, uint64_t *out)
{
    return guarded([&] {
        require(out, "out");
        *out = bsdisc::small_n(q, n);
    });
}

bsdisc_status bsdisc_f_exponents(uint64_t q, uint64_t max_f, bsdisc_table **out)
{
    return guarded([&] {
        require(out, "out");
        *out = column_table("f", bsdisc::f_exponents(q, max_f).members);
    });
}

bsdisc_status bsdisc_value_set(uint64_t q, uint64_t bound, bsdisc_table **out)
{
    return guarded([&] {
        require(out, "out");
        *out = column_table("value", bsdisc::value_set(q, bound));
    });
}

bsdisc_status bsdisc_f_density(uint64_t q, uint64_t x, uint64_t *count, double *asymptote)
{
    return guarded([&] {
        require(count, "count");
        const auto d = bsdisc::f_density_check(q, x);
        *count = d.count;
        if (asymptote) *asymptote = d.asymptote;
    });
}

bsdisc_status bsdisc_verify(const char *suite, unsigned threads, bsdisc_report **out)
{
    return guarded([&] {
        require(suite, "suite");
        require(out, "out");
        *out = new bsdisc_report{bsdisc::run_verify(suite, threads)};
    });
}

size_t bsdisc_report_size(const bsdisc_report *r) { return r ? r->report.checks.size() : 0; }

int bsdisc_report_passed(const bsdisc_report *r) { return r && r->report.passed() ? 1 : 0; }

bsdisc_status bsdisc_report_check(const bsdisc_report *r, size_t index, const char **name, int *passed,
                                  const char **detail)
{
    return guarded([&] {
        require(r, "report");
        if (index >= r->report.checks.size()) throw std::out_of_range("report index past the end");
        const auto &c = r->report.checks[index];
        if (name) *name = c.name.c_str();
        if (passed) *passed = c.passed ? 1 : 0;
        if (detail) *detail = c.detail.c_str();
    });
}

void bsdisc_report_destroy(bsdisc_report *r) { delete r; }

}  // extern "C"
