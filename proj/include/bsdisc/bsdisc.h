/*
 * bsdisc: discriminators of the sequences u_q(j) = (3^j - q*(-1)^j)/4.
 *
 * Plain C interface to libbsdisc. Every fallible call returns a
 * bsdisc_status; on failure bsdisc_last_error() describes the problem
 * (thread-local, valid until the next failing call on the same thread).
 * Objects returned through `**out` parameters are owned by the caller and
 * released with the matching *_destroy function.
 *
 * A `threads` argument of 0 means: BSDISC_THREADS from the environment,
 * else the hardware concurrency. Results never depend on the thread count.
 */
#ifndef BSDISC_BSDISC_H
#define BSDISC_BSDISC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef BSDISC_BUILDING_LIBRARY
#    define BSDISC_API __declspec(dllexport)
#  else
#    define BSDISC_API __declspec(dllimport)
#  endif
#else
#  define BSDISC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bsdisc_status {
    BSDISC_OK = 0,
    BSDISC_INVALID_ARGUMENT = 1, /* precondition violated, e.g. q not prime */
    BSDISC_DOMAIN_ERROR = 2,     /* hypothesis of a closed form not met */
    BSDISC_OVERFLOW = 3,         /* input exceeds the supported range */
    BSDISC_LIMIT_EXCEEDED = 4,   /* a bounded search hit its cap */
    BSDISC_IO_ERROR = 5,
    BSDISC_OUT_OF_RANGE = 6,     /* row/column index past the end */
    BSDISC_INTERNAL_ERROR = 7
} bsdisc_status;

BSDISC_API const char *bsdisc_version(void);
BSDISC_API const char *bsdisc_status_string(bsdisc_status status);
BSDISC_API const char *bsdisc_last_error(void);

/* ---- number theory helpers --------------------------------------------- */

BSDISC_API int bsdisc_is_prime(uint64_t n);
BSDISC_API bsdisc_status bsdisc_mult_order(int64_t a, uint64_t m, uint64_t *out);

/* ---- the sequence -------------------------------------------------------- */

typedef struct bsdisc_sequence bsdisc_sequence;

/* q must be a prime >= 5. */
BSDISC_API bsdisc_status bsdisc_sequence_create(int64_t q, bsdisc_sequence **out);
BSDISC_API void bsdisc_sequence_destroy(bsdisc_sequence *seq);
BSDISC_API uint64_t bsdisc_sequence_q(const bsdisc_sequence *seq);
BSDISC_API int64_t bsdisc_sequence_q_star(const bsdisc_sequence *seq);

/* u_q(j) mod m in [0, m). */
BSDISC_API bsdisc_status bsdisc_term_mod(const bsdisc_sequence *seq, uint64_t j, uint64_t m, uint64_t *out);

/* Exact u_q(j) in decimal. Writes at most `capacity` bytes including the
 * terminator; `*needed` (optional) receives the full size. Returns
 * BSDISC_OUT_OF_RANGE if the buffer is too small. */
BSDISC_API bsdisc_status bsdisc_term_exact(const bsdisc_sequence *seq, uint64_t j, char *buffer, size_t capacity,
                                           size_t *needed);

/* ---- periods ------------------------------------------------------------- */

typedef struct bsdisc_period {
    uint64_t period;
    uint64_t pre_period;
    int pure;
} bsdisc_period;

BSDISC_API bsdisc_status bsdisc_period_closed(const bsdisc_sequence *seq, uint64_t d, bsdisc_period *out);
/* horizon 0 selects the default (pre-period + 2 * period + 8). */
BSDISC_API bsdisc_status bsdisc_period_brute(const bsdisc_sequence *seq, uint64_t d, uint64_t horizon,
                                             bsdisc_period *out);

/* ---- row tables (run-length tables, h-tables, value lists, scans) ------ */

typedef struct bsdisc_table bsdisc_table;

BSDISC_API size_t bsdisc_table_rows(const bsdisc_table *table);
BSDISC_API size_t bsdisc_table_cols(const bsdisc_table *table);
BSDISC_API const char *bsdisc_table_column_name(const bsdisc_table *table, size_t col);
BSDISC_API bsdisc_status bsdisc_table_at(const bsdisc_table *table, size_t row, size_t col, uint64_t *out);
BSDISC_API void bsdisc_table_destroy(bsdisc_table *table);

/* ---- incongruence indices ------------------------------------------------ */

typedef enum bsdisc_p_part {
    BSDISC_PART_NONE = 0,
    BSDISC_PART_P1 = 1,
    BSDISC_PART_P2 = 2,
    BSDISC_PART_P3 = 3
} bsdisc_p_part;

BSDISC_API bsdisc_status bsdisc_incongruence_index(const bsdisc_sequence *seq, uint64_t m, uint64_t *out);
BSDISC_API bsdisc_status bsdisc_p_membership(uint64_t p, uint64_t q, bsdisc_p_part *out);
/* Columns: residue. */
BSDISC_API bsdisc_status bsdisc_s_set(uint64_t p, uint64_t r, bsdisc_table **out);
BSDISC_API bsdisc_status bsdisc_h_universal(uint64_t p, uint64_t *out);
/* Columns: p, h. Every p in P with p <= p_max, ascending. */
BSDISC_API bsdisc_status bsdisc_h_table(uint64_t p_max, unsigned threads, bsdisc_table **out);
BSDISC_API bsdisc_status bsdisc_iota_q_squared(uint64_t q, uint64_t *out);
BSDISC_API bsdisc_status bsdisc_charsum(uint64_t p, int64_t a, int64_t b, int64_t c, uint64_t g,
                                        uint64_t *set_size, double *max_magnitude);

/* ---- prime classification ------------------------------------------------ */

typedef enum bsdisc_theorem_case {
    BSDISC_CASE_ARTIN_NOT_MIRIMANOFF = 0,
    BSDISC_CASE_ARTIN_MIRIMANOFF_NOT_FERMAT = 1,
    BSDISC_CASE_ARTIN_MIRIMANOFF_FERMAT = 2,
    BSDISC_CASE_NOT_ARTIN = 3
} bsdisc_theorem_case;

BSDISC_API const char *bsdisc_theorem_case_name(bsdisc_theorem_case c);

typedef struct bsdisc_classification {
    uint64_t q;
    int artin;
    int fermat;
    int mirimanoff;
    int mod28;       /* q = +-1 (mod 28) */
    int eight_class; /* 1..8 */
    bsdisc_theorem_case theorem_case;
} bsdisc_classification;

BSDISC_API bsdisc_status bsdisc_classify(uint64_t q, bsdisc_classification *out);

/* Columns: q, artin, fermat, mirimanoff, mod28, class. The first
 * `prime_count` primes >= 5. `cache_path` may be NULL; otherwise the CSV
 * cache there is reused when it holds exactly prime_count rows and
 * rewritten when it does not. */
BSDISC_API bsdisc_status bsdisc_classify_scan(size_t prime_count, unsigned threads, const char *cache_path,
                                              bsdisc_table **out);

typedef struct bsdisc_density_report {
    uint64_t prime_count;
    uint64_t counts[8];
    double empirical[8];
    double conjectural[8];
    double artin_constant;
} bsdisc_density_report;

BSDISC_API bsdisc_status bsdisc_density_scan(size_t prime_count, unsigned threads, const char *cache_path,
                                             bsdisc_density_report *out);
BSDISC_API bsdisc_status bsdisc_artin_constant(uint64_t prime_bound, double *value, double *log_error_bound);
/* Columns: q. */
BSDISC_API bsdisc_status bsdisc_mirimanoff_scan(uint64_t bound, unsigned threads, bsdisc_table **out);

/* ---- discriminators ------------------------------------------------------ */

typedef enum bsdisc_branch {
    BSDISC_BRANCH_POWER_OF_TWO = 0,
    BSDISC_BRANCH_POWER_OF_Q = 1,
    BSDISC_BRANCH_EXCEPTIONAL_7 = 2
} bsdisc_branch;

BSDISC_API const char *bsdisc_branch_name(bsdisc_branch b);

typedef enum bsdisc_powq_state {
    BSDISC_POWQ_NONE = 0,     /* the case admits no power of q */
    BSDISC_POWQ_PRESENT = 1,  /* powq_candidate holds it */
    BSDISC_POWQ_TOO_LARGE = 2 /* exists but exceeds 64 bits */
} bsdisc_powq_state;

typedef struct bsdisc_disc_result {
    uint64_t n;
    uint64_t value;
    bsdisc_branch branch;
    uint64_t pow2_candidate;
    bsdisc_powq_state powq_state;
    uint64_t powq_candidate;
} bsdisc_disc_result;

BSDISC_API bsdisc_status bsdisc_disc_closed(const bsdisc_sequence *seq, uint64_t n, bsdisc_disc_result *out);
BSDISC_API bsdisc_status bsdisc_disc_brute(const bsdisc_sequence *seq, uint64_t n, uint64_t *out);
/* Columns: n_low, n_high, value. */
BSDISC_API bsdisc_status bsdisc_disc_table(const bsdisc_sequence *seq, uint64_t n_max, unsigned threads,
                                           bsdisc_table **out);
BSDISC_API bsdisc_status bsdisc_small_n(uint64_t q, uint64_t n, uint64_t *out);
/* Columns: f. */
BSDISC_API bsdisc_status bsdisc_f_exponents(uint64_t q, uint64_t max_f, bsdisc_table **out);
/* Columns: value. */
BSDISC_API bsdisc_status bsdisc_value_set(uint64_t q, uint64_t bound, bsdisc_table **out);
BSDISC_API bsdisc_status bsdisc_f_density(uint64_t q, uint64_t x, uint64_t *count, double *asymptote);

/* ---- verification suites ------------------------------------------------- */

typedef struct bsdisc_report bsdisc_report;

/* suite: oracle, period, index, iota2, charsum or all. */
BSDISC_API bsdisc_status bsdisc_verify(const char *suite, unsigned threads, bsdisc_report **out);
BSDISC_API size_t bsdisc_report_size(const bsdisc_report *report);
BSDISC_API int bsdisc_report_passed(const bsdisc_report *report);
BSDISC_API bsdisc_status bsdisc_report_check(const bsdisc_report *report, size_t index, const char **name,
                                             int *passed, const char **detail);
BSDISC_API void bsdisc_report_destroy(bsdisc_report *report);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* BSDISC_BSDISC_H */
