// bsdisc: command-line frontend over the C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <bsdisc/bsdisc.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cinttypes>
#include <map>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

enum class Format { plain, csv, json };

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct ApiError {
    bsdisc_status status;
    std::string message;
};

void check(bsdisc_status s)
{
    if (s != BSDISC_OK) throw ApiError{s, bsdisc_last_error()};
}

struct SequenceDeleter {
    void operator()(bsdisc_sequence *p) const { bsdisc_sequence_destroy(p); }
};
struct TableDeleter {
    void operator()(bsdisc_table *p) const { bsdisc_table_destroy(p); }
};
struct ReportDeleter {
    void operator()(bsdisc_report *p) const { bsdisc_report_destroy(p); }
};
using Sequence = std::unique_ptr<bsdisc_sequence, SequenceDeleter>;
using Table = std::unique_ptr<bsdisc_table, TableDeleter>;
using Report = std::unique_ptr<bsdisc_report, ReportDeleter>;

Sequence make_sequence(int64_t q)
{
    bsdisc_sequence *raw = nullptr;
    check(bsdisc_sequence_create(q, &raw));
    return Sequence(raw);
}

Table adopt(bsdisc_table *raw) { return Table(raw); }

uint64_t cell(const Table &t, size_t row, size_t col)
{
    uint64_t v = 0;
    check(bsdisc_table_at(t.get(), row, col, &v));
    return v;
}

std::vector<uint64_t> column(const Table &t, size_t col = 0)
{
    std::vector<uint64_t> out(bsdisc_table_rows(t.get()));
    for (size_t r = 0; r < out.size(); ++r) out[r] = cell(t, r, col);
    return out;
}

// Fixed-precision rendering keeps csv and plain output byte-stable.
std::string fixed(double x, int digits = 10)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::string csv_table(const Table &t)
{
    std::ostringstream os;
    const size_t cols = bsdisc_table_cols(t.get());
    for (size_t c = 0; c < cols; ++c) os << (c ? "," : "") << bsdisc_table_column_name(t.get(), c);
    os << '\n';
    for (size_t r = 0; r < bsdisc_table_rows(t.get()); ++r) {
        for (size_t c = 0; c < cols; ++c) os << (c ? "," : "") << cell(t, r, c);
        os << '\n';
    }
    return os.str();
}

json json_rows(const Table &t)
{
    json rows = json::array();
    const size_t cols = bsdisc_table_cols(t.get());
    for (size_t r = 0; r < bsdisc_table_rows(t.get()); ++r) {
        json row = json::object();
        for (size_t c = 0; c < cols; ++c) row[bsdisc_table_column_name(t.get(), c)] = cell(t, r, c);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

struct Options {
    Format format = Format::plain;
    std::string out_path;
    unsigned threads = 0;
};

class Cli {
public:
    Cli();
    int run(int argc, char **argv);

private:
    void emit(const std::string &text) const;
    std::string yes_no(int flag) const { return flag ? "yes" : "no"; }

    int cmd_disc();
    int cmd_table();
    int cmd_htable();
    int cmd_classify();
    int cmd_density();
    int cmd_verify();
    int cmd_term();
    int cmd_period();
    int cmd_index();
    int cmd_iota2();
    int cmd_values();
    int cmd_fexp();
    int cmd_mirimanoff();
    int cmd_artin();

    CLI::App app_{"Discriminators of u_q(j) = (3^j - q*(-1)^j)/4", "bsdisc"};
    Options opt_;
    int (Cli::*action_)() = nullptr;

    int64_t q_ = 0;
    uint64_t n_ = 0, m_ = 0, bound_ = 0, horizon_ = 0;
    std::string mode_ = "closed";
    std::string suite_;
    std::string cache_;
    uint64_t scan_ = 0;
    bool assert_bound_ = false;
};

Cli::Cli()
{
    app_.require_subcommand(1);
    app_.set_version_flag("--version", bsdisc_version());
    const std::map<std::string, Format> formats{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
    app_.add_option("--format", opt_.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("plain|csv|json");
    app_.add_option("--out", opt_.out_path, "Write output to FILE instead of stdout");
    app_.add_option("--threads", opt_.threads, "Worker threads (default: $BSDISC_THREADS or all cores)");

    auto bind = [this](CLI::App *sub, int (Cli::*fn)()) {
        sub->fallthrough();
        sub->callback([this, fn] { action_ = fn; });
    };

    auto *disc = app_.add_subcommand("disc", "D_q(n): least modulus separating u_q(1..n)");
    disc->add_option("q", q_)->required();
    disc->add_option("n", n_)->required();
    disc->add_option("--mode", mode_)->check(CLI::IsMember({"closed", "brute", "check"}));
    bind(disc, &Cli::cmd_disc);

    auto *table = app_.add_subcommand("table", "Run-length table of D_q(n) for 1 <= n <= n_max");
    table->add_option("q", q_)->required();
    table->add_option("n_max", n_)->required();
    bind(table, &Cli::cmd_table);

    auto *htable = app_.add_subcommand("htable", "Universal incongruence index h(p) for p in P, p <= p_max");
    htable->add_option("p_max", bound_)->required();
    htable->add_flag("--assert-bound", assert_bound_, "Exit 1 unless h(p) <= (p+1)/2 for every listed p >= 31");
    bind(htable, &Cli::cmd_htable);

    auto *classify = app_.add_subcommand("classify", "Artin / Fermat / Mirimanoff flags and eight-class index");
    auto *cq = classify->add_option("q", q_);
    auto *cs = classify->add_option("--scan", scan_, "Classify the first N primes >= 5");
    cq->excludes(cs);
    classify->add_option("--cache", cache_, "CSV cache for --scan");
    bind(classify, &Cli::cmd_classify);

    auto *density = app_.add_subcommand("density", "Empirical eight-class densities over the first N primes >= 5");
    density->add_option("N", scan_)->required();
    density->add_option("--cache", cache_, "CSV cache of the underlying scan");
    bind(density, &Cli::cmd_density);

    auto *verify = app_.add_subcommand("verify", "Run a cross-check suite");
    verify->add_option("suite", suite_)->required()->option_text("oracle|period|index|iota2|charsum|all");
    bind(verify, &Cli::cmd_verify);

    auto *term = app_.add_subcommand("term", "u_q(j), exactly or modulo m");
    term->add_option("q", q_)->required();
    term->add_option("j", n_)->required();
    term->add_option("--mod", m_, "Reduce modulo m");
    bind(term, &Cli::cmd_term);

    auto *period = app_.add_subcommand("period", "Period and pre-period of u_q mod d");
    period->add_option("q", q_)->required();
    period->add_option("d", m_)->required();
    period->add_option("--mode", mode_)->check(CLI::IsMember({"closed", "brute", "check"}));
    period->add_option("--horizon", horizon_, "Simulation horizon for brute mode");
    bind(period, &Cli::cmd_period);

    auto *index = app_.add_subcommand("index", "Incongruence index of u_q mod m");
    index->add_option("q", q_)->required();
    index->add_option("m", m_)->required();
    bind(index, &Cli::cmd_index);

    auto *iota2 = app_.add_subcommand("iota2", "Incongruence index of u_q mod q^2 from the closed form");
    iota2->add_option("q", q_)->required();
    bind(iota2, &Cli::cmd_iota2);

    auto *values = app_.add_subcommand("values", "All discriminator values of u_q up to a bound");
    values->add_option("q", q_)->required();
    values->add_option("bound", bound_)->required();
    bind(values, &Cli::cmd_values);

    auto *fexp = app_.add_subcommand("fexp", "Exponents f <= max_f with q^f a discriminator value");
    fexp->add_option("q", q_)->required();
    fexp->add_option("max_f", bound_)->required();
    bind(fexp, &Cli::cmd_fexp);

    auto *miri = app_.add_subcommand("mirimanoff", "Primes q <= bound with 3^(q-1) = 1 mod q^2");
    miri->add_option("bound", bound_)->required();
    bind(miri, &Cli::cmd_mirimanoff);

    auto *artin = app_.add_subcommand("artin", "Artin constant as a truncated Euler product");
    bound_ = 10'000'000;
    artin->add_option("bound", bound_, "Prime bound of the product");
    bind(artin, &Cli::cmd_artin);
}

int Cli::run(int argc, char **argv)
{
    try {
        app_.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app_.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    try {
        return (this->*action_)();
    } catch (const ApiError &e) {
        std::cerr << "bsdisc: " << bsdisc_status_string(e.status) << ": " << e.message << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "bsdisc: " << e.what() << '\n';
        return kExitUsage;
    }
}

void Cli::emit(const std::string &text) const
{
    if (opt_.out_path.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(opt_.out_path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + opt_.out_path);
}

int Cli::cmd_disc()
{
    const Sequence seq = make_sequence(q_);
    bsdisc_disc_result closed{};
    uint64_t brute = 0;
    if (mode_ != "brute") check(bsdisc_disc_closed(seq.get(), n_, &closed));
    if (mode_ != "closed") check(bsdisc_disc_brute(seq.get(), n_, &brute));
    const uint64_t value = mode_ == "brute" ? brute : closed.value;
    const bool agree = mode_ != "check" || brute == closed.value;

    json j = {{"q", q_}, {"n", n_}, {"mode", mode_}, {"value", value}};
    if (mode_ != "brute") j["branch"] = bsdisc_branch_name(closed.branch);
    if (mode_ == "check") {
        j["brute"] = brute;
        j["agree"] = agree;
    }
    switch (opt_.format) {
    case Format::json: emit(dump(j)); break;
    case Format::csv: {
        std::ostringstream os;
        os << "q,n,value" << (mode_ == "check" ? ",brute,agree" : "") << '\n' << q_ << ',' << n_ << ',' << value;
        if (mode_ == "check") os << ',' << brute << ',' << (agree ? 1 : 0);
        emit(os.str() + "\n");
        break;
    }
    case Format::plain:
        if (mode_ == "check")
            emit(agree ? std::to_string(value) + " OK\n"
                       : std::to_string(value) + " MISMATCH (brute force gives " + std::to_string(brute) + ")\n");
        else
            emit(std::to_string(value) + "\n");
        break;
    }
    return agree ? 0 : kExitVerifyFailed;
}

int Cli::cmd_table()
{
    const Sequence seq = make_sequence(q_);
    bsdisc_table *raw = nullptr;
    check(bsdisc_disc_table(seq.get(), n_, opt_.threads, &raw));
    const Table t = adopt(raw);
    switch (opt_.format) {
    case Format::csv: emit(csv_table(t)); break;
    case Format::json: emit(dump({{"q", q_}, {"n_max", n_}, {"rows", json_rows(t)}})); break;
    case Format::plain: {
        std::ostringstream os;
        os << "n | D_" << q_ << "(n)\n";
        for (size_t r = 0; r < bsdisc_table_rows(t.get()); ++r) {
            const uint64_t lo = cell(t, r, 0), hi = cell(t, r, 1);
            if (lo == hi)
                os << lo;
            else
                os << lo << '-' << hi;
            os << " | " << cell(t, r, 2) << '\n';
        }
        emit(os.str());
        break;
    }
    }
    return 0;
}

int Cli::cmd_htable()
{
    bsdisc_table *raw = nullptr;
    check(bsdisc_h_table(bound_, opt_.threads, &raw));
    const Table t = adopt(raw);
    uint64_t checked = 0, violations = 0;
    for (size_t r = 0; r < bsdisc_table_rows(t.get()); ++r) {
        const uint64_t p = cell(t, r, 0), h = cell(t, r, 1);
        if (p < 31) continue;
        ++checked;
        if (2 * h > p + 1) ++violations;
    }
    switch (opt_.format) {
    case Format::csv: emit(csv_table(t)); break;
    case Format::json: {
        json j = {{"p_max", bound_}, {"rows", json_rows(t)}};
        if (assert_bound_) j["bound_violations"] = violations;
        emit(dump(j));
        break;
    }
    case Format::plain: {
        std::ostringstream os;
        os << "p | h(p)\n";
        for (size_t r = 0; r < bsdisc_table_rows(t.get()); ++r) os << cell(t, r, 0) << " | " << cell(t, r, 1) << '\n';
        if (assert_bound_)
            os << "h(p) <= (p+1)/2 for p >= 31: " << (violations ? "FAIL" : "PASS") << " (" << checked << " primes, "
               << violations << " violations)\n";
        emit(os.str());
        break;
    }
    }
    return assert_bound_ && violations ? kExitVerifyFailed : 0;
}

int Cli::cmd_classify()
{
    if (scan_ == 0 && q_ == 0) throw CLI::ValidationError("classify", "give a prime q or --scan N");
    if (scan_ > 0) {
        bsdisc_table *raw = nullptr;
        check(bsdisc_classify_scan(scan_, opt_.threads, cache_.empty() ? nullptr : cache_.c_str(), &raw));
        const Table t = adopt(raw);
        switch (opt_.format) {
        case Format::json: emit(dump({{"prime_count", scan_}, {"rows", json_rows(t)}})); break;
        case Format::csv:
        case Format::plain: emit(csv_table(t)); break;
        }
        return 0;
    }
    if (q_ < 0) throw ApiError{BSDISC_INVALID_ARGUMENT, "q must be a prime >= 5"};
    bsdisc_classification c{};
    check(bsdisc_classify(static_cast<uint64_t>(q_), &c));
    const char *theorem_case = bsdisc_theorem_case_name(c.theorem_case);
    switch (opt_.format) {
    case Format::json:
        emit(dump({{"q", c.q},
                   {"artin", c.artin},
                   {"fermat", c.fermat},
                   {"mirimanoff", c.mirimanoff},
                   {"mod28", c.mod28},
                   {"class", c.eight_class},
                   {"case", theorem_case}}));
        break;
    case Format::csv: {
        std::ostringstream os;
        os << "q,artin,fermat,mirimanoff,mod28,class\n"
           << c.q << ',' << c.artin << ',' << c.fermat << ',' << c.mirimanoff << ',' << c.mod28 << ',' << c.eight_class
           << '\n';
        emit(os.str());
        break;
    }
    case Format::plain: {
        std::ostringstream os;
        os << "q " << c.q << '\n'
           << "artin " << yes_no(c.artin) << '\n'
           << "fermat " << yes_no(c.fermat) << '\n'
           << "mirimanoff " << yes_no(c.mirimanoff) << '\n'
           << "q = +-1 mod 28 " << yes_no(c.mod28) << '\n'
           << "class " << c.eight_class << '\n'
           << "case " << theorem_case << '\n';
        emit(os.str());
        break;
    }
    }
    return 0;
}

int Cli::cmd_density()
{
    bsdisc_density_report rep{};
    check(bsdisc_density_scan(scan_, opt_.threads, cache_.empty() ? nullptr : cache_.c_str(), &rep));
    switch (opt_.format) {
    case Format::json: {
        json classes = json::array();
        for (int i = 0; i < 8; ++i)
            classes.push_back({{"class", i + 1},
                               {"count", rep.counts[i]},
                               {"empirical", rep.empirical[i]},
                               {"conjectural", rep.conjectural[i]}});
        emit(dump({{"prime_count", rep.prime_count}, {"artin_constant", rep.artin_constant}, {"classes", classes}}));
        break;
    }
    case Format::csv: {
        std::ostringstream os;
        os << "class,count,empirical,conjectural\n";
        for (int i = 0; i < 8; ++i)
            os << i + 1 << ',' << rep.counts[i] << ',' << fixed(rep.empirical[i]) << ',' << fixed(rep.conjectural[i])
               << '\n';
        emit(os.str());
        break;
    }
    case Format::plain: {
        std::ostringstream os;
        os << "primes " << rep.prime_count << ", Artin constant " << fixed(rep.artin_constant, 12) << '\n'
           << "class | count | empirical | conjectural\n";
        for (int i = 0; i < 8; ++i)
            os << i + 1 << " | " << rep.counts[i] << " | " << fixed(rep.empirical[i], 4) << " | "
               << fixed(rep.conjectural[i], 4) << '\n';
        emit(os.str());
        break;
    }
    }
    return 0;
}

int Cli::cmd_verify()
{
    bsdisc_report *raw = nullptr;
    check(bsdisc_verify(suite_.c_str(), opt_.threads, &raw));
    const Report rep(raw);
    const bool passed = bsdisc_report_passed(rep.get()) != 0;
    struct Row {
        const char *name;
        int passed;
        const char *detail;
    };
    std::vector<Row> rows(bsdisc_report_size(rep.get()));
    for (size_t i = 0; i < rows.size(); ++i) check(bsdisc_report_check(rep.get(), i, &rows[i].name, &rows[i].passed, &rows[i].detail));

    switch (opt_.format) {
    case Format::json: {
        json checks = json::array();
        for (const auto &r : rows) checks.push_back({{"name", r.name}, {"passed", r.passed != 0}, {"detail", r.detail}});
        emit(dump({{"suite", suite_}, {"passed", passed}, {"checks", checks}}));
        break;
    }
    case Format::csv: {
        std::ostringstream os;
        os << "name,passed,detail\n";
        for (const auto &r : rows) os << '"' << r.name << "\"," << r.passed << ",\"" << r.detail << "\"\n";
        emit(os.str());
        break;
    }
    case Format::plain: {
        std::ostringstream os;
        for (const auto &r : rows) os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        os << (passed ? "PASS" : "FAIL") << '\n';
        emit(os.str());
        break;
    }
    }
    return passed ? 0 : kExitVerifyFailed;
}

int Cli::cmd_term()
{
    const Sequence seq = make_sequence(q_);
    std::string value;
    if (m_ > 0) {
        uint64_t r = 0;
        check(bsdisc_term_mod(seq.get(), n_, m_, &r));
        value = std::to_string(r);
    } else {
        size_t needed = 0;
        bsdisc_term_exact(seq.get(), n_, nullptr, 0, &needed);
        if (needed == 0) check(bsdisc_term_exact(seq.get(), n_, nullptr, 0, nullptr));
        std::vector<char> buf(needed);
        check(bsdisc_term_exact(seq.get(), n_, buf.data(), buf.size(), nullptr));
        value = buf.data();
    }
    switch (opt_.format) {
    case Format::json: {
        json j = {{"q", q_}, {"j", n_}};
        if (m_ > 0) j["m"] = m_;
        j["value"] = value;
        emit(dump(j));
        break;
    }
    case Format::csv:
        emit(m_ > 0 ? "q,j,m,value\n" + std::to_string(q_) + "," + std::to_string(n_) + "," + std::to_string(m_) + "," +
                          value + "\n"
                    : "q,j,value\n" + std::to_string(q_) + "," + std::to_string(n_) + "," + value + "\n");
        break;
    case Format::plain: emit(value + "\n"); break;
    }
    return 0;
}

int Cli::cmd_period()
{
    const Sequence seq = make_sequence(q_);
    bsdisc_period closed{}, brute{};
    if (mode_ != "brute") check(bsdisc_period_closed(seq.get(), m_, &closed));
    if (mode_ != "closed") check(bsdisc_period_brute(seq.get(), m_, horizon_, &brute));
    const bsdisc_period &shown = mode_ == "brute" ? brute : closed;
    const bool agree = mode_ != "check" ||
                       (closed.period == brute.period && closed.pre_period == brute.pre_period && closed.pure == brute.pure);
    switch (opt_.format) {
    case Format::json: {
        json j = {{"q", q_},
                  {"d", m_},
                  {"mode", mode_},
                  {"period", shown.period},
                  {"pre_period", shown.pre_period},
                  {"pure", shown.pure != 0}};
        if (mode_ == "check") j["agree"] = agree;
        emit(dump(j));
        break;
    }
    case Format::csv: {
        std::ostringstream os;
        os << "q,d,period,pre_period,pure\n"
           << q_ << ',' << m_ << ',' << shown.period << ',' << shown.pre_period << ',' << shown.pure << '\n';
        emit(os.str());
        break;
    }
    case Format::plain: {
        std::ostringstream os;
        os << "period " << shown.period << ", pre-period " << shown.pre_period << ", " << (shown.pure ? "pure" : "not pure");
        if (mode_ == "check") os << (agree ? " OK" : " MISMATCH");
        emit(os.str() + "\n");
        break;
    }
    }
    return agree ? 0 : kExitVerifyFailed;
}

int Cli::cmd_index()
{
    const Sequence seq = make_sequence(q_);
    uint64_t v = 0;
    check(bsdisc_incongruence_index(seq.get(), m_, &v));
    switch (opt_.format) {
    case Format::json: emit(dump({{"q", q_}, {"m", m_}, {"index", v}})); break;
    case Format::csv:
        emit("q,m,index\n" + std::to_string(q_) + "," + std::to_string(m_) + "," + std::to_string(v) + "\n");
        break;
    case Format::plain: emit(std::to_string(v) + "\n"); break;
    }
    return 0;
}

int Cli::cmd_iota2()
{
    if (q_ < 0) throw ApiError{BSDISC_INVALID_ARGUMENT, "q must be a prime"};
    uint64_t v = 0;
    check(bsdisc_iota_q_squared(static_cast<uint64_t>(q_), &v));
    switch (opt_.format) {
    case Format::json: emit(dump({{"q", q_}, {"index", v}})); break;
    case Format::csv: emit("q,index\n" + std::to_string(q_) + "," + std::to_string(v) + "\n"); break;
    case Format::plain: emit(std::to_string(v) + "\n"); break;
    }
    return 0;
}

int Cli::cmd_values()
{
    if (q_ < 0) throw ApiError{BSDISC_INVALID_ARGUMENT, "q must be a prime >= 5"};
    bsdisc_table *raw = nullptr;
    check(bsdisc_value_set(static_cast<uint64_t>(q_), bound_, &raw));
    const Table t = adopt(raw);
    switch (opt_.format) {
    case Format::json: emit(dump({{"q", q_}, {"bound", bound_}, {"values", column(t)}})); break;
    case Format::csv: emit(csv_table(t)); break;
    case Format::plain: {
        std::string s;
        for (const uint64_t v : column(t)) s += (s.empty() ? "" : " ") + std::to_string(v);
        emit(s + "\n");
        break;
    }
    }
    return 0;
}

int Cli::cmd_fexp()
{
    if (q_ < 0) throw ApiError{BSDISC_INVALID_ARGUMENT, "q must be a prime >= 5"};
    bsdisc_table *raw = nullptr;
    check(bsdisc_f_exponents(static_cast<uint64_t>(q_), bound_, &raw));
    const Table t = adopt(raw);
    uint64_t count = 0;
    double asymptote = 0;
    check(bsdisc_f_density(static_cast<uint64_t>(q_), bound_, &count, &asymptote));
    switch (opt_.format) {
    case Format::json:
        emit(dump({{"q", q_}, {"max_f", bound_}, {"exponents", column(t)}, {"count", count}, {"asymptote", asymptote}}));
        break;
    case Format::csv: emit(csv_table(t)); break;
    case Format::plain: {
        std::string s;
        for (const uint64_t v : column(t)) s += (s.empty() ? "" : " ") + std::to_string(v);
        emit(s + "\ncount " + std::to_string(count) + ", asymptote " + fixed(asymptote, 2) + "\n");
        break;
    }
    }
    return 0;
}

int Cli::cmd_mirimanoff()
{
    bsdisc_table *raw = nullptr;
    check(bsdisc_mirimanoff_scan(bound_, opt_.threads, &raw));
    const Table t = adopt(raw);
    switch (opt_.format) {
    case Format::json: emit(dump({{"bound", bound_}, {"primes", column(t)}})); break;
    case Format::csv: emit(csv_table(t)); break;
    case Format::plain: {
        std::string s;
        for (const uint64_t v : column(t)) s += (s.empty() ? "" : " ") + std::to_string(v);
        emit(s + "\n");
        break;
    }
    }
    return 0;
}

int Cli::cmd_artin()
{
    double value = 0, err = 0;
    check(bsdisc_artin_constant(bound_, &value, &err));
    switch (opt_.format) {
    case Format::json: emit(dump({{"bound", bound_}, {"value", value}, {"log_error_bound", err}})); break;
    case Format::csv: emit("bound,value,log_error_bound\n" + std::to_string(bound_) + "," + fixed(value, 12) + "," + fixed(err, 12) + "\n"); break;
    case Format::plain: emit(fixed(value, 12) + "\n"); break;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv)
{
    Cli cli;
    return cli.run(argc, argv);
}
