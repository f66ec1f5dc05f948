#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddbounds/bounds.hpp"
#include "oddbounds/errors.hpp"
#include "oddbounds/identities.hpp"
#include "oddbounds/partitions.hpp"
#include "oddbounds/series.hpp"

namespace oddbounds::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { text, csv, json };

const std::map<std::string, Format> format_names{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};

unsigned default_threads()
{
    return std::max(1U, std::thread::hardware_concurrency());
}

// Thrown for validation failures after CLI11 parsing succeeded.
struct usage_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_positive(const std::string& text, std::string_view flag)
{
    Rational x;
    try {
        x = Rational::parse(text);
    } catch (const parse_error& e) {
        throw usage_failure(std::string(flag) + ": " + e.what());
    }
    if (x.sign() <= 0) {
        throw usage_failure(std::string(flag) + " must be a positive rational, got " + x.str());
    }
    return x;
}

// Numbers while they fit in 64 bits, decimal strings beyond.
ordered_json big_json(const BigInt& v)
{
    return v.fits_ulong_p() ? ordered_json(v.get_ui()) : ordered_json(v.get_str());
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string suite = "all";
    std::optional<std::uint64_t> max_n;
    std::optional<std::uint64_t> max_k;
    bool exact = false;
    std::uint64_t brute_limit = 100;
    unsigned threads = default_threads();
    Format format = Format::text;
};

struct SuiteSpec {
    std::string name;
    std::uint64_t default_n;
    std::optional<std::uint64_t> default_k;  // absent: the suite has no k axis
    // Tighter cap than --brute-limit for enumerations that grow like p(n).
    std::optional<std::uint64_t> own_limit;
    bool brute;
    std::function<VerificationReport(std::uint64_t k, std::uint64_t n, unsigned threads)> run;
};

const std::vector<SuiteSpec>& suites()
{
    static const std::vector<SuiteSpec> all{
        {"q-sums", 100, std::nullopt, std::nullopt, true,
         [](std::uint64_t, std::uint64_t n, unsigned th) { return check_q_sums(build_qtable(n, th)); }},
        {"closed-forms", 100, 32, std::nullopt, true,
         [](std::uint64_t k, std::uint64_t n, unsigned th) { return check_closed_forms(build_qtable(n, th), k); }},
        {"theorem2", 500, 32, std::nullopt, false,
         [](std::uint64_t k, std::uint64_t n, unsigned) { return check_theorem2(k, n); }},
        {"fib-multinomial", 60, std::nullopt, std::nullopt, true,
         [](std::uint64_t, std::uint64_t n, unsigned) { return check_fib_multinomial(n); }},
        {"fine", 40, std::nullopt, 60, true, [](std::uint64_t, std::uint64_t n, unsigned) { return check_fine(n); }},
        {"theorem3", 100, 8, std::nullopt, true,
         [](std::uint64_t k, std::uint64_t n, unsigned th) { return check_theorem3(k, build_qtable(n, th)); }},
        {"q-le-fib", 1000, std::nullopt, std::nullopt, false,
         [](std::uint64_t, std::uint64_t n, unsigned) { return check_q_le_fib(n); }},
        {"theorem4", 1000, std::nullopt, std::nullopt, false,
         [](std::uint64_t, std::uint64_t n, unsigned) { return check_theorem4(n); }},
        {"theorem4-series", 1000, std::nullopt, std::nullopt, false,
         [](std::uint64_t, std::uint64_t n, unsigned) { return check_theorem4_series(n); }},
        {"theorem4-injections", 40, std::nullopt, 60, true,
         [](std::uint64_t, std::uint64_t n, unsigned) { return check_theorem4_injections(n); }},
        {"proposition", 1000, 10, std::nullopt, false,
         [](std::uint64_t k, std::uint64_t n, unsigned) { return check_proposition(k, n); }},
        {"lemma-S", 200, 20, std::nullopt, false,
         [](std::uint64_t k, std::uint64_t n, unsigned) { return check_lemma_S(k, n); }},
        {"fib-binomial", 500, 10, std::nullopt, false,
         [](std::uint64_t k, std::uint64_t n, unsigned) { return check_fib_binomial(k, n); }},
        {"S-generating-function", 200, 10, std::nullopt, false,
         [](std::uint64_t k, std::uint64_t n, unsigned) { return check_S_generating_function(k, n); }},
        {"decreasing-reduction", 0, 15, std::nullopt, false,
         [](std::uint64_t k, std::uint64_t, unsigned) { return check_decreasing_reduction(k); }},
    };
    return all;
}

ordered_json report_json(const VerificationReport& r)
{
    ordered_json j{{"suite", r.suite},
                   {"status", r.passed() ? "pass" : "fail"},
                   {"range", r.range},
                   {"cases", r.cases_checked}};
    if (r.counterexample) {
        j["counterexample"] = {{"n", r.counterexample->n},
                               {"k", r.counterexample->k},
                               {"lhs", r.counterexample->lhs},
                               {"rhs", r.counterexample->rhs}};
    }
    return j;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out)
{
    if (o.max_n && *o.max_n == 0) {
        throw usage_failure("--max-n must be at least 1 (empty range)");
    }
    std::vector<const SuiteSpec*> selected;
    for (const auto& s : suites()) {
        if (o.suite == "all" || o.suite == s.name) {
            selected.push_back(&s);
        }
    }
    if (selected.empty()) {
        std::string names;
        for (const auto& s : suites()) {
            names += " " + s.name;
        }
        throw usage_failure("unknown suite '" + o.suite + "'; expected all or one of:" + names);
    }

    struct Planned {
        const SuiteSpec* spec;
        std::uint64_t k;
        std::uint64_t n;
    };
    std::vector<Planned> plan;
    for (const SuiteSpec* s : selected) {
        std::uint64_t n = s->default_n;
        std::uint64_t k = s->default_k.value_or(0);
        if (o.max_n && s->default_n > 0) {
            n = o.exact ? *o.max_n : std::min(n, *o.max_n);
        }
        if (o.max_k && s->default_k) {
            k = o.exact ? *o.max_k : std::min(k, *o.max_k);
        }
        if (s->brute) {
            const std::uint64_t limit = s->own_limit ? std::min(*s->own_limit, o.brute_limit) : o.brute_limit;
            if (n > limit) {
                throw usage_failure("suite " + s->name + ": n = " + std::to_string(n)
                                    + " exceeds the brute-force limit " + std::to_string(limit)
                                    + " (raise --brute-limit)");
            }
        }
        plan.push_back({s, k, n});
    }

    bool all_pass = true;
    ordered_json json_reports = ordered_json::array();
    if (o.format == Format::csv) {
        out << "suite,status,range,cases,n,k,lhs,rhs\n";
    }
    for (const auto& p : plan) {
        const VerificationReport r = p.spec->run(p.k, p.n, o.threads);
        all_pass &= r.passed();
        switch (o.format) {
        case Format::text:
            out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.suite << " [" << r.range
                << "] cases=" << r.cases_checked;
            if (r.counterexample) {
                out << " first counterexample: n=" << r.counterexample->n << " k=" << r.counterexample->k
                    << " lhs=" << r.counterexample->lhs << " rhs=" << r.counterexample->rhs;
            }
            out << '\n';
            break;
        case Format::csv:
            out << r.suite << ',' << (r.passed() ? "pass" : "fail") << ',' << csv_escape(r.range) << ','
                << r.cases_checked << ',';
            if (r.counterexample) {
                out << r.counterexample->n << ',' << r.counterexample->k << ',' << r.counterexample->lhs << ','
                    << r.counterexample->rhs;
            } else {
                out << ",,,";
            }
            out << '\n';
            break;
        case Format::json:
            json_reports.push_back(report_json(r));
            break;
        }
    }
    if (o.format == Format::json) {
        out << ordered_json{{"status", all_pass ? "pass" : "fail"}, {"suites", json_reports}}.dump(2) << '\n';
    }
    return all_pass ? exit_ok : exit_verification_failed;
}

// ---------------------------------------------------------------- qtable

struct QTableOptions {
    std::uint64_t max_n = 30;
    std::uint64_t max_k = 4;
    std::uint64_t brute_limit = 100;
    std::string source = "brute";
    unsigned threads = default_threads();
    Format format = Format::text;
};

int cmd_qtable(const QTableOptions& o, std::ostream& out)
{
    if (o.max_n == 0 || o.max_k == 0) {
        throw usage_failure("--max-n and --max-k must be at least 1");
    }
    const bool brute = o.source == "brute";
    if (!brute && o.source != "closed") {
        throw usage_failure("--source must be brute or closed");
    }
    if (brute && o.max_n > o.brute_limit) {
        throw usage_failure("--max-n " + std::to_string(o.max_n) + " exceeds the brute-force limit "
                            + std::to_string(o.brute_limit) + " (raise --brute-limit or use --source closed)");
    }
    std::vector<QRow> rows;
    if (brute) {
        rows = build_qtable(o.max_n, o.threads);
    } else {
        for (std::uint64_t n = 1; n <= o.max_n; ++n) {
            rows.push_back(qk_closed(n, o.max_k));
        }
    }
    const PartitionCounts q(o.max_n);
    const FibCache f(o.max_n);

    // Closed rows carry only the k with a known formula; other cells are absent.
    auto cell = [&](const QRow& row, std::uint64_t k) -> std::optional<QEntry> {
        const auto it = row.entries.find(BigInt(static_cast<unsigned long>(k)));
        if (it != row.entries.end()) {
            return it->second;
        }
        if (brute) {
            return QEntry{0, Provenance::brute};
        }
        return std::nullopt;
    };

    switch (o.format) {
    case Format::csv: {
        out << "n,q,F";
        for (std::uint64_t k = 1; k <= o.max_k; ++k) {
            out << ",Q" << k;
        }
        out << '\n';
        for (const auto& row : rows) {
            const auto n = static_cast<long long>(row.n);
            out << row.n << ',' << q(n) << ',' << f(n);
            for (std::uint64_t k = 1; k <= o.max_k; ++k) {
                out << ',';
                if (auto c = cell(row, k)) {
                    out << c->count;
                }
            }
            out << '\n';
        }
        break;
    }
    case Format::json: {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            const auto n = static_cast<long long>(row.n);
            ordered_json qs = ordered_json::object();
            ordered_json prov = ordered_json::object();
            for (const auto& [k, e] : row.entries) {
                if (k > static_cast<unsigned long>(o.max_k) || e.count == 0) {
                    continue;
                }
                qs[k.get_str()] = e.count;
                prov[k.get_str()] = std::string(to_string(e.source));
            }
            ordered_json j{{"n", row.n}, {"q", big_json(q(n))}, {"F", big_json(f(n))}, {"Q", qs}};
            if (!brute) {
                j["provenance"] = prov;
            }
            arr.push_back(j);
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case Format::text: {
        out << std::right << std::setw(4) << "n" << std::setw(10) << "q" << std::setw(24) << "F";
        for (std::uint64_t k = 1; k <= o.max_k; ++k) {
            out << std::setw(9) << ("Q" + std::to_string(k));
        }
        out << '\n';
        for (const auto& row : rows) {
            const auto n = static_cast<long long>(row.n);
            out << std::setw(4) << row.n << std::setw(10) << q(n) << std::setw(24) << f(n);
            for (std::uint64_t k = 1; k <= o.max_k; ++k) {
                const auto c = cell(row, k);
                std::string v = c ? std::to_string(c->count) : "-";
                if (c && c->source == Provenance::closed_form) {
                    v += "*";
                }
                out << std::setw(9) << v;
            }
            out << '\n';
        }
        out << (brute ? "# source: brute-force enumeration\n" : "# source: closed forms (*); '-' = no closed form\n");
        break;
    }
    }
    return exit_ok;
}

// ---------------------------------------------------------------- bound

struct BoundOptions {
    std::string family;
    std::uint64_t k = 1;
    std::string x;
    std::string subset;
    std::optional<std::uint64_t> subset_bound;
    std::size_t terms = 30;
    unsigned digits = 12;
    Format format = Format::text;
};

std::vector<std::uint64_t> parse_subset(const std::string& spec)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::uint64_t v = 0;
        try {
            std::size_t used = 0;
            v = std::stoull(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw usage_failure("--subset: '" + item + "' is not an integer");
        }
        out.push_back(v);
    }
    return out;
}

std::string rounded(const Rational& v, BoundSide side, unsigned digits)
{
    return v.to_decimal(digits, side == BoundSide::upper ? Rational::Rounding::up : Rational::Rounding::down);
}

int cmd_bound(const BoundOptions& o, std::ostream& out)
{
    const Rational x = parse_positive(o.x, "--x");
    std::vector<std::uint64_t> subset = parse_subset(o.subset);
    if (o.subset_bound) {
        const auto more = prime_powers_up_to(*o.subset_bound).elements;
        subset.insert(subset.end(), more.begin(), more.end());
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    }
    const bool unit_family = o.family == "corollary1" || o.family == "Ak";
    const EvalPoint p = EvalPoint::make(x, unit_family ? EvalPoint::Domain::unit_interval
                                                       : EvalPoint::Domain::golden_interval);
    BoundResult r;
    if (o.family == "corollary1") {
        r = corollary1_lower(p, subset);
    } else if (o.family == "corollary2") {
        r = corollary2_upper(p, subset);
    } else if (o.family == "Ak") {
        r = A_k(p, o.k);
    } else if (o.family == "Bk" || o.family == "theorem3") {
        r = B_k(p, o.k);
        r.family = o.family;
    } else if (o.family == "Rk") {
        r = R_k(p, o.k);
    } else if (o.family == "th6") {
        r = th6_upper(p, o.k);
    } else if (o.family == "th7") {
        r = th7_upper(p, o.k);
    } else {
        throw usage_failure("unknown family '" + o.family
                            + "'; expected corollary1, corollary2, Ak, Bk, theorem3, Rk, th6 or th7");
    }

    std::optional<Rational> certified;
    std::optional<Enclosure> sum;
    if (r.product_form) {
        sum = enclose_odd_divisor_sum(p, o.terms);
        certified = certify(*r.product_form, r.side, *sum);
    }
    const char* rel = r.side == BoundSide::upper ? "<" : ">";

    if (o.format == Format::json) {
        ordered_json j{{"family", r.family}, {"k", r.k},        {"x", r.x.str()},
                       {"side", to_string(r.side)}, {"target", r.target}, {"value", r.value.str()},
                       {"decimal", rounded(r.value, r.side, o.digits)}};
        if (r.product_form) {
            j["product_constant"] = r.product_form->constant.str();
            j["sum_weight"] = r.product_form->sum_weight.str();
            j["certified_product_bound"] = certified->str();
            j["certified_decimal"] = rounded(*certified, r.side, o.digits);
            j["terms"] = o.terms;
        }
        if (r.symbolic) {
            j["symbolic"] = {{"numerator", r.symbolic->numerator().str()},
                             {"denominator", r.symbolic->denominator().str()}};
        }
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << r.value.str() << '\n';
    out << "decimal: " << rounded(r.value, r.side, o.digits) << " (rounded " << (r.side == BoundSide::upper ? "up" : "down")
        << ")\n";
    out << "bound: " << r.target << ' ' << rel << ' ' << r.value.str() << "  [" << r.family << ", k=" << r.k
        << ", x=" << r.x.str() << "]\n";
    if (r.product_form) {
        out << "product form: P " << rel << ' ' << r.product_form->constant.str() << " + "
            << r.product_form->sum_weight.str() << " * L\n";
        out << "certified (L enclosed with " << o.terms << " terms): P " << rel << ' '
            << rounded(*certified, r.side, o.digits) << '\n';
    }
    if (r.symbolic) {
        out << "symbolic: " << r.symbolic->str() << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------- enclose

struct EncloseOptions {
    std::string target = "product";
    std::string x;
    std::size_t terms = 30;
    unsigned digits = 20;
    Format format = Format::text;
};

int cmd_enclose(const EncloseOptions& o, std::ostream& out)
{
    const Rational x = parse_positive(o.x, "--x");
    const EvalPoint p = EvalPoint::unit(x);
    std::optional<Enclosure> e;
    std::string why;
    Rational lo;
    if (o.target == "sum") {
        e = enclose_odd_divisor_sum(p, o.terms);
    } else if (o.target == "product") {
        try {
            e = enclose_distinct_product(p, o.terms);
        } catch (const tail_diverges& ex) {
            why = ex.what();
            lo = 1;
            for (std::size_t n = 1; n <= o.terms; ++n) {
                lo *= Rational(1) + x.pow(n);
            }
        }
    } else {
        throw usage_failure("--target must be sum or product");
    }
    if (e) {
        lo = e->lo;
    }
    if (o.format == Format::json) {
        ordered_json j{{"target", o.target}, {"x", x.str()}, {"terms", o.terms}, {"lo", lo.str()}};
        if (e) {
            j["hi"] = e->hi.str();
            j["width"] = e->width().str();
            j["lo_decimal"] = e->lo.to_decimal(o.digits, Rational::Rounding::down);
            j["hi_decimal"] = e->hi.to_decimal(o.digits, Rational::Rounding::up);
        } else {
            j["hi"] = nullptr;
            j["inconclusive"] = why;
        }
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "lo = " << lo.str() << '\n';
    if (e) {
        out << "hi = " << e->hi.str() << '\n';
        out << "width = " << e->width().str() << '\n';
        out << "decimal: [" << e->lo.to_decimal(o.digits, Rational::Rounding::down) << ", "
            << e->hi.to_decimal(o.digits, Rational::Rounding::up) << "], width < "
            << e->width().to_decimal(o.digits, Rational::Rounding::up) << '\n';
    } else {
        out << "hi = inconclusive (" << why << ")\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------- report

struct ReportOptions {
    std::string x = "1/4";
    std::size_t terms = 30;
    unsigned digits = 12;
    Format format = Format::text;
};

struct ReportLine {
    std::string name;
    std::string computed;
    std::string expected;  // empty: nothing to compare against
    std::string status;    // PASS, FAIL, or "-"
};

int cmd_report(const ReportOptions& o, std::ostream& out)
{
    const Rational x = parse_positive(o.x, "--x");
    const EvalPoint p = EvalPoint::golden(x);
    const bool quarter = x == Rational(1, 4);
    std::vector<ReportLine> lines;
    bool all_pass = true;

    auto constant = [&](std::string name, const Rational& computed, const char* expected) {
        ReportLine l{std::move(name), computed.str(), "", "-"};
        if (quarter) {
            l.expected = expected;
            const bool ok = computed == Rational::parse(expected);
            l.status = ok ? "PASS" : "FAIL";
            all_pass &= ok;
        }
        lines.push_back(std::move(l));
    };
    auto numerator = [&](std::string name, const RationalFunction& f, const Polynomial& expected) {
        const bool ok = f.numerator() == expected;
        all_pass &= ok;
        lines.push_back({std::move(name), f.numerator().str(), expected.str(), ok ? "PASS" : "FAIL"});
    };
    auto check = [&](std::string name, const Rational& lhs, const char* rel, const Rational& rhs, bool ok) {
        all_pass &= ok;
        lines.push_back({std::move(name), lhs.to_decimal(o.digits) + " " + rel + " " + rhs.to_decimal(o.digits), "",
                         ok ? "PASS" : "FAIL"});
    };

    const std::vector<std::uint64_t> three{3};
    const BoundResult b1 = B_k(p, 1);
    const BoundResult b2 = B_k(p, 2);
    const BoundResult b3 = B_k(p, 3);
    const BoundResult c1 = corollary1_lower(p, three);
    const BoundResult c2 = corollary2_upper(p, three);
    const BoundResult r0 = R_k(p, 0);
    const BoundResult r4 = R_k(p, 4);
    const BoundResult r5 = R_k(p, 5);
    const BoundResult r6 = R_k(p, 6);
    const BoundResult t65 = th6_upper(p, 5);
    const BoundResult t66 = th6_upper(p, 6);
    const BoundResult t76 = th7_upper(p, 6);

    constant("B_1", b1.value, "15/11");
    constant("B_2", b2.value, "13/11");
    constant("B_3", b3.value, "141701/126225");
    constant("corollary1 lower constant, P-subset {3}", c1.value, "69983/69615");
    constant("corollary2 upper on L, P-subset {3}", c2.value, "1347596/3828825");
    constant("R_0", r0.value, "15/11");
    constant("R_4", r4.value, "9364/6875");
    constant("R_5", r5.value, "46754/34375");
    constant("R_6", r6.value, "233506/171875");
    constant("th6 k=5 product constant (rhs/2)", t65.product_form->constant, "81239/68750");
    constant("th6 k=5 rhs on 2P-L", t65.value, "81239/34375");
    constant("th6 k=6 rhs on 2P-L", t66.value, "406118/171875");
    constant("th6 k=6 product constant (rhs/2)", t66.product_form->constant, "203059/171875");
    constant("th7 k=6 product constant (rhs/3)", t76.product_form->constant, "88561442/78890625");

    using P = Polynomial;
    const auto r = [](long v) { return Rational(v); };
    numerator("R_4 numerator", R_k_symbolic(4), P{r(1), r(4), r(5), r(0), r(-6), r(-3)});
    numerator("R_5 numerator", R_k_symbolic(5), P{r(1), r(5), r(9), r(5), r(-6), r(-15), r(3), r(6)});
    numerator("R_6 numerator", R_k_symbolic(6), P{r(1), r(6), r(14), r(14), r(-1), r(-21), r(-36), r(33), r(30)});
    numerator("th6 k=5 numerator", bound_rhs_symbolic(SVariant::two_q_minus_q1, 5),
              P{r(2), r(9), r(13), r(0), r(-20), r(-24), r(-10), r(-1)});
    numerator("th6 k=6 numerator", bound_rhs_symbolic(SVariant::two_q_minus_q1, 6),
              P{r(2), r(11), r(22), r(13), r(-20), r(-44), r(-41), r(-4), r(6)});
    numerator("th7 k=6 numerator", bound_rhs_symbolic(SVariant::three_q_variant, 6),
              P{r(3), r(16), r(30), r(12), r(-40), r(-72), r(-55), r(-19), r(-2)});

    const Enclosure sum = enclose_odd_divisor_sum(p, o.terms);
    std::optional<Enclosure> prod;
    try {
        prod = enclose_distinct_product(p, o.terms);
    } catch (const tail_diverges&) {
    }
    Rational partial16;
    {
        const Enclosure s16 = enclose_odd_divisor_sum(p, 16);
        partial16 = c1.value + s16.lo;
        if (quarter) {
            const Rational anchor(BigInt(135553519), BigInt(100000000));
            check("16-term lower bound >= 1.35553519", partial16, ">=", anchor, partial16 >= anchor);
        }
    }
    lines.push_back({"L enclosure (" + std::to_string(o.terms) + " terms)",
                     "[" + sum.lo.to_decimal(o.digits, Rational::Rounding::down) + ", "
                         + sum.hi.to_decimal(o.digits, Rational::Rounding::up) + "]",
                     "", "-"});
    if (!prod) {
        lines.push_back({"P enclosure", "inconclusive: tail bound needs x^(N+1)/(1-x) < 1", "", "FAIL"});
        all_pass = false;
    } else {
        lines.push_back({"P enclosure (" + std::to_string(o.terms) + " terms)",
                         "[" + prod->lo.to_decimal(o.digits, Rational::Rounding::down) + ", "
                             + prod->hi.to_decimal(o.digits, Rational::Rounding::up) + "]",
                         "", "-"});
        const Rational eps(BigInt(1), BigInt("1000000000000000"));
        {
            std::ostringstream w;
            w << std::scientific << std::setprecision(3) << prod->width().to_double() << " < 1e-15";
            const bool ok = prod->width() < eps;
            all_pass &= ok;
            lines.push_back({"P enclosure width < 1e-15", w.str(), "", ok ? "PASS" : "FAIL"});
        }

        auto upper = [&](const std::string& name, const BoundResult& b) {
            const Rational v = certify(*b.product_form, BoundSide::upper, sum);
            check(name + " > P.hi", v, ">", prod->hi, v > prod->hi);
        };
        auto lower = [&](const std::string& name, const Rational& v) {
            check(name + " < P.lo", v, "<", prod->lo, v < prod->lo);
        };
        for (std::uint64_t k = 1; k <= 6; ++k) {
            upper("B_" + std::to_string(k) + " + ((k-1)/k) L", B_k(p, k));
        }
        upper("R_0", r0);
        upper("R_4", r4);
        upper("R_5", r5);
        upper("R_6", r6);
        upper("th6 k=5 product form", t65);
        upper("th6 k=6 product form", t66);
        upper("th7 k=6 product form", t76);
        lower("1 + L", certify(ProductForm{Rational(1), Rational(1)}, BoundSide::lower, sum));
        lower("corollary1 {3} + L", certify(*c1.product_form, BoundSide::lower, sum));
        lower("corollary1 {3} + 16-term partial L", partial16);
        for (std::uint64_t k = 1; k <= 6; ++k) {
            lower("A_" + std::to_string(k) + " + L", certify(*A_k(p, k).product_form, BoundSide::lower, sum));
        }
        check("corollary2 {3} > L.hi", c2.value, ">", sum.hi, c2.value > sum.hi);
    }

    switch (o.format) {
    case Format::text: {
        std::size_t width = 0;
        for (const auto& l : lines) {
            width = std::max(width, l.name.size());
        }
        out << "x = " << x.str() << ", terms = " << o.terms << '\n';
        for (const auto& l : lines) {
            out << std::left << std::setw(6) << l.status << std::setw(static_cast<int>(width) + 2) << l.name
                << l.computed;
            if (!l.expected.empty()) {
                out << "  (expected " << l.expected << ")";
            }
            out << '\n';
        }
        out << (all_pass ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
        break;
    }
    case Format::csv:
        out << "status,name,computed,expected\n";
        for (const auto& l : lines) {
            out << l.status << ',' << csv_escape(l.name) << ',' << csv_escape(l.computed) << ','
                << csv_escape(l.expected) << '\n';
        }
        break;
    case Format::json: {
        ordered_json arr = ordered_json::array();
        for (const auto& l : lines) {
            arr.push_back({{"status", l.status}, {"name", l.name}, {"computed", l.computed}, {"expected", l.expected}});
        }
        out << ordered_json{{"x", x.str()}, {"terms", o.terms}, {"status", all_pass ? "pass" : "fail"}, {"lines", arr}}
                   .dump(2)
            << '\n';
        break;
    }
    }
    return all_pass ? exit_ok : exit_verification_failed;
}

void add_format(CLI::App* app, Format& f, bool with_csv)
{
    std::map<std::string, Format> names = format_names;
    if (!with_csv) {
        names.erase("csv");
    }
    app->add_option("--format", f, "Output format")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case).description(""))
        ->option_text(with_csv ? "text|csv|json" : "text|json");
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact partition-counting identities and generating-function bounds", "oddbounds"};
    app.require_subcommand(1);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run the exhaustive identity and inequality suites");
    verify->add_option("--suite", vo.suite, "Suite name or 'all'");
    verify->add_option("--max-n", vo.max_n, "Cap (or with --exact, set) the n range of each suite");
    verify->add_option("--max-k", vo.max_k, "Cap (or with --exact, set) the k range of each suite");
    verify->add_flag("--exact", vo.exact, "Use --max-n/--max-k as the exact range instead of a cap");
    verify->add_option("--brute-limit", vo.brute_limit, "Largest n for enumeration-based suites");
    verify->add_option("--threads", vo.threads, "Worker threads for Q-table construction")->check(CLI::PositiveNumber);
    add_format(verify, vo.format, true);

    QTableOptions qo;
    auto* qtable = app.add_subcommand("qtable", "Dump q(n), F_n and Q_k(n)");
    qtable->add_option("--max-n", qo.max_n, "Rows n = 1..max-n");
    qtable->add_option("--max-k", qo.max_k, "Columns Q_1..Q_max-k");
    qtable->add_option("--source", qo.source, "brute or closed");
    qtable->add_option("--brute-limit", qo.brute_limit, "Largest n allowed for brute-force rows");
    qtable->add_option("--threads", qo.threads, "Worker threads")->check(CLI::PositiveNumber);
    add_format(qtable, qo.format, true);

    BoundOptions bo;
    auto* bound = app.add_subcommand("bound", "Evaluate one bound family at a rational point");
    bound->add_option("--family", bo.family, "corollary1, corollary2, Ak, Bk, theorem3, Rk, th6, th7")->required();
    bound->add_option("--k", bo.k, "Family index");
    bound->add_option("--x", bo.x, "Evaluation point p/q")->required();
    bound->add_option("--subset", bo.subset, "Comma-separated prime powers for corollary1/2");
    bound->add_option("--subset-bound", bo.subset_bound, "Include every prime power up to this bound");
    bound->add_option("--terms", bo.terms, "Terms used to enclose L when certifying");
    bound->add_option("--digits", bo.digits, "Decimal digits")->check(CLI::PositiveNumber);
    add_format(bound, bo.format, false);

    EncloseOptions eo;
    auto* enclose = app.add_subcommand("enclose", "Certified enclosure of L(x) or P(x)");
    enclose->add_option("--target", eo.target, "sum or product");
    enclose->add_option("--x", eo.x, "Evaluation point p/q")->required();
    enclose->add_option("--terms", eo.terms, "Number of exact terms");
    enclose->add_option("--digits", eo.digits, "Decimal digits")->check(CLI::PositiveNumber);
    add_format(enclose, eo.format, false);

    ReportOptions ro;
    auto* report = app.add_subcommand("report", "Reproduce the bound constants with PASS/FAIL per line");
    report->add_option("--x", ro.x, "Evaluation point p/q");
    report->add_option("--terms", ro.terms, "Enclosure terms");
    report->add_option("--digits", ro.digits, "Decimal digits")->check(CLI::PositiveNumber);
    add_format(report, ro.format, true);

    std::vector<std::string> argv_storage;
    argv_storage.emplace_back("oddbounds");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*verify) {
            return cmd_verify(vo, out);
        }
        if (*qtable) {
            return cmd_qtable(qo, out);
        }
        if (*bound) {
            return cmd_bound(bo, out);
        }
        if (*enclose) {
            return cmd_enclose(eo, out);
        }
        if (*report) {
            return cmd_report(ro, out);
        }
    } catch (const usage_failure& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

std::vector<ParsedQRow> parse_qtable_csv(std::istream& in)
{
    std::vector<ParsedQRow> rows;
    std::string line;
    if (!std::getline(in, line) || line.rfind("n,q,F", 0) != 0) {
        throw parse_error("qtable CSV must start with the header n,q,F,...");
    }
    const auto columns = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) {
            cells.push_back(c);
        }
        if (!line.empty() && line.back() == ',') {
            cells.emplace_back();
        }
        if (cells.size() != columns) {
            throw parse_error("qtable CSV row has " + std::to_string(cells.size()) + " cells, expected "
                              + std::to_string(columns) + ": " + line);
        }
        ParsedQRow r;
        try {
            r.n = std::stoull(cells[0]);
            r.q = BigInt(cells[1]);
            r.fib = BigInt(cells[2]);
            for (std::size_t i = 3; i < cells.size(); ++i) {
                r.q_values.push_back(cells[i].empty() ? -1 : std::stoll(cells[i]));
            }
        } catch (const std::exception& e) {
            throw parse_error("qtable CSV: bad row '" + line + "': " + e.what());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace oddbounds::cli
