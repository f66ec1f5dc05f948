// Acceptance gate. One PASS/FAIL line per criterion; nonzero exit on any FAIL.
// Exact comparisons have zero tolerance. The only pinned tolerances are the
// enclosure width and the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "oddbounds/bounds.hpp"
#include "oddbounds/identities.hpp"

using namespace oddbounds;

namespace {

constexpr double limit_constants_s = 5.0;
constexpr double limit_anchor_s = 1.0;
constexpr double limit_sandwich_s = 1.0;
constexpr double limit_histograms_s = 60.0;
constexpr double limit_closed_forms_s = 10.0;
constexpr double limit_fib_multinomial_s = 30.0;
constexpr double limit_fine_s = 30.0;
constexpr double limit_inequalities_s = 30.0;
constexpr double limit_monotone_s = 5.0;

Rational R(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

int failures = 0;

// Runs body, which appends failure notes; prints one line.
void criterion(const std::string& id, const std::string& what, double limit_s,
               const std::function<void(std::vector<std::string>&)>& body)
{
    std::vector<std::string> notes;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(notes);
    } catch (const std::exception& e) {
        notes.push_back(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= limit_s) {
        notes.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
    }
    const bool ok = notes.empty();
    failures += ok ? 0 : 1;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s / %.0f s", secs, limit_s);
    std::cout << (ok ? "PASS " : "FAIL ") << id << "  " << what << "  (" << buf << ")\n";
    for (const auto& n : notes) {
        std::cout << "       " << n << "\n";
    }
}

void expect_eq(std::vector<std::string>& notes, const std::string& label, const Rational& got, const Rational& want)
{
    if (got != want) {
        notes.push_back(label + ": got " + got.str() + ", expected " + want.str());
    }
}

void expect_coeffs(std::vector<std::string>& notes, const std::string& label, const Polynomial& p,
                   const std::vector<long>& want)
{
    std::vector<Rational> w;
    for (long c : want) {
        w.emplace_back(c);
    }
    if (p != Polynomial(std::move(w))) {
        notes.push_back(label + ": got " + p.str());
    }
}

void expect_pass(std::vector<std::string>& notes, const VerificationReport& r)
{
    if (!r.passed()) {
        const auto& c = *r.counterexample;
        notes.push_back(r.suite + " failed at n=" + std::to_string(c.n) + ", k=" + std::to_string(c.k) + ": " + c.lhs
                        + " vs " + c.rhs);
    } else if (r.cases_checked == 0) {
        notes.push_back(r.suite + " checked nothing");
    }
}

int run_cli(std::vector<std::string> args, std::string& out)
{
    std::ostringstream o;
    std::ostringstream e;
    const int code = cli::run(args, o, e);
    out = o.str() + e.str();
    return code;
}

} // namespace

int main()
{
    const EvalPoint quarter = EvalPoint::golden(R(1, 4));
    const std::vector<std::uint64_t> three{3};

    criterion("1", "exact constants at x = 1/4", limit_constants_s, [&](auto& notes) {
        expect_eq(notes, "B_1", B_k(quarter, 1).value, R(15, 11));
        expect_eq(notes, "B_2", B_k(quarter, 2).value, R(13, 11));
        expect_eq(notes, "B_3", B_k(quarter, 3).value, R(141701, 126225));
        expect_eq(notes, "corollary1 {3}", corollary1_lower(quarter, three).value, R(69983, 69615));
        expect_eq(notes, "corollary2 {3}", corollary2_upper(quarter, three).value, R(1347596, 3828825));
        expect_eq(notes, "R_4", R_k(quarter, 4).value, R(9364, 6875));
        expect_eq(notes, "R_5", R_k(quarter, 5).value, R(46754, 34375));
        expect_eq(notes, "R_6", R_k(quarter, 6).value, R(233506, 171875));
        // th6 is stated as a bound on 2P - L. The k=5 figure is the constant
        // after halving; the k=6 figure is the right-hand side itself.
        const auto t5 = th6_upper(quarter, 5);
        const auto t6 = th6_upper(quarter, 6);
        expect_eq(notes, "th6 k=5 constant", t5.product_form.value().constant, R(81239, 68750));
        expect_eq(notes, "th6 k=6 rhs", t6.value, R(406118, 171875));
        expect_eq(notes, "th7 k=6 constant", th7_upper(quarter, 6).product_form.value().constant,
                  R(88561442, 78890625));
        expect_coeffs(notes, "R_4 numerator", R_k_symbolic(4).numerator(), {1, 4, 5, 0, -6, -3});
        expect_coeffs(notes, "R_5 numerator", R_k_symbolic(5).numerator(), {1, 5, 9, 5, -6, -15, 3, 6});
        expect_coeffs(notes, "R_6 numerator", R_k_symbolic(6).numerator(), {1, 6, 14, 14, -1, -21, -36, 33, 30});
    });

    criterion("2", "16-term lower bound >= 1.35553519", limit_anchor_s, [&](auto& notes) {
        Rational sum;
        for (unsigned long n = 1; n <= 16; ++n) {
            const Rational four_n = R(4).pow(n);
            sum += four_n / (four_n * four_n - R(1));
        }
        const Rational bound = R(69983, 69615) + sum;
        const Rational anchor(BigInt(135553519), BigInt(100000000));
        if (bound < anchor) {
            notes.push_back("bound " + bound.to_decimal(12) + " < 1.35553519");
        }
        // Same quantity through the enclosure code.
        const Rational via_lib =
            corollary1_lower(quarter, three).value + enclose_odd_divisor_sum(quarter, 16).lo;
        expect_eq(notes, "library 16-term bound", via_lib, bound);
    });

    criterion("3", "bounds straddle the 30-term product enclosure, width < 1e-15", limit_sandwich_s,
              [&](auto& notes) {
                  const auto prod = enclose_distinct_product(quarter, 30);
                  const auto sum = enclose_odd_divisor_sum(quarter, 30);
                  const Rational max_width(BigInt(1), BigInt("1000000000000000"));
                  if (!(prod.width() < max_width)) {
                      notes.push_back("product width " + prod.width().to_decimal(20));
                  }
                  std::vector<BoundResult> uppers{B_k(quarter, 1),      B_k(quarter, 2),      B_k(quarter, 3),
                                                  R_k(quarter, 4),      R_k(quarter, 5),      R_k(quarter, 6),
                                                  th6_upper(quarter, 5), th6_upper(quarter, 6), th7_upper(quarter, 6)};
                  for (const auto& b : uppers) {
                      if (!(certify(b.product_form.value(), BoundSide::upper, sum) > prod.hi)) {
                          notes.push_back(b.family + " k=" + std::to_string(b.k) + " does not exceed P.hi");
                      }
                  }
                  std::vector<BoundResult> lowers{corollary1_lower(quarter, three)};
                  for (std::uint64_t k = 1; k <= 6; ++k) {
                      lowers.push_back(A_k(quarter, k));
                  }
                  for (const auto& b : lowers) {
                      if (!(certify(b.product_form.value(), BoundSide::lower, sum) < prod.lo)) {
                          notes.push_back(b.family + " k=" + std::to_string(b.k) + " is not below P.lo");
                      }
                  }
                  if (!(corollary2_upper(quarter, three).value > sum.hi)) {
                      notes.push_back("corollary2 does not exceed L.hi");
                  }
                  for (std::uint64_t k = 1; k <= 6; ++k) {
                      if (sandwich(quarter, k, 30).status != SandwichStatus::straddles) {
                          notes.push_back("sandwich k=" + std::to_string(k) + " does not straddle");
                      }
                  }
              });

    std::vector<QRow> rows;
    criterion("4a", "Q_k histograms sum to q(n) and F_n, n <= 100", limit_histograms_s, [&](auto& notes) {
        rows = build_qtable(100);
        expect_pass(notes, check_q_sums(rows));
    });
    criterion("4b", "closed forms vs brute force (p^r <= 32, n <= 100); generating functions to n = 500",
              limit_closed_forms_s, [&](auto& notes) {
                  expect_pass(notes, check_closed_forms(rows, 32));
                  expect_pass(notes, check_theorem2(32, 500));
              });
    criterion("4c", "multinomial sum over odd partitions equals F_n, n <= 60", limit_fib_multinomial_s,
              [&](auto& notes) { expect_pass(notes, check_fib_multinomial(60)); });
    criterion("4d", "Fine's identity, 1 <= k <= n <= 40", limit_fine_s,
              [&](auto& notes) { expect_pass(notes, check_fine(40)); });
    criterion("4e", "inequalities and recurrences on their grids", limit_inequalities_s, [&](auto& notes) {
        expect_pass(notes, check_theorem3(8, rows));
        expect_pass(notes, check_theorem4(1000));
        expect_pass(notes, check_theorem4_series(1000));
        expect_pass(notes, check_proposition(10, 1000));
        expect_pass(notes, check_lemma_S(20, 200));
        expect_pass(notes, check_fib_binomial(10, 500));
    });
    criterion("4f", "`verify` exits 0 on the default grids", limit_histograms_s, [&](auto& notes) {
        std::string out;
        const int code = run_cli({"verify"}, out);
        if (code != 0) {
            notes.push_back("exit " + std::to_string(code) + "\n" + out);
        }
    });

    criterion("5", "R_0..R_3 coincide; R_k, A_k, B_k monotone at sample points", limit_monotone_s,
              [&](auto& notes) {
                  const auto r0 = R_k_symbolic(0).normalized();
                  for (std::uint64_t k = 1; k <= 3; ++k) {
                      const auto rk = R_k_symbolic(k).normalized();
                      if (rk.numerator() != r0.numerator() || rk.denominator() != r0.denominator()) {
                          notes.push_back("R_" + std::to_string(k) + " differs from R_0: " + rk.str());
                      }
                  }
                  for (const auto& x : {R(1, 10), R(1, 4), R(2, 5), R(3, 5)}) {
                      const auto p = EvalPoint::golden(x);
                      for (std::uint64_t k = 0; k < 15; ++k) {
                          if (R_k(p, k + 1).value > R_k(p, k).value) {
                              notes.push_back("R_" + std::to_string(k + 1) + " > R_" + std::to_string(k) + " at " + x.str());
                          }
                      }
                      for (std::uint64_t k = 1; k <= 5; ++k) {
                          if (!(B_k(p, k + 1).value < B_k(p, k).value)) {
                              notes.push_back("B not decreasing at k=" + std::to_string(k) + ", x=" + x.str());
                          }
                      }
                  }
                  for (const auto& x : {R(1, 10), R(1, 4), R(1, 2), R(9, 10)}) {
                      const auto p = EvalPoint::unit(x);
                      for (std::uint64_t k = 1; k < 20; ++k) {
                          // every added generating function is positive at x > 0
                          if (!(A_k(p, k + 1).value > A_k(p, k).value)) {
                              notes.push_back("A not increasing at k=" + std::to_string(k) + ", x=" + x.str());
                          }
                      }
                  }
                  std::string out;
                  if (run_cli({"report", "--x", "1/4"}, out) != 0) {
                      notes.push_back("report exited nonzero:\n" + out);
                  }
              });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}
