#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oddbounds/partitions.hpp"
#include "oddbounds/rational.hpp"

namespace oddbounds {

/// F_0 .. F_max with F_0 = 0, F_1 = 1.
class FibCache {
public:
    explicit FibCache(std::size_t max_n);

    [[nodiscard]] std::size_t max_n() const { return values_.size() - 1; }
    /// Throws std::out_of_range outside [0, max_n].
    [[nodiscard]] const BigInt& operator()(long long n) const;

private:
    std::vector<BigInt> values_;
};

[[nodiscard]] inline FibCache fib(std::size_t max_n) { return FibCache(max_n); }

/// Weight sequence w(m) inside S_{n,k} = sum_j C(k,j) w(n-k-j).
enum class SVariant {
    q_only,           // w = q
    two_q_minus_q1,   // w = 2q - Q_1
    three_q_variant,  // w = 3q - 2Q_1 - Q_2
};

[[nodiscard]] std::string_view to_string(SVariant v);

/// Exact tables of q, Q_1, Q_2 and F up to max_n shared by the S sums
/// and the suites. Q_1(m) = Q_2(m) = 0 for m <= 0 and q(m) = 0 for m < 0.
class WeightTables {
public:
    explicit WeightTables(std::size_t max_n);

    [[nodiscard]] std::size_t max_n() const { return fib_.max_n(); }
    [[nodiscard]] const PartitionCounts& q() const { return q_; }
    [[nodiscard]] const FibCache& fib() const { return fib_; }
    [[nodiscard]] BigInt q1(long long n) const;
    [[nodiscard]] BigInt q2(long long n) const;
    [[nodiscard]] BigInt weight(SVariant v, long long m) const;

private:
    PartitionCounts q_;
    FibCache fib_;
    std::vector<std::uint64_t> q1_;
    std::vector<std::uint64_t> q2_;
};

/// S_{n,k} for the variant; n >= 0, k >= 0, and n <= tables.max_n().
[[nodiscard]] BigInt compute_S(SVariant v, std::uint64_t k, std::uint64_t n, const WeightTables& tables);

/// S_{0..length-1, k} as a vector; convenient for polynomial assembly.
[[nodiscard]] std::vector<BigInt> S_row(SVariant v, std::uint64_t k, std::size_t length, const WeightTables& tables);

struct Counterexample {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string suite;
    /// Human-readable grid, e.g. "0<=k<=10, 2k<n<=500".
    std::string range;
    std::uint64_t cases_checked = 0;
    /// First failure in canonical scan order (n ascending, then k).
    std::optional<Counterexample> counterexample;

    [[nodiscard]] bool passed() const { return !counterexample.has_value(); }
};

// Exhaustive finite checks. Each scans its grid in canonical order and
// stops at the first counterexample.

/// S_{n,k} <= F_n for 0 <= k <= max_k, 2k < n <= max_n.
[[nodiscard]] VerificationReport check_proposition(std::uint64_t max_k, std::uint64_t max_n);
/// S_{n+2,k+1} = S_{n+1,k} + S_{n,k} (q-only) for k <= max_k, n + 2 <= max_n.
[[nodiscard]] VerificationReport check_lemma_S(std::uint64_t max_k, std::uint64_t max_n);
/// sum_j C(k,j) F_{n-k-j} = F_n for k <= max_k, 2k <= n <= max_n.
[[nodiscard]] VerificationReport check_fib_binomial(std::uint64_t max_k, std::uint64_t max_n);
/// k q(n) <= F_n + sum_{j<k} (k-j) Q_j(n) for 1 <= k <= max_k, 1 <= n <= max_n,
/// with Q_j from brute-force rows (rows[n-1] must describe n).
[[nodiscard]] VerificationReport check_theorem3(std::uint64_t max_k, std::span<const QRow> rows);
[[nodiscard]] VerificationReport check_theorem3(std::uint64_t max_k, std::uint64_t max_n);

/// q(n) - q(n-1) - q(n-2) <= 0 for 0 < n <= max_n.
[[nodiscard]] VerificationReport check_theorem4(std::uint64_t max_n);
/// Coefficients 1..max_n of (1 - x - x^2) / (x; x^2)_inf are <= 0, with the
/// reciprocal taken as a series and compared against prod (1 + x^j).
[[nodiscard]] VerificationReport check_theorem4_series(std::uint64_t max_n);
/// The two injections behind the combinatorial argument: drop a part 1
/// (partitions of n containing 1 -> partitions of n-1), and subtract 2
/// from the smallest part (smallest part >= 3 -> partitions of n-2). Both
/// images are checked to be distinct valid partitions.
[[nodiscard]] VerificationReport check_theorem4_injections(std::uint64_t max_n);
/// q(n) <= F_n for 1 <= n <= max_n.
[[nodiscard]] VerificationReport check_q_le_fib(std::uint64_t max_n);

/// sum_k Q_k(n) = q(n) and sum_k k Q_k(n) = F_n on brute-force rows.
[[nodiscard]] VerificationReport check_q_sums(std::span<const QRow> rows);
/// Brute-force Q_1, Q_2 and Q_{p^r} (p^r <= max_pr) agree with the closed
/// forms on every row; Q_1 also against direct divisor counting.
[[nodiscard]] VerificationReport check_closed_forms(std::span<const QRow> rows, std::uint64_t max_pr);
/// Coefficients of the prime-power generating functions equal the
/// closed forms for every prime power p^r <= max_pr and n <= max_n.
[[nodiscard]] VerificationReport check_theorem2(std::uint64_t max_pr, std::uint64_t max_n);
/// Sum of multinomials over odd partitions of n equals F_n, n <= max_n.
[[nodiscard]] VerificationReport check_fib_multinomial(std::uint64_t max_n);
/// Binomial/multinomial identity over partitions with k parts, 1 <= k <= n <= max_n.
[[nodiscard]] VerificationReport check_fine(std::uint64_t max_n);
/// Coefficient n of x^k (1+x)^k prod(1+x^j) equals S_{n,k} (q-only), for
/// k <= max_k, n <= max_n.
[[nodiscard]] VerificationReport check_S_generating_function(std::uint64_t max_k, std::uint64_t max_n);
/// The polynomial reduction behind R_{k+1} <= R_k:
///   x + x(1+x) sum_{n<=2k}(F_n - S_{n,k}) x^n - sum_{n<=2k+2}(F_n - S_{n,k+1}) x^n
///     = (S_{2k+1,k} - F_{2k+1}) x^{2k+2},
/// as a polynomial identity, plus S_{0,k+1} = 0 and S_{0,k} = S_{1,k+1}.
[[nodiscard]] VerificationReport check_decreasing_reduction(std::uint64_t max_k);

} // namespace oddbounds
