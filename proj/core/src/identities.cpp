#include "oddbounds/identities.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oddbounds/polynomial.hpp"
#include "oddbounds/series.hpp"

namespace oddbounds {

FibCache::FibCache(std::size_t max_n)
{
    values_.resize(std::max<std::size_t>(max_n, 1) + 1);
    values_[0] = 0;
    values_[1] = 1;
    for (std::size_t n = 2; n < values_.size(); ++n) {
        values_[n] = values_[n - 1] + values_[n - 2];
    }
}

const BigInt& FibCache::operator()(long long n) const
{
    if (n < 0 || static_cast<std::size_t>(n) >= values_.size()) {
        throw std::out_of_range("F_" + std::to_string(n) + " outside cached range [0, " + std::to_string(max_n()) + "]");
    }
    return values_[static_cast<std::size_t>(n)];
}

std::string_view to_string(SVariant v)
{
    switch (v) {
    case SVariant::q_only:
        return "q-only";
    case SVariant::two_q_minus_q1:
        return "two-q-minus-Q1";
    case SVariant::three_q_variant:
        return "three-q-variant";
    }
    return "?";
}

WeightTables::WeightTables(std::size_t max_n) : q_(max_n), fib_(max_n), q1_(max_n + 1), q2_(max_n + 1)
{
    for (std::size_t n = 1; n <= max_n; ++n) {
        q1_[n] = q1_closed(n);
        q2_[n] = q2_closed(n);
    }
}

BigInt WeightTables::q1(long long n) const
{
    return n <= 0 ? BigInt(0) : BigInt(static_cast<unsigned long>(q1_.at(static_cast<std::size_t>(n))));
}

BigInt WeightTables::q2(long long n) const
{
    return n <= 0 ? BigInt(0) : BigInt(static_cast<unsigned long>(q2_.at(static_cast<std::size_t>(n))));
}

BigInt WeightTables::weight(SVariant v, long long m) const
{
    switch (v) {
    case SVariant::q_only:
        return q_(m);
    case SVariant::two_q_minus_q1:
        return 2 * q_(m) - q1(m);
    case SVariant::three_q_variant:
        return 3 * q_(m) - 2 * q1(m) - q2(m);
    }
    return 0;
}

BigInt compute_S(SVariant v, std::uint64_t k, std::uint64_t n, const WeightTables& tables)
{
    BigInt sum = 0;
    for (std::uint64_t j = 0; j <= k; ++j) {
        const long long m = static_cast<long long>(n) - static_cast<long long>(k + j);
        if (m < 0) {
            break;
        }
        sum += binomial(k, j) * tables.weight(v, m);
    }
    return sum;
}

std::vector<BigInt> S_row(SVariant v, std::uint64_t k, std::size_t length, const WeightTables& tables)
{
    std::vector<BigInt> out;
    out.reserve(length);
    for (std::size_t n = 0; n < length; ++n) {
        out.push_back(compute_S(v, k, n, tables));
    }
    return out;
}

namespace {

std::string grid(std::string_view k_part, std::string_view n_part)
{
    if (k_part.empty()) {
        return std::string(n_part);
    }
    return std::string(k_part) + ", " + std::string(n_part);
}

void fail(VerificationReport& r, std::uint64_t n, std::uint64_t k, const BigInt& lhs, const BigInt& rhs)
{
    r.counterexample = Counterexample{n, k, lhs.get_str(), rhs.get_str()};
}

} // namespace

VerificationReport check_proposition(std::uint64_t max_k, std::uint64_t max_n)
{
    VerificationReport r{"proposition",
                         grid("0<=k<=" + std::to_string(max_k), "2k<n<=" + std::to_string(max_n)), 0, {}};
    const WeightTables t(max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        for (std::uint64_t k = 0; k <= max_k && 2 * k < n; ++k) {
            const BigInt s = compute_S(SVariant::q_only, k, n, t);
            ++r.cases_checked;
            if (s > t.fib()(static_cast<long long>(n))) {
                fail(r, n, k, s, t.fib()(static_cast<long long>(n)));
                return r;
            }
        }
    }
    return r;
}

VerificationReport check_lemma_S(std::uint64_t max_k, std::uint64_t max_n)
{
    VerificationReport r{"lemma-S", grid("0<=k<=" + std::to_string(max_k), "0<=n, n+2<=" + std::to_string(max_n)),
                         0, {}};
    const WeightTables t(max_n);
    for (std::uint64_t n = 0; n + 2 <= max_n; ++n) {
        for (std::uint64_t k = 0; k <= max_k; ++k) {
            const BigInt lhs = compute_S(SVariant::q_only, k + 1, n + 2, t);
            const BigInt rhs = compute_S(SVariant::q_only, k, n + 1, t) + compute_S(SVariant::q_only, k, n, t);
            ++r.cases_checked;
            if (lhs != rhs) {
                fail(r, n, k, lhs, rhs);
                return r;
            }
        }
    }
    return r;
}

VerificationReport check_fib_binomial(std::uint64_t max_k, std::uint64_t max_n)
{
    VerificationReport r{"fib-binomial", grid("0<=k<=" + std::to_string(max_k), "2k<=n<=" + std::to_string(max_n)),
                         0, {}};
    const FibCache f(max_n);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        for (std::uint64_t k = 0; k <= max_k && 2 * k <= n; ++k) {
            BigInt lhs = 0;
            for (std::uint64_t j = 0; j <= k; ++j) {
                lhs += binomial(k, j) * f(static_cast<long long>(n - k - j));
            }
            ++r.cases_checked;
            if (lhs != f(static_cast<long long>(n))) {
                fail(r, n, k, lhs, f(static_cast<long long>(n)));
                return r;
            }
        }
    }
    return r;
}

VerificationReport check_theorem3(std::uint64_t max_k, std::span<const QRow> rows)
{
    const std::uint64_t max_n = rows.size();
    VerificationReport r{"theorem3", grid("1<=k<=" + std::to_string(max_k), "1<=n<=" + std::to_string(max_n)), 0,
                         {}};
    const WeightTables t(max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const QRow& row = rows[n - 1];
        if (row.n != n) {
            throw std::invalid_argument("check_theorem3: rows[" + std::to_string(n - 1) + "] describes n = "
                                        + std::to_string(row.n));
        }
        for (std::uint64_t k = 1; k <= max_k; ++k) {
            const BigInt lhs = BigInt(static_cast<unsigned long>(k)) * t.q()(static_cast<long long>(n));
            BigInt rhs = t.fib()(static_cast<long long>(n));
            for (std::uint64_t j = 1; j < k; ++j) {
                rhs += BigInt(static_cast<unsigned long>((k - j) * row.at(j)));
            }
            ++r.cases_checked;
            if (lhs > rhs) {
                fail(r, n, k, lhs, rhs);
                return r;
            }
        }
    }
    return r;
}

VerificationReport check_theorem3(std::uint64_t max_k, std::uint64_t max_n)
{
    const auto rows = build_qtable(max_n);
    return check_theorem3(max_k, rows);
}

VerificationReport check_theorem4(std::uint64_t max_n)
{
    VerificationReport r{"theorem4", "0<n<=" + std::to_string(max_n), 0, {}};
    const PartitionCounts q(max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const auto m = static_cast<long long>(n);
        const BigInt lhs = q(m) - q(m - 1) - q(m - 2);
        ++r.cases_checked;
        if (lhs > 0) {
            fail(r, n, 0, lhs, BigInt(0));
            return r;
        }
    }
    return r;
}

VerificationReport check_theorem4_series(std::uint64_t max_n)
{
    VerificationReport r{"theorem4-series", "0<n<=" + std::to_string(max_n), 0, {}};
    const TruncatedSeries odd = pochhammer_odd(max_n);
    const TruncatedSeries inv = odd.reciprocal();
    // The reciprocal must reproduce prod (1 + x^j) coefficient by coefficient.
    const TruncatedSeries distinct = pochhammer_neg(max_n);
    const TruncatedSeries scaled = TruncatedSeries::from_polynomial(fibonacci_denominator(), max_n) * inv;
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        ++r.cases_checked;
        if (inv[n] != distinct[n] || !inv[n].is_integer()) {
            fail(r, n, 0, inv[n].numerator(), distinct[n].numerator());
            return r;
        }
        if (n > 0 && scaled[n].sign() > 0) {
            fail(r, n, 0, scaled[n].numerator(), BigInt(0));
            return r;
        }
    }
    return r;
}

VerificationReport check_theorem4_injections(std::uint64_t max_n)
{
    VerificationReport r{"theorem4-injections", "2<n<=" + std::to_string(max_n), 0, {}};
    for (std::uint64_t n = 3; n <= max_n; ++n) {
        std::set<OddPartition> drop_one;
        std::set<OddPartition> shrink_smallest;
        bool bad = false;
        for_each_odd_partition(n, [&](const OddPartition& p) {
            OddPartition image = p;
            if (p.multiplicities[0] > 0) {
                --image.multiplicities[0];
                bad |= image.weight() != n - 1 || !drop_one.insert(image).second;
            } else {
                std::size_t i = 1;
                while (p.multiplicities[i] == 0) {
                    ++i;
                }
                --image.multiplicities[i];
                ++image.multiplicities[i - 1];
                while (!image.multiplicities.empty() && image.multiplicities.back() == 0) {
                    image.multiplicities.pop_back();
                }
                bad |= image.weight() != n - 2 || !shrink_smallest.insert(image).second;
            }
        });
        ++r.cases_checked;
        const std::uint64_t total = drop_one.size() + shrink_smallest.size();
        if (bad) {
            fail(r, n, 0, BigInt(static_cast<unsigned long>(total)), BigInt(0));
            return r;
        }
        // Images of distinct partitions are distinct, so
        // q(n) = |image_1| + |image_2| <= q(n-1) + q(n-2).
        const std::uint64_t bound = enumerate_odd_partitions(n - 1).size() + enumerate_odd_partitions(n - 2).size();
        if (total > bound) {
            fail(r, n, 0, BigInt(static_cast<unsigned long>(total)), BigInt(static_cast<unsigned long>(bound)));
            return r;
        }
    }
    return r;
}

VerificationReport check_q_le_fib(std::uint64_t max_n)
{
    VerificationReport r{"q-le-fib", "1<=n<=" + std::to_string(max_n), 0, {}};
    const WeightTables t(max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const auto m = static_cast<long long>(n);
        ++r.cases_checked;
        if (t.q()(m) > t.fib()(m)) {
            fail(r, n, 0, t.q()(m), t.fib()(m));
            return r;
        }
    }
    return r;
}

VerificationReport check_q_sums(std::span<const QRow> rows)
{
    VerificationReport r{"q-sums", "1<=n<=" + std::to_string(rows.size()), 0, {}};
    const WeightTables t(rows.size());
    for (const QRow& row : rows) {
        const auto m = static_cast<long long>(row.n);
        ++r.cases_checked;
        if (row.total() != t.q()(m)) {
            fail(r, row.n, 0, row.total(), t.q()(m));
            return r;
        }
        if (row.weighted_total() != t.fib()(m)) {
            fail(r, row.n, 1, row.weighted_total(), t.fib()(m));
            return r;
        }
    }
    return r;
}

VerificationReport check_closed_forms(std::span<const QRow> rows, std::uint64_t max_pr)
{
    VerificationReport r{"closed-forms",
                         grid("k in {1,2} and prime powers <=" + std::to_string(max_pr),
                              "1<=n<=" + std::to_string(rows.size())),
                         0,
                         {}};
    const auto pr = prime_powers_up_to(max_pr).elements;
    for (const QRow& row : rows) {
        const std::uint64_t n = row.n;
        auto check = [&](std::uint64_t k, std::uint64_t closed) {
            ++r.cases_checked;
            if (row.at(k) != closed) {
                fail(r, n, k, BigInt(static_cast<unsigned long>(row.at(k))),
                     BigInt(static_cast<unsigned long>(closed)));
                return false;
            }
            return true;
        };
        if (!check(1, q1_closed(n)) || !check(1, divisor_info(n).odd_divisor_count) || !check(2, q2_closed(n))) {
            return r;
        }
        for (auto k : pr) {
            if (!check(k, q_pr_closed(k, n))) {
                return r;
            }
        }
    }
    return r;
}

VerificationReport check_theorem2(std::uint64_t max_pr, std::uint64_t max_n)
{
    VerificationReport r{"theorem2",
                         grid("prime powers 3<=p^r<=" + std::to_string(max_pr), "0<=n<=" + std::to_string(max_n)), 0,
                         {}};
    for (auto k : prime_powers_up_to(max_pr).elements) {
        const TruncatedSeries s = theorem2_gf(k, max_n);
        for (std::uint64_t n = 0; n <= max_n; ++n) {
            ++r.cases_checked;
            const Rational closed(q_pr_closed(k, n));
            if (s[n] != closed) {
                fail(r, n, k, s[n].numerator(), closed.numerator());
                return r;
            }
        }
    }
    return r;
}

VerificationReport check_fib_multinomial(std::uint64_t max_n)
{
    VerificationReport r{"fib-multinomial", "1<=n<=" + std::to_string(max_n), 0, {}};
    const FibCache f(max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        BigInt sum = 0;
        for_each_odd_partition(n, [&](const OddPartition& p) { sum += multinomial(p); });
        ++r.cases_checked;
        if (sum != f(static_cast<long long>(n))) {
            fail(r, n, 0, sum, f(static_cast<long long>(n)));
            return r;
        }
    }
    return r;
}

VerificationReport check_fine(std::uint64_t max_n)
{
    VerificationReport r{"fine", "1<=k<=n<=" + std::to_string(max_n), 0, {}};
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            ++r.cases_checked;
            const BigInt sum = fine_multinomial_sum(n, k);
            const BigInt expect = binomial(n - 1, k - 1);
            if (sum != expect) {
                fail(r, n, k, sum, expect);
                return r;
            }
        }
    }
    return r;
}

VerificationReport check_S_generating_function(std::uint64_t max_k, std::uint64_t max_n)
{
    VerificationReport r{"S-generating-function",
                         grid("0<=k<=" + std::to_string(max_k), "0<=n<=" + std::to_string(max_n)), 0, {}};
    const WeightTables t(max_n);
    const TruncatedSeries distinct = pochhammer_neg(max_n);
    const Polynomial one_plus_x{Rational(1), Rational(1)};
    for (std::uint64_t k = 0; k <= max_k; ++k) {
        const TruncatedSeries gf =
            (TruncatedSeries::from_polynomial(one_plus_x.pow(static_cast<unsigned>(k)), max_n) * distinct).shifted(k);
        for (std::uint64_t n = 0; n <= max_n; ++n) {
            ++r.cases_checked;
            const BigInt s = compute_S(SVariant::q_only, k, n, t);
            if (gf[n] != Rational(s)) {
                fail(r, n, k, gf[n].numerator(), s);
                return r;
            }
        }
    }
    return r;
}

VerificationReport check_decreasing_reduction(std::uint64_t max_k)
{
    VerificationReport r{"decreasing-reduction", "0<=k<=" + std::to_string(max_k), 0, {}};
    const WeightTables t(2 * max_k + 4);
    const auto& f = t.fib();
    auto deficit = [&](std::uint64_t k) {
        std::vector<Rational> c(2 * k + 1);
        for (std::uint64_t n = 0; n <= 2 * k; ++n) {
            c[n] = Rational(f(static_cast<long long>(n)) - compute_S(SVariant::q_only, k, n, t));
        }
        return Polynomial(std::move(c));
    };
    const Polynomial x{Rational(0), Rational(1)};
    const Polynomial x_one_plus_x{Rational(0), Rational(1), Rational(1)};
    for (std::uint64_t k = 0; k <= max_k; ++k) {
        const Polynomial lk = x + x_one_plus_x * deficit(k) - deficit(k + 1);
        const BigInt c = compute_S(SVariant::q_only, k, 2 * k + 1, t) - f(static_cast<long long>(2 * k + 1));
        const Polynomial expect = Polynomial::monomial(Rational(c), 2 * k + 2);
        ++r.cases_checked;
        if (lk != expect) {
            fail(r, 2 * k + 2, k, lk[2 * k + 2].numerator(), c);
            return r;
        }
        const BigInt s0_next = compute_S(SVariant::q_only, k + 1, 0, t);
        const BigInt s0 = compute_S(SVariant::q_only, k, 0, t);
        const BigInt s1_next = compute_S(SVariant::q_only, k + 1, 1, t);
        if (s0_next != 0 || s0 != s1_next) {
            fail(r, 0, k, s0, s1_next);
            return r;
        }
    }
    return r;
}

} // namespace oddbounds
