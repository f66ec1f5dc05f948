#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddbounds/polynomial.hpp"
#include "oddbounds/rational.hpp"

namespace oddbounds {

/// Formal power series known exactly up to x^order. Coefficients past the
/// order are unknown, never zero by assumption, so every binary operation
/// truncates to the smaller order of its operands.
class TruncatedSeries {
public:
    /// The zero series at the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    /// Order is coeffs.size() - 1; an empty vector is rejected.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    Rational& operator[](std::size_t n) { return coeffs_.at(n); }

    [[nodiscard]] TruncatedSeries truncated(std::size_t order) const;
    /// Multiply by x^k; the order is kept, the top k coefficients fall off.
    [[nodiscard]] TruncatedSeries shifted(std::size_t k) const;
    /// Multiplicative inverse; throws zero_constant_denominator when c_0 = 0.
    [[nodiscard]] TruncatedSeries reciprocal() const;
    /// Value of the truncation (a polynomial) at x.
    [[nodiscard]] Rational evaluate(const Rational& x) const;
    /// True when every coefficient has denominator 1.
    [[nodiscard]] bool is_integral() const;

    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

[[nodiscard]] inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
[[nodiscard]] inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

/// numerator / denominator with a nonzero constant term in the denominator,
/// so the function has a power-series expansion at 0.
class RationalFunction {
public:
    RationalFunction() : den_{Rational(1)} {}
    /// Throws zero_constant_denominator if den(0) = 0.
    RationalFunction(Polynomial num, Polynomial den);
    /// A polynomial viewed as a rational function.
    RationalFunction(Polynomial num); // NOLINT(google-explicit-constructor)

    [[nodiscard]] const Polynomial& numerator() const { return num_; }
    [[nodiscard]] const Polynomial& denominator() const { return den_; }

    /// Throws denominator_vanishes if the denominator is zero at x.
    [[nodiscard]] Rational evaluate(const Rational& x) const;

    /// Cancels the polynomial gcd and scales so the denominator has
    /// constant term 1. Equal functions have identical normal forms.
    [[nodiscard]] RationalFunction normalized() const;
    /// Equality as functions (cross-multiplication), not structural.
    [[nodiscard]] bool equivalent(const RationalFunction& o) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const Rational& c);

    [[nodiscard]] std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Power series of f to the given order, via the linear recurrence
/// den[0]*t[n] = num[n] - sum_{i>=1} den[i]*t[n-i].
[[nodiscard]] TruncatedSeries expand_rational(const RationalFunction& f, std::size_t order);

/// A rational evaluation point together with the interval it was
/// validated against. The golden interval 0 < x < phi - 1 is tested
/// exactly as x > 0 and x + x^2 < 1.
class EvalPoint {
public:
    enum class Domain { unit_interval, golden_interval };

    /// Throw domain_violation naming the failed predicate.
    static EvalPoint unit(const Rational& x);
    static EvalPoint golden(const Rational& x);
    static EvalPoint make(const Rational& x, Domain d) { return d == Domain::unit_interval ? unit(x) : golden(x); }

    [[nodiscard]] const Rational& x() const { return x_; }
    [[nodiscard]] Domain domain() const { return domain_; }

    /// Unit-interval requirements are met by either tag; this one is not.
    void require_golden(std::string_view who) const;

private:
    EvalPoint(Rational x, Domain d) : x_(std::move(x)), domain_(d) {}
    Rational x_;
    Domain domain_;
};

[[nodiscard]] std::string_view to_string(EvalPoint::Domain d);

[[nodiscard]] Rational eval_at(const RationalFunction& f, const EvalPoint& p);
[[nodiscard]] Rational eval_at(const TruncatedSeries& s, const EvalPoint& p);

// Generating functions.

/// prod_{j=1}^{order} (1 + x^j) truncated at x^order; coefficient n is q(n).
[[nodiscard]] TruncatedSeries pochhammer_neg(std::size_t order);
/// (x; x^2)_inf = prod_{j odd} (1 - x^j) truncated at x^order.
[[nodiscard]] TruncatedSeries pochhammer_odd(std::size_t order);
/// sum_{m>=1} x^m / (1 - x^{2m}); coefficient n is the number of odd divisors of n.
[[nodiscard]] TruncatedSeries lambert_odd_divisors(std::size_t order);

/// x / (1 - x - x^2).
[[nodiscard]] RationalFunction fibonacci_gf();
/// 1 - x - x^2
[[nodiscard]] Polynomial fibonacci_denominator();
/// x^4 / ((1 - x^2)(1 - x^4)), the generating function of Q_2(n).
[[nodiscard]] RationalFunction q2_gf();
/// x^k/((1-x^2)(1-x^{2(k-1)})) - x^k/(1-x^{2k}) for a prime power k > 2.
/// Throws not_a_prime_power otherwise.
[[nodiscard]] RationalFunction prime_power_gf(std::uint64_t prime_power);
[[nodiscard]] TruncatedSeries theorem2_gf(std::uint64_t prime_power, std::size_t order);
/// x^k / ((1 - x)(1 - x^k)), whose coefficients are floor(n / k).
[[nodiscard]] RationalFunction floor_quotient_gf(std::size_t k);

} // namespace oddbounds
