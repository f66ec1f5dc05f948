#include "oddbounds/series.hpp"

#include <algorithm>

#include "oddbounds/errors.hpp"
#include "oddbounds/number_theory.hpp"

namespace oddbounds {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw error("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order)
{
    TruncatedSeries s(order);
    const auto c = p.coefficients();
    for (std::size_t i = 0; i < std::min(c.size(), order + 1); ++i) {
        s.coeffs_[i] = c[i];
    }
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    const std::size_t n = std::min(order, this->order());
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const
{
    TruncatedSeries out(order());
    for (std::size_t i = k; i <= order(); ++i) {
        out.coeffs_[i] = coeffs_[i - k];
    }
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const
{
    if (coeffs_[0].is_zero()) {
        throw zero_constant_denominator();
    }
    const Rational inv0 = coeffs_[0].reciprocal();
    TruncatedSeries out(order());
    out.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
        Rational acc;
        for (std::size_t i = 1; i <= n; ++i) {
            if (!coeffs_[i].is_zero()) {
                acc += coeffs_[i] * out.coeffs_[n - i];
            }
        }
        out.coeffs_[n] = -acc * inv0;
    }
    return out;
}

Rational TruncatedSeries::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

bool TruncatedSeries::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c)
{
    for (auto& v : coeffs_) {
        v *= c;
    }
    return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    }
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_[0].is_zero()) {
        throw zero_constant_denominator();
    }
}

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_{Rational(1)} {}

Rational RationalFunction::evaluate(const Rational& x) const
{
    const Rational d = den_.evaluate(x);
    if (d.is_zero()) {
        throw denominator_vanishes(x.str());
    }
    return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::normalized() const
{
    if (num_.is_zero()) {
        return RationalFunction(Polynomial{}, Polynomial{Rational(1)});
    }
    const Polynomial g = gcd(num_, den_);
    Polynomial n = num_.divmod(g).first;
    Polynomial d = den_.divmod(g).first;
    const Rational scale = d[0].reciprocal();
    return RationalFunction(n * scale, d * scale);
}

bool RationalFunction::equivalent(const RationalFunction& o) const
{
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_) {
        return RationalFunction(a.num_ + b.num_, a.den_);
    }
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_) {
        return RationalFunction(a.num_ - b.num_, a.den_);
    }
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const Rational& c)
{
    return RationalFunction(a.num_ * c, a.den_);
}

std::string RationalFunction::str() const
{
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

TruncatedSeries expand_rational(const RationalFunction& f, std::size_t order)
{
    const Polynomial& num = f.numerator();
    const auto den = f.denominator().coefficients();
    const Rational inv0 = den[0].reciprocal();
    std::vector<Rational> t(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = num[n];
        const std::size_t top = std::min(n, den.size() - 1);
        for (std::size_t i = 1; i <= top; ++i) {
            if (!den[i].is_zero()) {
                acc -= den[i] * t[n - i];
            }
        }
        t[n] = acc * inv0;
    }
    return TruncatedSeries(std::move(t));
}

// EvalPoint

EvalPoint EvalPoint::unit(const Rational& x)
{
    if (x.sign() <= 0) {
        throw domain_violation("x <= 0 (x = " + x.str() + "); need 0 < x < 1");
    }
    if (x >= Rational(1)) {
        throw domain_violation("x >= 1 (x = " + x.str() + "); need 0 < x < 1");
    }
    return {x, Domain::unit_interval};
}

EvalPoint EvalPoint::golden(const Rational& x)
{
    if (x.sign() <= 0) {
        throw domain_violation("x <= 0 (x = " + x.str() + "); need 0 < x and x+x^2 < 1");
    }
    if (x + x * x >= Rational(1)) {
        throw domain_violation("x+x^2 >= 1 (x = " + x.str() + "); need 0 < x and x+x^2 < 1");
    }
    return {x, Domain::golden_interval};
}

void EvalPoint::require_golden(std::string_view who) const
{
    if (domain_ != Domain::golden_interval) {
        throw domain_violation(std::string(who) + " requires a golden-interval point (0 < x, x+x^2 < 1); got a "
                               + std::string(to_string(domain_)) + " point x = " + x_.str());
    }
}

std::string_view to_string(EvalPoint::Domain d)
{
    return d == EvalPoint::Domain::unit_interval ? "unit-interval" : "golden-interval";
}

Rational eval_at(const RationalFunction& f, const EvalPoint& p)
{
    return f.evaluate(p.x());
}

Rational eval_at(const TruncatedSeries& s, const EvalPoint& p)
{
    return s.evaluate(p.x());
}

// Generating functions

TruncatedSeries pochhammer_neg(std::size_t order)
{
    TruncatedSeries s(order);
    s[0] = 1;
    for (std::size_t j = 1; j <= order; ++j) {
        for (std::size_t n = order; n >= j; --n) {
            if (!s[n - j].is_zero()) {
                s[n] += s[n - j];
            }
        }
    }
    return s;
}

TruncatedSeries pochhammer_odd(std::size_t order)
{
    TruncatedSeries s(order);
    s[0] = 1;
    for (std::size_t j = 1; j <= order; j += 2) {
        for (std::size_t n = order; n >= j; --n) {
            if (!s[n - j].is_zero()) {
                s[n] -= s[n - j];
            }
        }
    }
    return s;
}

TruncatedSeries lambert_odd_divisors(std::size_t order)
{
    std::vector<std::uint64_t> counts(order + 1, 0);
    for (std::size_t m = 1; m <= order; ++m) {
        for (std::size_t n = m; n <= order; n += 2 * m) {
            ++counts[n];
        }
    }
    std::vector<Rational> c(counts.begin(), counts.end());
    return TruncatedSeries(std::move(c));
}

Polynomial fibonacci_denominator()
{
    return Polynomial{Rational(1), Rational(-1), Rational(-1)};
}

RationalFunction fibonacci_gf()
{
    return {Polynomial{Rational(0), Rational(1)}, fibonacci_denominator()};
}

namespace {

// 1 - x^k
Polynomial one_minus_power(std::size_t k)
{
    return Polynomial{Rational(1)} - Polynomial::monomial(Rational(1), k);
}

} // namespace

RationalFunction q2_gf()
{
    return {Polynomial::monomial(Rational(1), 4), one_minus_power(2) * one_minus_power(4)};
}

RationalFunction prime_power_gf(std::uint64_t prime_power)
{
    if (prime_power <= 2 || !as_prime_power(prime_power)) {
        throw not_a_prime_power(static_cast<long long>(prime_power));
    }
    const std::size_t k = prime_power;
    const Polynomial xk = Polynomial::monomial(Rational(1), k);
    const RationalFunction first(xk, one_minus_power(2) * one_minus_power(2 * (k - 1)));
    const RationalFunction second(xk, one_minus_power(2 * k));
    return first - second;
}

TruncatedSeries theorem2_gf(std::uint64_t prime_power, std::size_t order)
{
    return expand_rational(prime_power_gf(prime_power), order);
}

RationalFunction floor_quotient_gf(std::size_t k)
{
    if (k == 0) {
        throw error("floor_quotient_gf needs k >= 1");
    }
    return {Polynomial::monomial(Rational(1), k), one_minus_power(1) * one_minus_power(k)};
}

} // namespace oddbounds
