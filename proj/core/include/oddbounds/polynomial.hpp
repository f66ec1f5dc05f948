#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddbounds/rational.hpp"

namespace oddbounds {

/// Dense univariate polynomial over the rationals. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(const Rational& c, std::size_t power);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    [[nodiscard]] Rational operator[](std::size_t i) const;
    [[nodiscard]] Rational leading() const;

    [[nodiscard]] Rational evaluate(const Rational& x) const;
    [[nodiscard]] Polynomial pow(unsigned e) const;
    [[nodiscard]] Polynomial monic() const;

    /// Exact division by x^k. Throws cancellation_failure if any of the
    /// k lowest coefficients is nonzero.
    [[nodiscard]] Polynomial divide_by_x_power(std::size_t k) const;

    /// Euclidean division; throws denominator_vanishes for a zero divisor.
    [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, ascending powers: "1 + 4x + 5x^2 - 6x^4".
    [[nodiscard]] std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
[[nodiscard]] Polynomial gcd(Polynomial a, Polynomial b);

} // namespace oddbounds
