#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace oddbounds {

using BigInt = mpz_class;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator. Two values are equal iff their canonical forms are.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T v) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>) {
            value_ = static_cast<long>(v);
        } else {
            value_ = static_cast<unsigned long>(v);
        }
    }
    explicit Rational(const BigInt& v) : value_(v) {}
    /// Throws denominator_vanishes when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "a", "-a", "a/b"; surrounding whitespace is not allowed.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// "num/den", with "/den" omitted for integers.
    [[nodiscard]] std::string str() const;

    enum class Rounding { down, up, nearest };
    /// Fixed-point rendering with `digits` fractional digits. `down`/`up`
    /// round toward -inf/+inf so printed bounds stay certified.
    [[nodiscard]] std::string to_decimal(unsigned digits, Rounding mode = Rounding::nearest) const;

    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] Rational pow(unsigned long e) const;
    [[nodiscard]] Rational reciprocal() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    /// Throws denominator_vanishes on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a)
    {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

[[nodiscard]] BigInt binomial(unsigned long n, unsigned long k);

} // namespace oddbounds
