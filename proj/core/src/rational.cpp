#include "oddbounds/rational.hpp"

#include <ostream>

#include "oddbounds/errors.hpp"

namespace oddbounds {

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw denominator_vanishes(num.get_str() + "/0");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) {
            throw parse_error("malformed rational: '" + std::string(text) + "'");
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw parse_error("malformed rational: '" + std::string(text) + "'");
            }
        }
        // mpz_class rejects a leading '+'.
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s), 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits, Rounding mode) const
{
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const BigInt num = value_.get_num() * scale;
    const BigInt& den = value_.get_den();
    BigInt q;
    switch (mode) {
    case Rounding::down:
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        break;
    case Rounding::up:
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        break;
    case Rounding::nearest: {
        // floor((2*num + den) / (2*den)), ties toward +inf
        const BigInt twice = 2 * num + den;
        const BigInt d2 = 2 * den;
        mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), d2.get_mpz_t());
        break;
    }
    }
    const bool negative = q < 0;
    BigInt mag = abs(q);
    std::string s = mag.get_str();
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    if (digits > 0) {
        s.insert(s.size() - digits, ".");
    }
    return negative ? "-" + s : s;
}

Rational Rational::pow(unsigned long e) const
{
    Rational r;
    mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), e);
    return r;
}

Rational Rational::reciprocal() const
{
    return Rational(1) / *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw denominator_vanishes("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace oddbounds
