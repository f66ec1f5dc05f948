#include "oddbounds/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "oddbounds/errors.hpp"

namespace oddbounds {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs)
{
    trim();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power)
{
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::operator[](std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational{};
}

Rational Polynomial::leading() const
{
    return coeffs_.empty() ? Rational{} : coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result{Rational(1)};
    for (unsigned i = 0; i < e; ++i) {
        result = result * *this;
    }
    return result;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return {};
    }
    return *this * leading().reciprocal();
}

Polynomial Polynomial::divide_by_x_power(std::size_t k) const
{
    for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i) {
        if (!coeffs_[i].is_zero()) {
            throw cancellation_failure("coefficient of x^" + std::to_string(i) + " is " + coeffs_[i].str()
                                       + "; cannot divide by x^" + std::to_string(k));
        }
    }
    if (k >= coeffs_.size()) {
        return {};
    }
    return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.is_zero()) {
        throw denominator_vanishes("polynomial division by zero");
    }
    std::vector<Rational> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) {
        return {Polynomial{}, *this};
    }
    std::vector<Rational> quot(rem.size() - dd);
    const Rational inv_lead = divisor.leading().reciprocal();
    for (std::size_t i = rem.size(); i-- > dd;) {
        const Rational c = rem[i] * inv_lead;
        quot[i - dd] = c;
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] -= c * divisor.coeffs_[j];
        }
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    for (auto& v : coeffs_) {
        v *= c;
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0 || mag != Rational(1)) {
            out += mag.str();
        }
        if (i >= 1) {
            out += "x";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << p.str();
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace oddbounds
