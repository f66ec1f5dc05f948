#include <random>
#include <sstream>

#include <doctest.h>

#include "oddbounds/errors.hpp"
#include "oddbounds/polynomial.hpp"
#include "oddbounds/rational.hpp"

using namespace oddbounds;

TEST_CASE("rational canonical form")
{
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(BigInt(10), BigInt(5)).str() == "2");
    CHECK(Rational(BigInt(0), BigInt(7)).denominator() == 1);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), denominator_vanishes);
    CHECK_THROWS_AS(Rational(1) / Rational(0), denominator_vanishes);
}

TEST_CASE("rational parse and print")
{
    CHECK(Rational::parse("1/4") == Rational(1, 4));
    CHECK(Rational::parse("-6/8").str() == "-3/4");
    CHECK(Rational::parse("+7").str() == "7");
    CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
    CHECK_THROWS_AS(Rational::parse("a/2"), parse_error);
    CHECK_THROWS_AS(Rational::parse(""), parse_error);
    CHECK_THROWS_AS(Rational::parse("1/"), parse_error);
    CHECK_THROWS_AS(Rational::parse(" 1"), parse_error);
    std::ostringstream os;
    os << Rational(15, 11);
    CHECK(os.str() == "15/11");
}

TEST_CASE("directed decimal rendering")
{
    const Rational r(15, 11);  // 1.363636...
    CHECK(r.to_decimal(4, Rational::Rounding::down) == "1.3636");
    CHECK(r.to_decimal(4, Rational::Rounding::up) == "1.3637");
    CHECK(r.to_decimal(4) == "1.3636");
    CHECK((-r).to_decimal(4, Rational::Rounding::down) == "-1.3637");
    CHECK((-r).to_decimal(4, Rational::Rounding::up) == "-1.3636");
    CHECK(Rational(1, 8).to_decimal(2) == "0.13");
    CHECK(Rational(1, 1000).to_decimal(2, Rational::Rounding::up) == "0.01");
    CHECK(Rational(3).to_decimal(0) == "3");
    CHECK(Rational(1, 4).to_decimal(5, Rational::Rounding::down) == "0.25000");
}

TEST_CASE("rational field laws on random values")
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 40);
    auto draw = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
    for (int i = 0; i < 500; ++i) {
        const Rational a = draw();
        const Rational b = draw();
        const Rational c = draw();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        const Rational s = a * b + c;
        CHECK(gcd(abs(s.numerator()), s.denominator()) == 1);
        CHECK(s.denominator() > 0);
        CHECK(Rational::parse(s.str()) == s);
    }
}

TEST_CASE("polynomial arithmetic, division and gcd")
{
    const Polynomial one_minus_x{Rational(1), Rational(-1)};
    const Polynomial one_plus_x{Rational(1), Rational(1)};
    CHECK(one_minus_x * one_plus_x == Polynomial{Rational(1), Rational(0), Rational(-1)});
    CHECK((one_plus_x - one_plus_x).is_zero());
    CHECK(Polynomial{Rational(0)}.degree() == -1);

    const Polynomial p = one_plus_x.pow(3) * one_minus_x;
    const auto [q, r] = p.divmod(one_plus_x);
    CHECK(r.is_zero());
    CHECK(q == one_plus_x.pow(2) * one_minus_x);
    CHECK(gcd(p, one_plus_x.pow(2)) == one_plus_x.pow(2));
    CHECK(gcd(one_minus_x, one_plus_x) == Polynomial{Rational(1)});
    CHECK(p.evaluate(Rational(1, 2)) == Rational(27, 16));

    const Polynomial shifted = Polynomial::monomial(Rational(3), 4) + Polynomial::monomial(Rational(1), 2);
    CHECK(shifted.divide_by_x_power(2) == Polynomial{Rational(1), Rational(0), Rational(3)});
    CHECK_THROWS_AS((void)shifted.divide_by_x_power(3), cancellation_failure);
    CHECK(Polynomial{Rational(1), Rational(4), Rational(0), Rational(-6)}.str() == "1 + 4x - 6x^3");
}
