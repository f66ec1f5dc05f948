#include <random>

#include <doctest.h>

#include "oddbounds/errors.hpp"
#include "oddbounds/series.hpp"
#include "oracles.hpp"

using namespace oddbounds;

namespace {

TruncatedSeries from_ints(std::initializer_list<long> v)
{
    std::vector<Rational> c;
    for (long x : v) {
        c.emplace_back(x);
    }
    return TruncatedSeries(std::move(c));
}

std::vector<long> as_longs(const TruncatedSeries& s)
{
    std::vector<long> out;
    for (const auto& c : s.coefficients()) {
        REQUIRE(c.is_integer());
        out.push_back(c.numerator().get_si());
    }
    return out;
}

} // namespace

TEST_CASE("series_add and series_mul")
{
    const auto a = from_ints({1, 1, 0});
    const auto b = from_ints({1, -1, 0});
    CHECK(as_longs(series_mul(a, b)) == std::vector<long>{1, 0, -1});
    CHECK(as_longs(series_add(a, b)) == std::vector<long>{2, 0, 0});

    // prod_{j=1}^{6} (1 + x^j) at order 6: coefficient of x^6 is q(6) = 4.
    TruncatedSeries prod = from_ints({1, 0, 0, 0, 0, 0, 0});
    for (std::size_t j = 1; j <= 6; ++j) {
        prod = series_mul(prod, TruncatedSeries::from_polynomial(
                                    Polynomial{Rational(1)} + Polynomial::monomial(Rational(1), j), 6));
    }
    CHECK(prod[6] == Rational(4));
}

TEST_CASE("mixed orders truncate to the smaller one")
{
    const auto a = from_ints({1, 2, 3, 4, 5});
    const auto b = from_ints({1, 1});
    CHECK(series_add(a, b).order() == 1);
    CHECK(series_mul(a, b).order() == 1);
    CHECK(as_longs(series_mul(a, b)) == std::vector<long>{1, 3});
    CHECK(a.truncated(2).order() == 2);
    CHECK(as_longs(a.shifted(2)) == std::vector<long>{0, 0, 1, 2, 3});
    CHECK_THROWS(TruncatedSeries(std::vector<Rational>{}));
}

TEST_CASE("reciprocal multiplies back to one")
{
    const TruncatedSeries odd = pochhammer_odd(60);
    const TruncatedSeries prod = series_mul(odd, odd.reciprocal());
    CHECK(prod[0] == Rational(1));
    for (std::size_t n = 1; n <= 60; ++n) {
        CHECK(prod[n].is_zero());
    }
    const auto half = from_ints({2, 1, 0, 3});
    const auto back = series_mul(half, half.reciprocal());
    CHECK(back == from_ints({1, 0, 0, 0}));
    CHECK_THROWS_AS((void)from_ints({0, 1}).reciprocal(), zero_constant_denominator);
}

TEST_CASE("commutativity and associativity on random series")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<std::size_t> ord(0, 8);
    auto draw = [&] {
        std::vector<Rational> c(ord(rng) + 1);
        for (auto& v : c) {
            v = Rational(BigInt(coef(rng)), BigInt(den(rng)));
        }
        return TruncatedSeries(std::move(c));
    };
    for (int i = 0; i < 200; ++i) {
        const auto a = draw();
        const auto b = draw();
        const auto c = draw();
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_add(a, b) == series_add(b, a));
        CHECK(series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)));
    }
}

TEST_CASE("expand_rational")
{
    CHECK(as_longs(expand_rational(fibonacci_gf(), 10)) == std::vector<long>{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55});
    CHECK(as_longs(expand_rational(q2_gf(), 10)) == std::vector<long>{0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 2});
    const RationalFunction geometric(Polynomial{Rational(1)}, Polynomial{Rational(1), Rational(-1)});
    CHECK(as_longs(expand_rational(geometric, 3)) == std::vector<long>{1, 1, 1, 1});
    CHECK_THROWS_AS(RationalFunction(Polynomial{Rational(1)}, Polynomial{Rational(0), Rational(1)}),
                    zero_constant_denominator);

    // A non-monic constant term: 1/(2 - x) = sum x^n / 2^{n+1}.
    const auto half = expand_rational(RationalFunction(Polynomial{Rational(1)}, Polynomial{Rational(2), Rational(-1)}), 4);
    CHECK(half[4] == Rational(1, 32));
    // Multiply back: denominator * expansion == numerator mod x^{N+1}.
    const auto f = prime_power_gf(9);
    const auto t = expand_rational(f, 60);
    const auto check = series_mul(TruncatedSeries::from_polynomial(f.denominator(), 60), t);
    CHECK(check == TruncatedSeries::from_polynomial(f.numerator(), 60));
}

TEST_CASE("floor quotient generating function and the ceiling identity")
{
    for (std::size_t k = 1; k <= 20; ++k) {
        const auto s = expand_rational(floor_quotient_gf(k), 200);
        for (std::size_t n = 0; n <= 200; ++n) {
            CHECK(s[n] == Rational(n / k));
        }
    }
    // ceil(floor(n/k) / 2) == floor((n + k) / (2k))
    for (std::uint64_t n = 0; n <= 500; ++n) {
        for (std::uint64_t k = 1; k <= 20; ++k) {
            CHECK((n / k + 1) / 2 == (n + k) / (2 * k));
        }
    }
}

TEST_CASE("pochhammer_neg coefficients are partition counts")
{
    CHECK(pochhammer_neg(0) == from_ints({1}));
    CHECK(pochhammer_neg(6)[6] == Rational(4));
    const auto s = pochhammer_neg(10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(s[static_cast<std::size_t>(n)] == Rational(oracle::count_distinct(n)));
    }
    CHECK(as_longs(s) == std::vector<long>{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10});
    CHECK(pochhammer_neg(200).is_integral());
}

TEST_CASE("distinct-part product equals the reciprocal of the odd-part product up to 1000")
{
    constexpr std::size_t N = 1000;
    const auto distinct = pochhammer_neg(N);
    const auto odd = pochhammer_odd(N);
    const auto one = series_mul(distinct, odd);
    CHECK(one[0] == Rational(1));
    std::size_t nonzero = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        nonzero += one[n].is_zero() ? 0 : 1;
    }
    CHECK(nonzero == 0);

    // (1 - x - x^2) / (x; x^2)_inf has nonpositive coefficients past x^0.
    const auto scaled = series_mul(TruncatedSeries::from_polynomial(fibonacci_denominator(), N), odd.reciprocal());
    CHECK(scaled[0] == Rational(1));
    std::size_t positive = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        positive += scaled[n].sign() > 0 ? 1 : 0;
    }
    CHECK(positive == 0);
}

TEST_CASE("lambert_odd_divisors")
{
    CHECK(as_longs(lambert_odd_divisors(3)) == std::vector<long>{0, 1, 1, 2});
    CHECK(lambert_odd_divisors(9)[9] == Rational(3));
    CHECK(lambert_odd_divisors(0) == from_ints({0}));
    const auto s = lambert_odd_divisors(300);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        CHECK(s[n] == Rational(oracle::odd_divisors(n)));
    }
}

TEST_CASE("theorem2_gf examples")
{
    // Q_3(9) = 1 from 1+1+7; Q_4(6) = Q_4(8) = 1 from 1+1+1+3 and 1+1+1+5.
    CHECK(theorem2_gf(3, 9)[9] == Rational(1));
    const auto four = theorem2_gf(4, 8);
    CHECK(four[6] == Rational(1));
    CHECK(four[8] == Rational(1));
    const auto low = theorem2_gf(3, 2);
    for (const auto& c : low.coefficients()) {
        CHECK(c.is_zero());
    }
    CHECK_THROWS_AS((void)theorem2_gf(6, 10), not_a_prime_power);
    CHECK_THROWS_AS((void)theorem2_gf(2, 10), not_a_prime_power);
    CHECK_THROWS_AS((void)theorem2_gf(1, 10), not_a_prime_power);

    // Against brute-force histograms.
    for (int n = 1; n <= 22; ++n) {
        const auto h = oracle::q_histogram(n);
        for (std::uint64_t k : {3, 4, 5, 7, 8, 9}) {
            const auto it = h.find(mpz_class(static_cast<unsigned long>(k)));
            const std::uint64_t expect = it == h.end() ? 0 : it->second;
            CHECK(theorem2_gf(k, 22)[static_cast<std::size_t>(n)] == Rational(expect));
        }
    }
}

TEST_CASE("eval_at and evaluation points")
{
    const auto quarter = EvalPoint::golden(Rational(1, 4));
    const RationalFunction r0(Polynomial{Rational(1), Rational(0), Rational(-1)}, fibonacci_denominator());
    CHECK(eval_at(r0, quarter) == Rational(15, 11));
    CHECK(eval_at(fibonacci_gf(), quarter) == Rational(4, 11));
    CHECK(eval_at(RationalFunction(Polynomial{}, fibonacci_denominator()), quarter) == Rational(0));
    CHECK(eval_at(pochhammer_neg(6), quarter) == pochhammer_neg(6).evaluate(Rational(1, 4)));

    // 1/(1 - 2x) vanishes at x = 1/2.
    const RationalFunction pole(Polynomial{Rational(1)}, Polynomial{Rational(1), Rational(-2)});
    CHECK_THROWS_AS((void)pole.evaluate(Rational(1, 2)), denominator_vanishes);

    CHECK_NOTHROW((void)EvalPoint::unit(Rational(9, 10)));
    CHECK_THROWS_AS((void)EvalPoint::golden(Rational(9, 10)), domain_violation);
    CHECK_THROWS_AS((void)EvalPoint::unit(Rational(1)), domain_violation);
    CHECK_THROWS_AS((void)EvalPoint::unit(Rational(0)), domain_violation);
    CHECK_THROWS_AS((void)EvalPoint::golden(Rational(-1, 4)), domain_violation);
    // x = 3/5: x + x^2 = 24/25 < 1; x = 5/8: 65/64 >= 1. The boundary is phi - 1 ~ 0.618.
    CHECK_NOTHROW((void)EvalPoint::golden(Rational(3, 5)));
    CHECK_THROWS_AS((void)EvalPoint::golden(Rational(5, 8)), domain_violation);
    try {
        (void)EvalPoint::golden(Rational(2, 3));
        FAIL("expected domain_violation");
    } catch (const domain_violation& e) {
        CHECK(std::string(e.what()).find("x+x^2 >= 1") != std::string::npos);
    }
    CHECK_THROWS_AS(EvalPoint::unit(Rational(1, 2)).require_golden("test"), domain_violation);
}

TEST_CASE("rational function normalization")
{
    const Polynomial one_plus_x{Rational(1), Rational(1)};
    const RationalFunction a(Polynomial{Rational(1), Rational(0), Rational(-1)}, fibonacci_denominator());
    const RationalFunction b(a.numerator() * one_plus_x * Rational(3), a.denominator() * one_plus_x * Rational(3));
    CHECK(a.equivalent(b));
    const auto na = a.normalized();
    const auto nb = b.normalized();
    CHECK(na.numerator() == nb.numerator());
    CHECK(na.denominator() == nb.denominator());
    CHECK(nb.denominator()[0] == Rational(1));
    CHECK_FALSE(a.equivalent(fibonacci_gf()));
}
