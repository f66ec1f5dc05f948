#include "oddbounds/bounds.hpp"

#include "oddbounds/errors.hpp"
#include "oddbounds/partitions.hpp"

namespace oddbounds {

std::string_view to_string(BoundSide s)
{
    return s == BoundSide::lower ? "lower" : "upper";
}

std::string_view to_string(SandwichStatus s)
{
    switch (s) {
    case SandwichStatus::straddles:
        return "straddles";
    case SandwichStatus::inconclusive:
        return "inconclusive";
    case SandwichStatus::violated:
        return "violated";
    }
    return "?";
}

Enclosure enclose_odd_divisor_sum(const EvalPoint& p, std::size_t terms)
{
    const Rational& x = p.x();
    Rational lo;
    Rational xn = 1;
    for (std::size_t n = 1; n <= terms; ++n) {
        xn *= x;
        lo += xn / (Rational(1) - xn * xn);
    }
    const Rational next = xn * x;
    const Rational tail = next / ((Rational(1) - x) * (Rational(1) - next * next));
    return {lo, lo + tail};
}

Enclosure enclose_distinct_product(const EvalPoint& p, std::size_t terms)
{
    const Rational& x = p.x();
    Rational lo = 1;
    Rational xn = 1;
    for (std::size_t n = 1; n <= terms; ++n) {
        xn *= x;
        lo *= Rational(1) + xn;
    }
    const Rational t = xn * x / (Rational(1) - x);
    if (t >= Rational(1)) {
        throw tail_diverges("product tail x^(N+1)/(1-x) = " + t.str() + " >= 1 at x = " + x.str() + ", N = "
                            + std::to_string(terms) + "; increase the number of terms");
    }
    return {lo, lo / (Rational(1) - t)};
}

Rational certify(const ProductForm& form, BoundSide side, const Enclosure& sum)
{
    const Rational& s = side == BoundSide::lower ? sum.lo : sum.hi;
    return form.constant + form.sum_weight * s;
}

namespace {

// Generating function of Q_j(n) where a closed form exists: j = 2 or a
// prime power above 2.
RationalFunction q_gf(std::uint64_t j)
{
    return j == 2 ? q2_gf() : prime_power_gf(j);
}

RationalFunction constant_fn(const Rational& c)
{
    return RationalFunction(Polynomial{c});
}

} // namespace

BoundResult corollary1_lower(const EvalPoint& p, std::span<const std::uint64_t> subset)
{
    const Rational& x = p.x();
    Rational value = Rational(1) + q2_gf().evaluate(x);
    for (auto k : subset) {
        value += prime_power_gf(k).evaluate(x);
    }
    BoundResult r;
    r.family = "corollary1";
    r.k = subset.size();
    r.x = x;
    r.side = BoundSide::lower;
    r.target = "P - L";
    r.value = value;
    r.product_form = ProductForm{value, Rational(1)};
    return r;
}

BoundResult corollary2_upper(const EvalPoint& p, std::span<const std::uint64_t> subset)
{
    p.require_golden("corollary2");
    const Rational& x = p.x();
    Rational value = fibonacci_gf().evaluate(x) - Rational(2) * q2_gf().evaluate(x);
    for (auto k : subset) {
        value -= Rational(k) * prime_power_gf(k).evaluate(x);
    }
    BoundResult r;
    r.family = "corollary2";
    r.k = subset.size();
    r.x = x;
    r.side = BoundSide::upper;
    r.target = "L";
    r.value = value;
    return r;
}

std::uint64_t geometric_divisor_index(std::uint64_t k)
{
    if (k == 0) {
        throw error("index sequence starts at k = 1");
    }
    if (k <= 2) {
        return k;
    }
    return first_prime_powers(k - 2).back();
}

BoundResult A_k(const EvalPoint& p, std::uint64_t k)
{
    if (k == 0) {
        throw error("A_k is defined for k >= 1");
    }
    const Rational& x = p.x();
    Rational value = 1;
    if (k >= 2) {
        value += q2_gf().evaluate(x);
    }
    if (k >= 3) {
        for (auto pk : first_prime_powers(k - 2)) {
            value += prime_power_gf(pk).evaluate(x);
        }
    }
    BoundResult r;
    r.family = "Ak";
    r.k = k;
    r.x = x;
    r.side = BoundSide::lower;
    r.target = "P - L";
    r.value = value;
    r.product_form = ProductForm{value, Rational(1)};
    return r;
}

BoundResult B_k(const EvalPoint& p, std::uint64_t k)
{
    p.require_golden("Bk");
    if (k == 0 || k > 6) {
        throw unsupported_k("B_k needs 1 <= k <= 6; the recurrence would need GF_6, which has no closed form (k = "
                            + std::to_string(k) + ")");
    }
    RationalFunction b = constant_fn(1) + fibonacci_gf();
    RationalFunction gf_sum = constant_fn(0);  // sum_{j=2}^{m-1} GF_j
    for (std::uint64_t m = 2; m <= k; ++m) {
        if (m >= 3) {
            gf_sum = gf_sum + q_gf(m - 1);
        }
        b = (b * Rational(m - 1) + constant_fn(1) + gf_sum) * Rational(1, m);
    }
    const Rational value = b.evaluate(p.x());
    BoundResult r;
    r.family = "Bk";
    r.k = k;
    r.x = p.x();
    r.side = BoundSide::upper;
    r.target = "P - ((k-1)/k) L";
    r.value = value;
    r.product_form = ProductForm{value, Rational(BigInt(k - 1), BigInt(k))};
    r.symbolic = b;
    return r;
}

RationalFunction bound_rhs_symbolic(SVariant v, std::uint64_t k)
{
    const WeightTables tables(2 * k + 1);
    std::vector<Rational> deficit(2 * k + 1);
    for (std::uint64_t n = 0; n <= 2 * k; ++n) {
        deficit[n] = Rational(tables.fib()(static_cast<long long>(n)) - compute_S(v, k, n, tables));
    }
    const Polynomial x{Rational(0), Rational(1)};
    const Polynomial d = fibonacci_denominator();
    // Over x^k (1+x)^k (1-x-x^2): numerator x - (1-x-x^2) * deficit.
    const Polynomial numerator = (x - d * Polynomial(std::move(deficit))).divide_by_x_power(k);
    const Polynomial one_plus_x{Rational(1), Rational(1)};
    return {numerator, one_plus_x.pow(static_cast<unsigned>(k)) * d};
}

namespace {

BoundResult rhs_family(const EvalPoint& p, std::uint64_t k, SVariant v, std::string family, std::string target,
                       const Rational& p_coeff, const Rational& l_coeff, bool with_q2)
{
    p.require_golden(family);
    RationalFunction f = bound_rhs_symbolic(v, k);
    if (with_q2) {
        f = q2_gf() + f;
    }
    BoundResult r;
    r.family = std::move(family);
    r.k = k;
    r.x = p.x();
    r.side = BoundSide::upper;
    r.target = std::move(target);
    r.value = f.evaluate(p.x());
    // p_coeff * P - l_coeff * L < value  =>  P < value/p_coeff + (l_coeff/p_coeff) L
    r.product_form = ProductForm{r.value / p_coeff, l_coeff / p_coeff};
    r.symbolic = std::move(f);
    return r;
}

} // namespace

BoundResult R_k(const EvalPoint& p, std::uint64_t k)
{
    return rhs_family(p, k, SVariant::q_only, "Rk", "P", Rational(1), Rational(0), false);
}

BoundResult th6_upper(const EvalPoint& p, std::uint64_t k)
{
    return rhs_family(p, k, SVariant::two_q_minus_q1, "th6", "2P - L", Rational(2), Rational(1), false);
}

BoundResult th7_upper(const EvalPoint& p, std::uint64_t k)
{
    return rhs_family(p, k, SVariant::three_q_variant, "th7", "3P - 2L", Rational(3), Rational(2), true);
}

SandwichReport sandwich(const EvalPoint& p, std::uint64_t k, std::size_t terms)
{
    p.require_golden("sandwich");
    SandwichReport r;
    r.k = k;
    r.terms = terms;
    r.x = p.x();
    const BoundResult a = A_k(p, k);
    const BoundResult b = B_k(p, k);
    r.sum = enclose_odd_divisor_sum(p, terms);
    r.lower = certify(*a.product_form, BoundSide::lower, r.sum);
    r.upper = certify(*b.product_form, BoundSide::upper, r.sum);
    try {
        r.product = enclose_distinct_product(p, terms);
    } catch (const tail_diverges&) {
        r.product.reset();
    }
    if (r.product) {
        if (r.lower < r.product->lo && r.product->hi < r.upper) {
            r.status = SandwichStatus::straddles;
        } else if (r.lower >= r.product->hi || r.upper <= r.product->lo) {
            r.status = SandwichStatus::violated;
        }
    }
    return r;
}

} // namespace oddbounds
