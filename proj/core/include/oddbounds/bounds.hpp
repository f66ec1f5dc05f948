#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oddbounds/identities.hpp"
#include "oddbounds/rational.hpp"
#include "oddbounds/series.hpp"

namespace oddbounds {

/// Certified interval: the target lies in [lo, hi].
struct Enclosure {
    Rational lo;
    Rational hi;

    [[nodiscard]] Rational width() const { return hi - lo; }
    [[nodiscard]] bool contains(const Enclosure& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

/// Encloses L(x) = sum_{n>=1} x^n / (1 - x^{2n}).
///
/// lo is the exact partial sum of the first `terms` terms. For n > N each
/// term satisfies x^n/(1-x^{2n}) <= x^n/(1-x^{2(N+1)}), and summing the
/// geometric tail gives hi = lo + x^{N+1} / ((1-x)(1-x^{2(N+1)})).
[[nodiscard]] Enclosure enclose_odd_divisor_sum(const EvalPoint& p, std::size_t terms);

/// Encloses P(x) = prod_{n>=1} (1 + x^n).
///
/// lo is the exact partial product. With t = sum_{n>N} x^n = x^{N+1}/(1-x),
/// the tail factor obeys prod_{n>N}(1+x^n) <= exp(t) <= 1/(1-t) for t < 1,
/// so hi = lo / (1 - t). Throws tail_diverges when t >= 1.
[[nodiscard]] Enclosure enclose_distinct_product(const EvalPoint& p, std::size_t terms);

enum class BoundSide { lower, upper };

[[nodiscard]] std::string_view to_string(BoundSide s);

/// A bound on the product P(x) written as P (<|>) constant + sum_weight * L(x).
struct ProductForm {
    Rational constant;
    Rational sum_weight;
};

struct BoundResult {
    std::string family;
    std::uint64_t k = 0;
    Rational x;
    BoundSide side = BoundSide::upper;
    /// What `value` bounds, e.g. "P", "L", "2P - L", "P - L".
    std::string target;
    /// The family's bounding side evaluated exactly at x.
    Rational value;
    /// Present for every family that bounds P, after moving the L terms
    /// to the right.
    std::optional<ProductForm> product_form;
    /// The bounding side as a rational function, when the family has one.
    std::optional<RationalFunction> symbolic;
};

/// constant + sum_weight * (sum.lo or sum.hi), picking the endpoint that
/// keeps the result certified for the bound's side (sum_weight >= 0).
[[nodiscard]] Rational certify(const ProductForm& form, BoundSide side, const Enclosure& sum);

/// Lower constant from the odd-divisor / Q_2 / prime-power decomposition:
///   1 + x^4/((1-x^2)(1-x^4)) + sum_{k in subset} GF_k(x),
/// with GF_k the prime-power generating functions. Every GF_k has
/// nonnegative coefficients (they count partitions), so summing over any
/// subset of the prime powers still gives a valid lower bound for P - L.
[[nodiscard]] BoundResult corollary1_lower(const EvalPoint& p, std::span<const std::uint64_t> subset);

/// Upper bound for L(x): x/(1-x-x^2) - 2 GF_2(x) - sum_{k in subset} k GF_k(x).
/// Dropping terms from the subset only increases the value, so it stays valid.
[[nodiscard]] BoundResult corollary2_upper(const EvalPoint& p, std::span<const std::uint64_t> subset);

/// The k-th index of the lower family: 1, 2, 3, 4, 5, 7, 8, 9, 11, ...
/// (1 and 2 followed by the prime powers above 2).
[[nodiscard]] std::uint64_t geometric_divisor_index(std::uint64_t k);

/// A_1 = 1, A_2 = 1 + GF_2, A_k = A_{k-1} + GF_{p_k}. Lower form P > A_k + L.
[[nodiscard]] BoundResult A_k(const EvalPoint& p, std::uint64_t k);

/// B_1 = 1 + x/(1-x-x^2), k B_k = (k-1) B_{k-1} + 1 + sum_{j=2}^{k-1} GF_j.
/// Upper form P < B_k + ((k-1)/k) L. Only 1 <= k <= 6: GF_6 has no closed
/// form, so larger k throw unsupported_k.
[[nodiscard]] BoundResult B_k(const EvalPoint& p, std::uint64_t k);

/// 1/(x^{k-1}(1+x)^k(1-x-x^2)) - (1/(x^k(1+x)^k)) sum_{n<=2k} (F_n - S_{n,k}) x^n
/// for the given S variant, over the common denominator (1+x)^k(1-x-x^2).
/// The x^k in the denominator is cancelled by exact polynomial division;
/// a leftover pole at 0 throws cancellation_failure.
[[nodiscard]] RationalFunction bound_rhs_symbolic(SVariant v, std::uint64_t k);

[[nodiscard]] inline RationalFunction R_k_symbolic(std::uint64_t k) { return bound_rhs_symbolic(SVariant::q_only, k); }

/// Upper bound R_k(x) on P.
[[nodiscard]] BoundResult R_k(const EvalPoint& p, std::uint64_t k);
/// Upper bound on 2P - L; product form P < rhs/2 + L/2.
[[nodiscard]] BoundResult th6_upper(const EvalPoint& p, std::uint64_t k);
/// Upper bound on 3P - 2L (including the additive GF_2 term); product
/// form P < rhs/3 + (2/3) L.
[[nodiscard]] BoundResult th7_upper(const EvalPoint& p, std::uint64_t k);

enum class SandwichStatus { straddles, inconclusive, violated };

[[nodiscard]] std::string_view to_string(SandwichStatus s);

struct SandwichReport {
    std::uint64_t k = 0;
    std::size_t terms = 0;
    Rational x;
    Rational lower;  // A_k + sum.lo
    Rational upper;  // B_k + ((k-1)/k) sum.hi
    Enclosure sum;
    /// Absent when the product tail bound does not apply at this order.
    std::optional<Enclosure> product;
    SandwichStatus status = SandwichStatus::inconclusive;
};

/// A_k + L < P < B_k + ((k-1)/k) L with every quantity certified by the
/// enclosures. Golden-interval point, 1 <= k <= 6.
[[nodiscard]] SandwichReport sandwich(const EvalPoint& p, std::uint64_t k, std::size_t terms);

} // namespace oddbounds
