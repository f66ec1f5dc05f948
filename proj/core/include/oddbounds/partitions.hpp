#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oddbounds/rational.hpp"

namespace oddbounds {

/// A partition into odd parts by multiplicity: multiplicities[i] is the
/// number of parts equal to 2i+1. The last entry is nonzero (no trailing
/// zeros) except for the empty partition of 0.
struct OddPartition {
    std::vector<std::uint32_t> multiplicities;

    [[nodiscard]] std::uint64_t weight() const;
    [[nodiscard]] std::uint64_t part_count() const;
    /// Parts in nonincreasing order.
    [[nodiscard]] std::vector<std::uint32_t> parts() const;
    /// e.g. "{3,1^3}"
    [[nodiscard]] std::string str() const;

    friend bool operator==(const OddPartition&, const OddPartition&) = default;
    friend auto operator<=>(const OddPartition&, const OddPartition&) = default;
};

namespace detail {

template <class Visitor>
void visit_odd(OddPartition& p, std::uint64_t remaining, std::size_t max_index, Visitor& visit)
{
    // max_index is 0-based: the largest admissible part is 2*max_index+1.
    for (std::size_t i = max_index + 1; i-- > 0;) {
        const std::uint64_t part = 2 * i + 1;
        if (part > remaining) {
            continue;
        }
        const std::uint64_t most = remaining / part;
        // Part 1 has to absorb everything that is left.
        const std::uint64_t least = (i == 0) ? most : 1;
        for (std::uint64_t c = most; c >= least; --c) {
            p.multiplicities[i] = static_cast<std::uint32_t>(c);
            const std::uint64_t rest = remaining - c * part;
            if (rest == 0) {
                visit(static_cast<const OddPartition&>(p));
            } else if (i > 0) {
                visit_odd(p, rest, i - 1, visit);
            }
        }
        p.multiplicities[i] = 0;
    }
}

} // namespace detail

/// Calls visit(const OddPartition&) once per partition of n into odd
/// parts. Order: largest part descending, then its multiplicity
/// descending, recursively (reverse lexicographic on the nonincreasing part
/// sequence). For n = 6: {5,1}, {3^2}, {3,1^3}, {1^6}. The reference passed
/// to the visitor is reused between calls.
template <class Visitor>
void for_each_odd_partition(std::uint64_t n, Visitor&& visit)
{
    if (n == 0) {
        return;
    }
    OddPartition p;
    const std::size_t top = static_cast<std::size_t>((n - 1) / 2);
    for (std::size_t largest = top + 1; largest-- > 0;) {
        const std::uint64_t part = 2 * largest + 1;
        p.multiplicities.assign(largest + 1, 0);
        const std::uint64_t least = (largest == 0) ? n : 1;
        for (std::uint64_t c = n / part; c >= least; --c) {
            p.multiplicities[largest] = static_cast<std::uint32_t>(c);
            const std::uint64_t rest = n - c * part;
            if (rest == 0) {
                visit(static_cast<const OddPartition&>(p));
            } else if (largest > 0) {
                detail::visit_odd(p, rest, largest - 1, visit);
            }
        }
    }
}

[[nodiscard]] std::vector<OddPartition> enumerate_odd_partitions(std::uint64_t n);

/// (t_1 + ... + t_m)! / (t_1! ... t_m!) as a product of binomials over
/// running partial sums.
[[nodiscard]] BigInt multinomial(const OddPartition& p);

/// Same, for an arbitrary multiplicity vector.
[[nodiscard]] BigInt multinomial(const std::vector<std::uint32_t>& multiplicities);

/// q(0..max_n) read off prod (1 + x^j). Lookups below 0 give 0.
class PartitionCounts {
public:
    explicit PartitionCounts(std::size_t max_n);

    [[nodiscard]] std::size_t max_n() const { return values_.size() - 1; }
    /// q(n); 0 for n < 0. Throws std::out_of_range past max_n.
    [[nodiscard]] const BigInt& operator()(long long n) const;

private:
    std::vector<BigInt> values_;
};

[[nodiscard]] inline PartitionCounts q_count(std::size_t max_n) { return PartitionCounts(max_n); }

struct DivisorInfo {
    std::uint64_t n;
    std::uint64_t tau;
    std::uint64_t odd_divisor_count;
};

/// Direct trial division; n >= 1.
[[nodiscard]] DivisorInfo divisor_info(std::uint64_t n);

/// Q_1(n): tau(n) for odd n, tau(n) - tau(n/2) for even n; 0 for n == 0.
[[nodiscard]] std::uint64_t q1_closed(std::uint64_t n);
/// Q_2(n): 0 for odd n, floor(n/4) for even n; 0 for n == 0.
[[nodiscard]] std::uint64_t q2_closed(std::uint64_t n);
/// Q_{p^r}(n) by the prime-power closed form. Throws not_a_prime_power,
/// or unsupported_case for 2 (use q2_closed).
[[nodiscard]] std::uint64_t q_pr_closed(std::uint64_t prime_power, std::uint64_t n);

enum class Provenance { brute, closed_form };

[[nodiscard]] std::string_view to_string(Provenance p);

struct QEntry {
    std::uint64_t count = 0;
    Provenance source = Provenance::brute;
};

/// One row of the Q table: multinomial value k -> Q_k(n).
struct QRow {
    std::uint64_t n = 0;
    std::map<BigInt, QEntry> entries;

    /// Q_k(n) if present, else 0.
    [[nodiscard]] std::uint64_t at(const BigInt& k) const;
    [[nodiscard]] std::uint64_t at(std::uint64_t k) const { return at(BigInt(static_cast<unsigned long>(k))); }
    /// sum_k Q_k(n)
    [[nodiscard]] BigInt total() const;
    /// sum_k k * Q_k(n)
    [[nodiscard]] BigInt weighted_total() const;
};

/// Complete histogram of multinomial values over the odd partitions of n.
[[nodiscard]] QRow qk_brute(std::uint64_t n);

/// Closed-form entries for k in {1, 2} and prime powers k <= max_k. The
/// row is partial: other k are absent, not zero.
[[nodiscard]] QRow qk_closed(std::uint64_t n, std::uint64_t max_k);

/// Brute-force rows for n = 1..max_n, computed on `threads` workers.
[[nodiscard]] std::vector<QRow> build_qtable(std::uint64_t max_n, unsigned threads = 1);

struct PrimePowerSet {
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> elements;
};

/// All p^r <= bound with p prime, r >= 1 and p^r > 2, ascending.
[[nodiscard]] PrimePowerSet prime_powers_up_to(std::uint64_t bound);

/// The first `count` elements of the prime-power set.
[[nodiscard]] std::vector<std::uint64_t> first_prime_powers(std::size_t count);

/// Sum of multinomials over partitions of n into exactly k parts (any
/// part sizes).
[[nodiscard]] BigInt fine_multinomial_sum(std::uint64_t n, std::uint64_t k);

/// Whether C(n-1, k-1) equals fine_multinomial_sum(n, k).
[[nodiscard]] bool verify_fine(std::uint64_t n, std::uint64_t k);

} // namespace oddbounds
