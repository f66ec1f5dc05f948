#include "oddbounds/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "oddbounds/errors.hpp"
#include "oddbounds/number_theory.hpp"
#include "oddbounds/series.hpp"

namespace oddbounds {

std::uint64_t OddPartition::weight() const
{
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        w += (2 * i + 1) * multiplicities[i];
    }
    return w;
}

std::uint64_t OddPartition::part_count() const
{
    std::uint64_t k = 0;
    for (auto t : multiplicities) {
        k += t;
    }
    return k;
}

std::vector<std::uint32_t> OddPartition::parts() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t i = multiplicities.size(); i-- > 0;) {
        out.insert(out.end(), multiplicities[i], static_cast<std::uint32_t>(2 * i + 1));
    }
    return out;
}

std::string OddPartition::str() const
{
    std::string out = "{";
    for (std::size_t i = multiplicities.size(); i-- > 0;) {
        if (multiplicities[i] == 0) {
            continue;
        }
        if (out.size() > 1) {
            out += ",";
        }
        out += std::to_string(2 * i + 1);
        if (multiplicities[i] > 1) {
            out += "^" + std::to_string(multiplicities[i]);
        }
    }
    return out + "}";
}

std::vector<OddPartition> enumerate_odd_partitions(std::uint64_t n)
{
    std::vector<OddPartition> out;
    for_each_odd_partition(n, [&](const OddPartition& p) { out.push_back(p); });
    return out;
}

BigInt multinomial(const std::vector<std::uint32_t>& multiplicities)
{
    BigInt result = 1;
    BigInt step;
    unsigned long partial = 0;
    for (auto t : multiplicities) {
        if (t == 0) {
            continue;
        }
        partial += t;
        mpz_bin_uiui(step.get_mpz_t(), partial, t);
        result *= step;
    }
    return result;
}

BigInt multinomial(const OddPartition& p)
{
    return multinomial(p.multiplicities);
}

PartitionCounts::PartitionCounts(std::size_t max_n)
{
    const TruncatedSeries s = pochhammer_neg(max_n);
    values_.reserve(max_n + 1);
    for (const auto& c : s.coefficients()) {
        values_.push_back(c.numerator());
    }
}

const BigInt& PartitionCounts::operator()(long long n) const
{
    static const BigInt zero = 0;
    if (n < 0) {
        return zero;
    }
    if (static_cast<std::size_t>(n) >= values_.size()) {
        throw std::out_of_range("q(" + std::to_string(n) + ") beyond table bound " + std::to_string(max_n()));
    }
    return values_[static_cast<std::size_t>(n)];
}

DivisorInfo divisor_info(std::uint64_t n)
{
    DivisorInfo info{n, 0, 0};
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const std::uint64_t e = n / d;
        info.tau += (d == e) ? 1 : 2;
        info.odd_divisor_count += (d % 2);
        if (d != e) {
            info.odd_divisor_count += (e % 2);
        }
    }
    return info;
}

std::uint64_t q1_closed(std::uint64_t n)
{
    if (n == 0) {
        return 0;
    }
    return n % 2 == 1 ? divisor_count(n) : divisor_count(n) - divisor_count(n / 2);
}

std::uint64_t q2_closed(std::uint64_t n)
{
    return n % 2 == 0 ? n / 4 : 0;
}

std::uint64_t q_pr_closed(std::uint64_t prime_power, std::uint64_t n)
{
    const auto pp = as_prime_power(prime_power);
    if (!pp) {
        throw not_a_prime_power(static_cast<long long>(prime_power));
    }
    if (prime_power == 2) {
        throw unsupported_case("no prime-power closed form for Q_2; use q2_closed");
    }
    if (n == 0) {
        return 0;
    }
    const bool odd_prime = pp->prime != 2;
    if ((n % 2 == 1) != odd_prime) {
        return 0;
    }
    // ceil(floor((n-1)/(k-1)) / 2)
    const std::uint64_t f = (n - 1) / (prime_power - 1);
    const std::uint64_t base = (f + 1) / 2;
    std::uint64_t correction = (n % prime_power == 0) ? 1 : 0;
    if (!odd_prime) {
        correction *= (n / prime_power) % 2;
    }
    return base - correction;
}

std::string_view to_string(Provenance p)
{
    return p == Provenance::brute ? "brute" : "closed-form";
}

std::uint64_t QRow::at(const BigInt& k) const
{
    const auto it = entries.find(k);
    return it == entries.end() ? 0 : it->second.count;
}

BigInt QRow::total() const
{
    BigInt t = 0;
    for (const auto& [k, e] : entries) {
        t += static_cast<unsigned long>(e.count);
    }
    return t;
}

BigInt QRow::weighted_total() const
{
    BigInt t = 0;
    for (const auto& [k, e] : entries) {
        t += k * static_cast<unsigned long>(e.count);
    }
    return t;
}

QRow qk_brute(std::uint64_t n)
{
    QRow row;
    row.n = n;
    for_each_odd_partition(n, [&](const OddPartition& p) { ++row.entries[multinomial(p)].count; });
    return row;
}

QRow qk_closed(std::uint64_t n, std::uint64_t max_k)
{
    QRow row;
    row.n = n;
    auto put = [&](std::uint64_t k, std::uint64_t v) {
        row.entries[BigInt(static_cast<unsigned long>(k))] = QEntry{v, Provenance::closed_form};
    };
    if (max_k >= 1) {
        put(1, q1_closed(n));
    }
    if (max_k >= 2) {
        put(2, q2_closed(n));
    }
    if (max_k >= 3) {
        for (auto k : prime_powers_up_to(max_k).elements) {
            put(k, q_pr_closed(k, n));
        }
    }
    return row;
}

std::vector<QRow> build_qtable(std::uint64_t max_n, unsigned threads)
{
    std::vector<QRow> rows(max_n);
    threads = std::max(1U, threads);
    // Interleave rows across workers; work grows quickly with n.
    auto work = [&](unsigned worker) {
        for (std::uint64_t n = max_n; n >= 1; --n) {
            if ((max_n - n) % threads == worker) {
                rows[n - 1] = qk_brute(n);
            }
        }
    };
    if (threads == 1) {
        work(0);
        return rows;
    }
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back(work, w);
        }
    }
    return rows;
}

PrimePowerSet prime_powers_up_to(std::uint64_t bound)
{
    PrimePowerSet set;
    set.bound = bound;
    for (std::uint64_t v = 3; v <= bound; ++v) {
        if (as_prime_power(v)) {
            set.elements.push_back(v);
        }
    }
    return set;
}

std::vector<std::uint64_t> first_prime_powers(std::size_t count)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 3; out.size() < count; ++v) {
        if (as_prime_power(v)) {
            out.push_back(v);
        }
    }
    return out;
}

namespace {

void fine_visit(std::vector<std::uint32_t>& mult, std::uint64_t remaining, std::uint64_t parts_left,
                std::uint64_t max_part, BigInt& sum)
{
    if (parts_left == 0) {
        if (remaining == 0) {
            sum += multinomial(mult);
        }
        return;
    }
    if (remaining < parts_left) {
        return;
    }
    const std::uint64_t hi = std::min(max_part, remaining - (parts_left - 1));
    const std::uint64_t lo = (remaining + parts_left - 1) / parts_left;
    for (std::uint64_t part = hi; part >= lo && part >= 1; --part) {
        ++mult[part];
        fine_visit(mult, remaining - part, parts_left - 1, part, sum);
        --mult[part];
    }
}

} // namespace

BigInt fine_multinomial_sum(std::uint64_t n, std::uint64_t k)
{
    BigInt sum = 0;
    if (k == 0 || k > n) {
        return sum;
    }
    std::vector<std::uint32_t> mult(n + 1, 0);
    fine_visit(mult, n, k, n, sum);
    return sum;
}

bool verify_fine(std::uint64_t n, std::uint64_t k)
{
    if (n == 0 || k == 0) {
        return false;
    }
    return binomial(n - 1, k - 1) == fine_multinomial_sum(n, k);
}

} // namespace oddbounds
