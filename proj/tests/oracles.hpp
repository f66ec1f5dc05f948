#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's enumeration, series or closed-form code.

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Partitions of n into distinct parts, each part >= min_part.
inline std::uint64_t count_distinct(int n, int min_part = 1)
{
    if (n == 0) {
        return 1;
    }
    std::uint64_t c = 0;
    for (int p = min_part; p <= n; ++p) {
        c += count_distinct(n - p, p + 1);
    }
    return c;
}

// Nonincreasing lists of odd parts summing to n, largest part <= max_part.
inline void odd_lists(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = (max_part % 2 == 1) ? max_part : max_part - 1; p >= 1; p -= 2) {
        if (p > n) {
            continue;
        }
        cur.push_back(p);
        odd_lists(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> odd_partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    odd_lists(n, n, cur, out);
    return out;
}

inline mpz_class factorial(unsigned long n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// k! / prod t_i! straight from factorials.
inline mpz_class multinomial_of_parts(const std::vector<int>& parts)
{
    std::map<int, unsigned long> mult;
    for (int p : parts) {
        ++mult[p];
    }
    mpz_class r = factorial(parts.size());
    for (const auto& [p, t] : mult) {
        r /= factorial(t);
    }
    return r;
}

inline std::map<mpz_class, std::uint64_t> q_histogram(int n)
{
    std::map<mpz_class, std::uint64_t> h;
    for (const auto& parts : odd_partitions(n)) {
        ++h[multinomial_of_parts(parts)];
    }
    return h;
}

inline std::uint64_t odd_divisors(std::uint64_t n)
{
    std::uint64_t c = 0;
    for (std::uint64_t d = 1; d <= n; d += 2) {
        c += (n % d == 0);
    }
    return c;
}

// Compositions of n into odd parts; equals F_n for n >= 1.
inline std::vector<mpz_class> odd_compositions(int max_n)
{
    std::vector<mpz_class> c(max_n + 1);
    c[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        for (int a = 1; a <= n; a += 2) {
            c[n] += c[n - a];
        }
    }
    return c;
}

} // namespace oracle
