#include "oddbounds/number_theory.hpp"

namespace oddbounds {

bool is_prime(std::uint64_t v)
{
    if (v < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t v)
{
    if (v < 2) {
        return std::nullopt;
    }
    std::uint64_t p = v;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            p = d;
            break;
        }
    }
    unsigned r = 0;
    while (v % p == 0) {
        v /= p;
        ++r;
    }
    if (v != 1) {
        return std::nullopt;
    }
    return PrimePower{p, r};
}

std::uint64_t divisor_count(std::uint64_t n)
{
    if (n == 0) {
        return 0;
    }
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            count += (d * d == n) ? 1 : 2;
        }
    }
    return count;
}

} // namespace oddbounds
