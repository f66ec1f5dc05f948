#pragma once

#include <cstdint>
#include <optional>

namespace oddbounds {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

/// Decomposes v = p^r with r >= 1, or nullopt. Trial division; inputs here
/// are small.
[[nodiscard]] std::optional<PrimePower> as_prime_power(std::uint64_t v);

[[nodiscard]] bool is_prime(std::uint64_t v);

/// tau(n), the number of positive divisors; tau(0) = 0.
[[nodiscard]] std::uint64_t divisor_count(std::uint64_t n);

} // namespace oddbounds
