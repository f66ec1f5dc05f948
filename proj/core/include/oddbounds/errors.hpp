#pragma once

#include <stdexcept>
#include <string>

namespace oddbounds {

// All library failures derive from std::domain_error so callers can catch
// the whole family at once, or a specific condition by type.
class error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class zero_constant_denominator : public error {
public:
    zero_constant_denominator() : error("denominator has zero constant term") {}
};

class denominator_vanishes : public error {
public:
    explicit denominator_vanishes(const std::string& at)
        : error("denominator vanishes at x = " + at) {}
};

class not_a_prime_power : public error {
public:
    explicit not_a_prime_power(long long v)
        : error(std::to_string(v) + " is not a prime power greater than 2") {}
};

class unsupported_case : public error {
public:
    using error::error;
};

class unsupported_k : public error {
public:
    using error::error;
};

class domain_violation : public error {
public:
    using error::error;
};

class tail_diverges : public error {
public:
    using error::error;
};

class cancellation_failure : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

} // namespace oddbounds
