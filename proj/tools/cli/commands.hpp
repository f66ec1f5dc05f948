#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "oddbounds/partitions.hpp"

namespace oddbounds::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
};

/// Runs one CLI invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// A qtable dump row as read back from CSV: absent cells are -1.
struct ParsedQRow {
    std::uint64_t n = 0;
    BigInt q;
    BigInt fib;
    std::vector<long long> q_values;  // Q_1 .. Q_K
};

/// Parses the CSV emitted by `qtable --format csv`. Throws parse_error.
std::vector<ParsedQRow> parse_qtable_csv(std::istream& in);

} // namespace oddbounds::cli
