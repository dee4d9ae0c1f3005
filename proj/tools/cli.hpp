#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgesteg/error.hpp"

namespace edgesteg::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    io = 2,
    format = 3,
    capacity = 4,
    extraction = 5,
};

/// Exit status reported for a library error.
ExitCode exit_code_for(ErrorKind kind) noexcept;

/// Parses "d.d" (exactly one fractional digit) into tenths, e.g. "1.5" -> 15.
/// Returns nullopt for malformed or out-of-range input.
std::optional<int> parse_sigma_tenths(std::string_view text);

/// Runs one invocation. args excludes the program name. Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace edgesteg::cli
