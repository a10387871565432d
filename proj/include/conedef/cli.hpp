#pragma once

#include "conedef/cone_deformation.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conedef::cli {

inline constexpr const char* schema_version = "1.0";

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_out_of_scope = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "rnc:<d>", "veronese:<n>:<d>", "segre:<d>", "product:<a>:<b>", "delpezzo:<r>".
cone::PolarizedVariety parse_descriptor(const std::string& text);

/// "lo..hi", inclusive; rejects lo > hi.
std::pair<int, int> parse_window(const std::string& text);

/// Runs one command line (without the program name). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conedef::cli
