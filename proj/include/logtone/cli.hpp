#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "logtone/log_freq.hpp"

namespace logtone::cli {

// Dispatches one command line (without the program name). Returns 0 on
// success, 1 on domain/capacity errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Comma-separated degree literals: "ln16", "ln(16)", "ln(4/3)", "3/2", "2".
std::vector<LogFreq> parse_degree_list(const std::string& text);

// Dyad ratio literals: "1.5", "3/2", or "ln(5)/ln(4)".
double parse_ratio(const std::string& text);

}  // namespace logtone::cli
