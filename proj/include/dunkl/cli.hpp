#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl::cli {

// exit codes
constexpr int ok = 0;
constexpr int refused = 1;  // classification refusal, or tables-verify mismatch
constexpr int usage = 2;
constexpr int failure = 3;  // numerical failure on valid input

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "name:line: expected '...' got '...'" for every differing line
std::vector<std::string> line_diff(const std::string& name, const std::string& expected, const std::string& got);

// doubles rounded to 12 significant digits
std::string format_double(double v);

} // namespace dunkl::cli
