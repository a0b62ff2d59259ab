#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace pgt::cli {

inline constexpr const char* kVersion = "0.1.0";

// Parameter grids. Accepted forms (strings may appear on the command line or
// in a JSON config):
//   "2.5"               single value; fractions such as "1/6" are allowed
//   "1,2,5"             explicit list
//   "10..100:5"         arithmetic steps of 5
//   "1e3..1e6:x2"       geometric steps by a factor of 2
// and in JSON additionally numbers, arrays, and {"from", "to", "step"} or
// {"from", "to", "log_step"} objects. Stepped ranges always end exactly at
// "to": if the last step falls short, "to" is appended as a final row.
std::vector<double> parse_range(const nlohmann::json& spec);
std::vector<long long> parse_int_range(const nlohmann::json& spec);

// Runs one command line (args excludes the program name). Reports go to `out`
// unless --out names a file; diagnostics go to `err`. Returns the exit code:
// 0 success, 2 bad input or violated precondition, 1 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgt::cli
