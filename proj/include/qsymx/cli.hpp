#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qsymx/qsym.hpp"

namespace qsymx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kDefaultMaxDegree = 9;
inline constexpr int kHardMaxDegree = 14;

// Runs one command line (without the program name). Output is written only
// after the command has completed; on a usage error only `err` is written.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// {"basis": "M", "terms": [{"comp": [2,1], "coeff": "3/2"}, ...]}
std::string element_to_json(const QSymElement &x);
// Throws std::invalid_argument on malformed input.
QSymElement element_from_json(std::string_view text);

} // namespace qsymx::cli
