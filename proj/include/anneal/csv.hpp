#pragma once

#include <iosfwd>
#include <string>

#include "anneal/chain.hpp"

namespace anneal::csv {

/// Shortest round-trip-safe form: 17 significant digits.
[[nodiscard]] std::string format(double x);

/// `# units: ...` comment line (without trailing newline) for a chain.
[[nodiscard]] std::string units_line(const ChainParams &params);

} // namespace anneal::csv
