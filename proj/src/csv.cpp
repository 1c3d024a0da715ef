#include "anneal/csv.hpp"

#include <array>
#include <cstdio>

namespace anneal::csv {

std::string format(double x)
{
    std::array<char, 32> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.17g", x);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string units_line(const ChainParams &params)
{
    std::array<char, 256> buf{};
    const int n = std::snprintf(buf.data(), buf.size(),
                                "# units: energy=J, time=hbar/J, work=energy per spin, variance=energy^2 per spin "
                                "(J=%.17g, hbar=%.17g)",
                                params.J, params.hbar);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

} // namespace anneal::csv
