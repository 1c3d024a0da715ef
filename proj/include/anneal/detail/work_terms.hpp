#pragma once

#include <vector>

#include "anneal/chain.hpp"
#include "anneal/protocol.hpp"

namespace anneal::detail {

/// g' of a protocol: constant slopes on segments plus the boundary steps
/// 0 -> g(0+) and g(tau-) -> 1.
struct DrivePath {
    struct Segment {
        double start;
        double end;
        double slope;
    };
    std::vector<Segment> segments;
    double step_start = 0.0;
    double step_end = 0.0;
    double tau = 0.0;
};

[[nodiscard]] DrivePath make_drive_path(const Protocol &p);

/// |int e^{i w t} g'(t) dt|^2 times the mode amplitude.
[[nodiscard]] double cosine_work_term(const Mode &m, const DrivePath &path) noexcept;

/// Double integral of sinc(w (t - t')) g'(t) g'(t') times the mode amplitude.
[[nodiscard]] double sinc_work_term(const Mode &m, const DrivePath &path) noexcept;

} // namespace anneal::detail
