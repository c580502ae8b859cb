#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace flockplan {

/// A path with coincident start and target was passed where a direction is needed.
class DegeneratePathError : public std::invalid_argument {
public:
    explicit DegeneratePathError(const std::string& what) : std::invalid_argument(what) {}
};

/// The delay search found no collision-free offset inside the expanded bound.
/// Reachable only for mutually blocking pair geometries that upstream cycle
/// detection would have reported, or with a too-small expansion cap.
class BlockedPairError : public std::runtime_error {
public:
    BlockedPairError(int p, int q, const std::string& what)
        : std::runtime_error(what), drone_p(p), drone_q(q) {}
    int drone_p;
    int drone_q;
    std::vector<double> partial_delays;  // delays fixed before the failure
};

/// Rejection sampling could not place all endpoints under the spacing rule.
class GenerationError : public std::runtime_error {
public:
    GenerationError(const std::string& what, double fill) : std::runtime_error(what), fill_ratio(fill) {}
    double fill_ratio;
};

}  // namespace flockplan
