#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "flockplan/kinematics.hpp"

namespace flockplan {

/// Earliest observed breach of the separation radius.
struct Violation {
    int drone_a = -1;
    int drone_b = -1;
    double time = 0.0;      // about when the gap first reaches the radius
    double distance = 0.0;  // gap observed there
};

struct VerifyResult {
    bool collision_free = true;
    // Smallest pairwise gap observed anywhere on the timeline; +inf when
    // fewer than two drones exist. Reported even on success so safety
    // margins can be tracked across runs.
    double min_distance = std::numeric_limits<double>::infinity();
    std::optional<Violation> first_violation;
};

/// Check that every drone pair keeps a gap strictly above `radius` for the
/// whole mission. Positions are evaluated by code written separately from the
/// planner's clearance predicate, so the check cannot inherit its bugs. The
/// timeline is swept per pair with speed-bound-aware strides never coarser
/// than `resolution` near close approaches, plus local refinement around each
/// pair's minimum; a breach can therefore not be stepped over.
VerifyResult verify(const std::vector<DronePath>& paths, const std::vector<double>& delays,
                    double radius, double resolution = 1e-3);

/// Completion time of the whole flock: max over drones of delay + travel time.
double flock_time(const std::vector<DronePath>& paths, const std::vector<double>& delays);

struct Overheads {
    double time_pct = 100.0;      // flock time over the slowest undelayed travel
    double distance_pct = 100.0;  // flown distance over straight-line distance
};

/// Time overhead is flock_time / max travel * 100; distance overhead is
/// identically 100 because every drone flies its straight segment.
Overheads overheads(const std::vector<DronePath>& paths, const std::vector<double>& delays);

/// One scheduled run summarized for reporting.
struct RunMetrics {
    double flock_time = 0.0;
    double mean_delay = 0.0;
    double max_delay = 0.0;
    double overhead_time_pct = 100.0;
    double overhead_distance_pct = 100.0;
    double calc_time = 0.0;  // planning wall time, supplied by the caller
    double min_observed_pair_distance = std::numeric_limits<double>::infinity();
    bool collision_free = true;
};

RunMetrics compute_metrics(const std::vector<DronePath>& paths, const std::vector<double>& delays,
                           double radius, double calc_time_s, double resolution = 1e-3);

}  // namespace flockplan
