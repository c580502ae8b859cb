#pragma once

#include <vector>

#include "flockplan/geometry.hpp"
#include "flockplan/kinematics.hpp"
#include "flockplan/matrix.hpp"

namespace flockplan {

/// Clearance parameters shared by table construction, scheduling and
/// verification. The working threshold is sf * r_col.
struct SafetyParams {
    double r_col = 1.0;   // collision radius, m
    double sf = 1.5;      // safety factor, unitless, must exceed 1
    double lambda = 0.5;  // soft-marker constant, strictly inside (0,1)

    double threshold() const { return sf * r_col; }
};

/// How the row drone's path relates to the column drone's path.
/// Values 1-8 are the eight reachable two-drone configurations.
enum class PairClass : int {
    None = 0,            // diagonal placeholder
    ParallelClear = 1,   // parallel, separated by more than the threshold
    ParallelBlocked = 2, // whole row path inside the column drone's corridor;
                         // the endpoint rules then hard-constrain both
                         // directions, so the pair shows up as a 2-cycle
    SkewClear = 3,       // non-parallel, never closer than the threshold
    Crossing = 4,        // closest approach mid-path on both sides
    TargetParked = 5,    // row's target inside the corridor, closest at s = 1
    TargetExposed = 6,   // row's target inside the corridor, closest earlier
    StartParked = 7,     // row's start inside the corridor, closest at s = 0
    StartExposed = 8,    // row's start inside the corridor, closest later
};

/// Point-to-segment distances that disambiguate the configurations.
struct EndpointDistances {
    double p_start_to_q = 0.0;   // row drone's start to column drone's segment
    double p_target_to_q = 0.0;  // row drone's target to column drone's segment
    double q_start_to_p = 0.0;   // column drone's start to row drone's segment
};

/// All-pairs conflict tables. Diagonals are unused and zeroed.
struct CollisionTables {
    int n = 0;
    Grid<double> min_dist;      // symmetric segment-segment minimum distance (m)
    Grid<int> may_collide;      // 1 when min_dist <= threshold (boundary counts)
    Grid<double> closest_frac;  // closest-approach fraction along the row drone's path
    Grid<double> masked_frac;   // closest_frac zeroed where may_collide is 0
    Grid<double> constraint;    // 0 free, (0,1) soft, 1 hard: row must wait for column
    Grid<PairClass> config;     // configuration of (row, column) from the row's view
};

/// Configuration of the ordered pair (p, q) from p's perspective.
PairClass classify_pair(const PairGeometry& pg, const EndpointDistances& ed,
                        const SafetyParams& params);

/// Build every pairwise table for the given paths.
/// Throws std::invalid_argument on bad params and DegeneratePathError on a
/// zero-length path. Geometrically inseparable pairs (one path running inside
/// the other's corridor with the longitudinal order flipping) are not errors
/// here: their constraint entries are hard in both directions, so cycle
/// detection reports them as two-drone dependency cycles.
CollisionTables build_tables(const std::vector<DronePath>& paths, const SafetyParams& params);

}  // namespace flockplan
