#pragma once

#include <limits>
#include <vector>

#include "flockplan/collision_model.hpp"
#include "flockplan/geometry.hpp"
#include "flockplan/kinematics.hpp"
#include "flockplan/priority.hpp"

namespace flockplan {

/// Knobs for the delay search and its distance sampling.
struct SearchParams {
    double dt_step = 1e-3;     // delay resolution of the reported bounds (s)
    double t_sample = 1e-2;    // base time-sampling step of the predicate (s)
    int expansion_cap = 16;    // max growth factor of the search bound
    double refine_tol = 1e-5;  // local-minimum refinement tolerance (s)
};

/// Relative start-delay range of the lower drone that would breach the
/// clearance threshold against one higher drone. lower may be -infinity
/// when the lower drone can only resolve the conflict by going afterwards.
struct ForbiddenInterval {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = 0.0;
};

/// Zero-delay travel times to the closest-approach points of a pair, and
/// their difference diff = t_p - t_q (the relative delay at which both
/// drones reach those points simultaneously).
struct CriticalTimes {
    double t_p = 0.0;
    double t_q = 0.0;
    double diff = 0.0;
};

/// Per-drone absolute start delays, in the order they were assigned.
struct Schedule {
    PriorityVector pv;
    std::vector<double> delays;  // indexed by drone id, all >= 0
};

/// Intervals each drone's delay was swept against, for diagnostics and
/// minimality checks. intervals[i] belongs to drone pv.order[i] and is
/// already shifted to absolute delays.
struct ScheduleDebug {
    std::vector<std::vector<ForbiddenInterval>> intervals;
};

/// Minimum distance between two delayed trajectories over their joint
/// window, parked phases included: sampled at t_sample with a local
/// refinement pass around every sampled local minimum.
double min_pair_distance(const DelayedTrajectory& traj_p, const DelayedTrajectory& traj_q,
                         const SearchParams& params = {});

/// True when the pair never gets closer than `threshold` at any time, parked
/// phases included. Uses Lipschitz-bounded strides so clear stretches are
/// skipped soundly, and refines near-threshold dips before accepting.
bool pair_clear(const DelayedTrajectory& traj_p, const DelayedTrajectory& traj_q,
                double threshold, const SearchParams& params = {});

/// Travel times to the closest-approach points, inverted analytically from
/// each drone's velocity profile.
CriticalTimes critical_times(const PairGeometry& pair, const VelocityProfile& prof_p,
                             const VelocityProfile& prof_q);

/// Relative delays of `lower` (against `higher` at delay zero) that breach
/// the clearance threshold. cl_entry is the constraint of (lower, higher):
/// entries below 1 get a finite lower bound searched downward; an entry of
/// exactly 1 pins the lower bound at -infinity.
/// Throws BlockedPairError (ids as given) when no collision-free delay
/// exists within the expanded search bound.
ForbiddenInterval forbidden_interval(const DronePath& higher, const DronePath& lower,
                                     double cl_entry, const SafetyParams& safety,
                                     const SearchParams& params, int higher_id = 0,
                                     int lower_id = 1);

/// Smallest non-negative delay outside every interval, each treated as
/// half-open [lower, upper): landing exactly on an upper bound is allowed.
double assign_delay(std::vector<ForbiddenInterval> intervals);

/// Assign delays in priority order: the first drone gets zero, every later
/// drone sweeps the forbidden intervals collected against all already
/// scheduled drones it may collide with.
Schedule schedule_all(const std::vector<DronePath>& paths, const CollisionTables& tables,
                      const PriorityVector& pv, const SafetyParams& safety,
                      const SearchParams& params = {}, ScheduleDebug* debug = nullptr);

}  // namespace flockplan
