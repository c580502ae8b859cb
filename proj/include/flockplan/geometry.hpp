#pragma once

#include "flockplan/kinematics.hpp"
#include "flockplan/vec3.hpp"

namespace flockplan {

/// Closest approach between two straight path segments.
struct PairGeometry {
    double s = 0.0;   // parameter on p's segment, in [0,1] after clamping
    double t = 0.0;   // parameter on q's segment, in [0,1] after clamping
    Vec3 point_p;     // start_p + s * (target_p - start_p)
    Vec3 point_q;     // start_q + t * (target_q - start_q)
    double mu = 0.0;  // |point_p - point_q|, meters
    bool parallel = false;
};

/// Relative tolerance for the parallel test: |a*c - b^2| <= eps * a*c.
inline constexpr double kParallelEps = 1e-12;

/// Closest points of two segments. Out-of-range parameters are clamped with
/// re-projection (when one parameter clamps, the other is recomputed against
/// the clamped endpoint), so mu is the true segment-segment minimum distance.
/// Parallel pairs report the midpoint of the mutual overlap when the
/// projections overlap, otherwise the nearest endpoint pair.
/// Throws DegeneratePathError when either path has zero length.
PairGeometry closest_approach(const DronePath& path_p, const DronePath& path_q);

/// Distance from a point to a segment; a degenerate segment collapses to the
/// distance between the two points.
double point_segment_distance(const Vec3& point, const Vec3& seg_a, const Vec3& seg_b);

}  // namespace flockplan
