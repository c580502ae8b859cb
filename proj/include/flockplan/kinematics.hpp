#pragma once

#include "flockplan/vec3.hpp"

namespace flockplan {

/// Uniform motion limits. All strictly positive; decel is a magnitude.
struct KinematicLimits {
    double accel = 3.0;   // m/s^2
    double v_max = 20.0;  // m/s
    double decel = 3.0;   // m/s^2
};

/// Straight start->target flight segment with the limits it will be flown under.
struct DronePath {
    Vec3 start;
    Vec3 target;
    KinematicLimits limits;

    double length() const { return distance(start, target); }

    /// Unit direction; zero vector for a degenerate (zero-length) path.
    Vec3 direction() const {
        const double len = length();
        return len > 0.0 ? (target - start) / len : Vec3{};
    }
};

/// Phase timing of a rest-to-rest run over a fixed distance: accelerate,
/// optionally cruise at v_peak, decelerate. Triangular profiles have
/// t_cruise == 0 and v_peak below the limit.
struct VelocityProfile {
    double t_accel = 0.0;        // s
    double t_cruise = 0.0;       // s
    double t_decel = 0.0;        // s
    double v_peak = 0.0;         // m/s
    double dist_accel_end = 0.0; // arc length where acceleration ends (m)
    double dist_decel_start = 0.0; // arc length where deceleration starts (m)
    double length = 0.0;         // total arc length (m)

    double total_time() const { return t_accel + t_cruise + t_decel; }
    double accel_rate() const { return t_accel > 0.0 ? v_peak / t_accel : 0.0; }
    double decel_rate() const { return t_decel > 0.0 ? v_peak / t_decel : 0.0; }
};

/// Profile for covering `length` meters from rest to rest under `limits`.
/// Trapezoidal when the distance allows reaching v_max, triangular otherwise.
/// Throws std::invalid_argument for negative length or non-positive limits.
VelocityProfile build_profile(double length, const KinematicLimits& limits);

/// Motion duration excluding any start delay.
double travel_time(const VelocityProfile& profile);

/// Arc length traveled `tau` seconds after motion start (clamped to [0, length]).
double arc_length_at(const VelocityProfile& profile, double tau);

/// Inverse of arc_length_at: earliest time at which `dist` meters are covered.
/// Clamps to [0, total_time] outside the profile's range.
double time_at_arc_length(const VelocityProfile& profile, double dist);

/// A path plus its profile and an absolute start delay: the complete
/// description of one drone's motion on the shared clock.
struct DelayedTrajectory {
    DronePath path;
    VelocityProfile profile;
    double start_delay = 0.0;  // s; relative frames may use negative values

    /// Position at absolute time t: parked at start before the delay elapses,
    /// parked at target after completion, on the segment in between.
    Vec3 position_at(double t) const {
        const double arc = arc_length_at(profile, t - start_delay);
        return path.start + path.direction() * arc;
    }

    double completion_time() const { return start_delay + profile.total_time(); }
};

/// Convenience: profile built from the path's own length and limits.
DelayedTrajectory make_trajectory(const DronePath& path, double start_delay);

}  // namespace flockplan
