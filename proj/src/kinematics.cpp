#include "flockplan/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace flockplan {

VelocityProfile build_profile(double length, const KinematicLimits& limits) {
    if (length < 0.0) throw std::invalid_argument("build_profile: negative length");
    if (limits.accel <= 0.0 || limits.v_max <= 0.0 || limits.decel <= 0.0)
        throw std::invalid_argument("build_profile: limits must be strictly positive");

    VelocityProfile p;
    p.length = length;
    if (length == 0.0) return p;

    const double a = limits.accel;
    const double d = limits.decel;
    const double v = limits.v_max;

    // Distance consumed by a full ramp up to v_max and back down.
    const double ramp_dist = v * v * 0.5 * (1.0 / a + 1.0 / d);
    if (length >= ramp_dist) {
        p.v_peak = v;
        p.t_accel = v / a;
        p.t_decel = v / d;
        p.dist_accel_end = v * v / (2.0 * a);
        p.dist_decel_start = length - v * v / (2.0 * d);
        p.t_cruise = (p.dist_decel_start - p.dist_accel_end) / v;
    } else {
        p.v_peak = std::sqrt(2.0 * length * a * d / (a + d));
        p.t_accel = p.v_peak / a;
        p.t_decel = p.v_peak / d;
        p.t_cruise = 0.0;
        p.dist_accel_end = p.v_peak * p.v_peak / (2.0 * a);
        p.dist_decel_start = p.dist_accel_end;
    }
    return p;
}

double travel_time(const VelocityProfile& profile) { return profile.total_time(); }

double arc_length_at(const VelocityProfile& profile, double tau) {
    if (tau <= 0.0 || profile.length == 0.0) return 0.0;
    const double t1 = profile.t_accel;
    const double t12 = t1 + profile.t_cruise;
    const double total = profile.total_time();
    if (tau <= t1) {
        return 0.5 * profile.accel_rate() * tau * tau;
    }
    if (tau <= t12) {
        return profile.dist_accel_end + profile.v_peak * (tau - t1);
    }
    if (tau < total) {
        const double u = tau - t12;
        return profile.dist_decel_start + profile.v_peak * u - 0.5 * profile.decel_rate() * u * u;
    }
    return profile.length;
}

double time_at_arc_length(const VelocityProfile& profile, double dist) {
    if (dist <= 0.0 || profile.length == 0.0) return 0.0;
    if (dist >= profile.length) return profile.total_time();
    if (dist <= profile.dist_accel_end) {
        return std::sqrt(2.0 * dist / profile.accel_rate());
    }
    if (dist <= profile.dist_decel_start) {
        return profile.t_accel + (dist - profile.dist_accel_end) / profile.v_peak;
    }
    // Deceleration phase: solve v_peak*u - dec*u^2/2 = dist - dist_decel_start
    // for the earlier root.
    const double dec = profile.decel_rate();
    const double rem = dist - profile.dist_decel_start;
    const double disc = std::max(0.0, profile.v_peak * profile.v_peak - 2.0 * dec * rem);
    const double u = (profile.v_peak - std::sqrt(disc)) / dec;
    return profile.t_accel + profile.t_cruise + u;
}

DelayedTrajectory make_trajectory(const DronePath& path, double start_delay) {
    return DelayedTrajectory{path, build_profile(path.length(), path.limits), start_delay};
}

}  // namespace flockplan
