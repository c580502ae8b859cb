#include "flockplan/delay_scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "flockplan/errors.hpp"

namespace flockplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bisection stops this far below the reported delay resolution so interval
// endpoints overshoot the true clearance boundary by a negligible amount.
constexpr double kBisectScale = 1e-6;

struct Window {
    double begin;
    double end;
};

Window joint_window(const DelayedTrajectory& a, const DelayedTrajectory& b) {
    const double begin = std::min({0.0, a.start_delay, b.start_delay});
    const double end = std::max({begin, a.completion_time(), b.completion_time()});
    return {begin, end};
}

double distance_at(const DelayedTrajectory& a, const DelayedTrajectory& b, double t) {
    return distance(a.position_at(t), b.position_at(t));
}

// Golden-section minimum of the pair distance over [lo, hi].
double golden_min(const DelayedTrajectory& a, const DelayedTrajectory& b, double lo, double hi,
                  double tol) {
    constexpr double kRatio = 0.6180339887498949;
    double c = hi - kRatio * (hi - lo);
    double d = lo + kRatio * (hi - lo);
    double fc = distance_at(a, b, c);
    double fd = distance_at(a, b, d);
    while (hi - lo > tol) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kRatio * (hi - lo);
            fc = distance_at(a, b, c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kRatio * (hi - lo);
            fd = distance_at(a, b, d);
        }
    }
    return std::min(fc, fd);
}

// Minimum over a short suspicious stretch: fine scan plus refinement.
double dip_min(const DelayedTrajectory& a, const DelayedTrajectory& b, double lo, double hi,
               const SearchParams& params) {
    const int steps = std::clamp(static_cast<int>(std::ceil((hi - lo) / params.dt_step)), 4, 64);
    double best = kInf;
    int best_i = 0;
    for (int i = 0; i <= steps; ++i) {
        const double t = lo + (hi - lo) * i / steps;
        const double d = distance_at(a, b, t);
        if (d < best) {
            best = d;
            best_i = i;
        }
    }
    const double bracket_lo = lo + (hi - lo) * std::max(0, best_i - 1) / steps;
    const double bracket_hi = lo + (hi - lo) * std::min(steps, best_i + 1) / steps;
    return std::min(best, golden_min(a, b, bracket_lo, bracket_hi, params.refine_tol));
}

}  // namespace

double min_pair_distance(const DelayedTrajectory& traj_p, const DelayedTrajectory& traj_q,
                         const SearchParams& params) {
    const Window w = joint_window(traj_p, traj_q);
    if (w.end <= w.begin) return distance_at(traj_p, traj_q, w.begin);
    const int m = std::max(1, static_cast<int>(std::ceil((w.end - w.begin) / params.t_sample)));
    auto at = [&](int i) { return w.begin + (w.end - w.begin) * i / m; };
    std::vector<double> ds(m + 1);
    double best = kInf;
    for (int i = 0; i <= m; ++i) {
        ds[i] = distance_at(traj_p, traj_q, at(i));
        best = std::min(best, ds[i]);
    }
    for (int i = 1; i < m; ++i) {
        if (ds[i] <= ds[i - 1] && ds[i] <= ds[i + 1])
            best = std::min(best, golden_min(traj_p, traj_q, at(i - 1), at(i + 1),
                                             params.refine_tol));
    }
    if (ds[0] < ds[1])
        best = std::min(best, golden_min(traj_p, traj_q, at(0), at(1), params.refine_tol));
    if (ds[m] < ds[m - 1])
        best = std::min(best, golden_min(traj_p, traj_q, at(m - 1), at(m), params.refine_tol));
    return best;
}

bool pair_clear(const DelayedTrajectory& traj_p, const DelayedTrajectory& traj_q,
                double threshold, const SearchParams& params) {
    const Window w = joint_window(traj_p, traj_q);
    const double lip = traj_p.profile.v_peak + traj_q.profile.v_peak;
    double t = w.begin;
    double d = distance_at(traj_p, traj_q, t);
    if (d <= threshold) return false;
    while (t < w.end) {
        // Safe to stride while the margin outruns the closing speed.
        const double stride = std::max(params.t_sample, (d - threshold) / lip);
        const double tn = std::min(t + stride, w.end);
        const double dn = distance_at(traj_p, traj_q, tn);
        if (dn <= threshold) return false;
        // Deepest dip a lip-Lipschitz distance could hide inside (t, tn).
        if (0.5 * (d + dn - lip * (tn - t)) <= threshold) {
            if (dip_min(traj_p, traj_q, t, tn, params) <= threshold) return false;
        }
        t = tn;
        d = dn;
    }
    return true;
}

CriticalTimes critical_times(const PairGeometry& pair, const VelocityProfile& prof_p,
                             const VelocityProfile& prof_q) {
    CriticalTimes ct;
    ct.t_p = time_at_arc_length(prof_p, pair.s * prof_p.length);
    ct.t_q = time_at_arc_length(prof_q, pair.t * prof_q.length);
    ct.diff = ct.t_p - ct.t_q;
    return ct;
}

ForbiddenInterval forbidden_interval(const DronePath& higher, const DronePath& lower,
                                     double cl_entry, const SafetyParams& safety,
                                     const SearchParams& params, int higher_id, int lower_id) {
    const VelocityProfile prof_h = build_profile(higher.length(), higher.limits);
    const VelocityProfile prof_l = build_profile(lower.length(), lower.limits);
    const PairGeometry g = closest_approach(higher, lower);
    const CriticalTimes ct = critical_times(g, prof_h, prof_l);
    const double thr = safety.threshold();
    const DelayedTrajectory fixed{higher, prof_h, 0.0};
    auto clear_at = [&](double delta) {
        return pair_clear(fixed, DelayedTrajectory{lower, prof_l, delta}, thr, params);
    };

    const double t_cr = ct.diff;
    // Meeting the closest approach simultaneously realises mu <= threshold,
    // so t_cr collides; numerical equality at the boundary is treated as an
    // empty interval.
    if (clear_at(t_cr)) return {t_cr, t_cr};

    // Bound that clears every separable geometry: the lower drone starts
    // only after the higher one has fully completed.
    const double bound0 = ct.t_q + travel_time(prof_h);
    const double res = params.dt_step * kBisectScale;

    const auto search_out = [&](double sign) {
        for (double grow = 1.0; grow <= params.expansion_cap; grow *= 2.0) {
            const double far = t_cr + sign * grow * bound0;
            if (clear_at(far)) return far;
        }
        throw BlockedPairError(
            higher_id, lower_id,
            "pair (" + std::to_string(higher_id) + ", " + std::to_string(lower_id) +
                "): no collision-free relative delay within the expanded bound; "
                "the pair is mutually blocking or the expansion cap is too small");
    };

    ForbiddenInterval iv;
    {
        double free_end = search_out(+1.0);
        double hit_end = t_cr;
        while (free_end - hit_end > res) {
            const double mid = 0.5 * (free_end + hit_end);
            (clear_at(mid) ? free_end : hit_end) = mid;
        }
        iv.upper = free_end;
    }
    if (cl_entry == 1.0) {
        iv.lower = -kInf;
    } else {
        double free_end = search_out(-1.0);
        double hit_end = t_cr;
        while (hit_end - free_end > res) {
            const double mid = 0.5 * (free_end + hit_end);
            (clear_at(mid) ? free_end : hit_end) = mid;
        }
        iv.lower = free_end;
    }
    return iv;
}

double assign_delay(std::vector<ForbiddenInterval> intervals) {
    std::sort(intervals.begin(), intervals.end(),
              [](const ForbiddenInterval& a, const ForbiddenInterval& b) {
                  return a.lower < b.lower;
              });
    double delay = 0.0;
    for (const ForbiddenInterval& iv : intervals)
        if (delay >= iv.lower && delay < iv.upper) delay = iv.upper;
    return delay;
}

Schedule schedule_all(const std::vector<DronePath>& paths, const CollisionTables& tables,
                      const PriorityVector& pv, const SafetyParams& safety,
                      const SearchParams& params, ScheduleDebug* debug) {
    const int n = tables.n;
    if (static_cast<int>(paths.size()) != n || static_cast<int>(pv.order.size()) != n)
        throw std::invalid_argument("schedule_all: paths, tables and priority order disagree");

    Schedule schedule;
    schedule.pv = pv;
    schedule.delays.assign(n, 0.0);
    if (debug) debug->intervals.assign(n, {});

    for (int i = 1; i < n; ++i) {
        const int x = pv.order[i];
        std::vector<ForbiddenInterval> intervals;
        for (int k = 0; k < i; ++k) {
            const int j = pv.order[k];
            if (!tables.may_collide(x, j)) continue;
            ForbiddenInterval iv;
            try {
                iv = forbidden_interval(paths[j], paths[x], tables.constraint(x, j), safety,
                                        params, j, x);
            } catch (BlockedPairError& e) {
                e.partial_delays = schedule.delays;
                throw;
            }
            iv.lower += schedule.delays[j];
            iv.upper += schedule.delays[j];
            intervals.push_back(iv);
        }
        if (debug) debug->intervals[i] = intervals;
        schedule.delays[x] = assign_delay(std::move(intervals));
    }
    return schedule;
}

}  // namespace flockplan
