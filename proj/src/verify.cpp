#include "flockplan/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace flockplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.6180339887498949;

// Closed-form rest-to-rest motion state, derived here from the limits alone so
// the checker shares no evaluation code with the planner.
struct Motion {
    Vec3 origin;
    Vec3 dir;
    double delay = 0.0;
    double ta = 0.0, tc = 0.0, td = 0.0;
    double vp = 0.0;
    double len = 0.0;

    double total() const { return ta + tc + td; }
};

Motion make_motion(const DronePath& p, double delay) {
    Motion m;
    m.origin = p.start;
    m.delay = delay;
    const Vec3 seg = p.target - p.start;
    m.len = norm(seg);
    if (m.len <= 0.0) return m;  // parked forever
    const double a = p.limits.accel, dc = p.limits.decel, v = p.limits.v_max;
    if (!(a > 0.0) || !(dc > 0.0) || !(v > 0.0))
        throw std::invalid_argument("verify: motion limits must be positive");
    m.dir = seg / m.len;
    const double ramp = 0.5 * v * v * (1.0 / a + 1.0 / dc);
    if (m.len >= ramp) {
        m.vp = v;
        m.ta = v / a;
        m.td = v / dc;
        m.tc = (m.len - ramp) / v;
    } else {
        m.vp = std::sqrt(2.0 * m.len * a * dc / (a + dc));
        m.ta = m.vp / a;
        m.td = m.vp / dc;
    }
    return m;
}

Vec3 position(const Motion& m, double t) {
    const double u = t - m.delay;
    double arc;
    if (u <= 0.0 || m.len <= 0.0) {
        arc = 0.0;
    } else if (u <= m.ta) {
        arc = 0.5 * (m.vp / m.ta) * u * u;
    } else if (u <= m.ta + m.tc) {
        arc = 0.5 * m.vp * m.ta + m.vp * (u - m.ta);
    } else if (u < m.total()) {
        const double w = m.total() - u;
        arc = m.len - 0.5 * (m.vp / m.td) * w * w;
    } else {
        arc = m.len;
    }
    return m.origin + m.dir * arc;
}

template <class F>
double golden_refine(F&& gap, double a, double b, double tol) {
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = gap(x1), f2 = gap(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = gap(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = gap(x2);
        }
    }
    return 0.5 * (a + b);
}

struct PairOutcome {
    double min_dist = kInf;
    double min_time = 0.0;
    bool breached = false;
    double breach_time = 0.0;
    double breach_dist = 0.0;
};

// First time the gap drops to the radius inside (t_safe, t_bad], located by
// bisection; gap(t_safe) > radius >= gap(t_bad).
template <class F>
double first_crossing(F&& gap, double t_safe, double t_bad, double radius) {
    for (int it = 0; it < 60 && t_bad - t_safe > 1e-12; ++it) {
        const double mid = 0.5 * (t_safe + t_bad);
        if (gap(mid) > radius)
            t_safe = mid;
        else
            t_bad = mid;
    }
    return t_bad;
}

// Sweep one pair over [lo, hi]. Strides shrink with the current gap so no
// breach of `radius` can be stepped over; intervals whose worst-case interior
// dip could still reach the radius get a sub-resolution rescan. The minimum is
// sharpened by golden-section refinement at every sampled local minimum and at
// both window edges, which makes it near-exact where it is small;
// far-from-threshold dips may be reported slightly high, never low.
template <class F>
PairOutcome scan_pair(F&& gap, double lo, double hi, double lip, double radius, double res) {
    PairOutcome out;

    auto note = [&](double t, double d) {
        if (d < out.min_dist) {
            out.min_dist = d;
            out.min_time = t;
        }
        if (d <= radius && !out.breached) {
            out.breached = true;
            out.breach_time = t;
            out.breach_dist = d;
        }
    };

    // Sub-resolution rescan of [a, b]: uniform samples plus golden refinement
    // around the best one. Only called when the previous samples up to `a`
    // were all above the radius, so any first crossing lies inside (prev, t].
    auto rescan = [&](double a, double da, double b, double db) {
        const int steps = 32;
        const double h = (b - a) / steps;
        double best_t = a, best_d = da;
        double prev_t = a;
        double first_bad = kInf;
        for (int k = 1; k <= steps; ++k) {
            const double t = (k == steps) ? b : a + k * h;
            const double d = (k == steps) ? db : gap(t);
            if (d < best_d) {
                best_t = t;
                best_d = d;
            }
            if (d <= radius && first_bad == kInf) first_bad = first_crossing(gap, prev_t, t, radius);
            prev_t = t;
        }
        const double bl = std::max(a, best_t - h);
        const double br = std::min(b, best_t + h);
        const double t_ref = golden_refine(gap, bl, br, 1e-9);
        const double d_ref = gap(t_ref);
        if (d_ref <= radius && first_bad == kInf) first_bad = first_crossing(gap, bl, t_ref, radius);
        if (first_bad != kInf && !out.breached) {
            out.breached = true;
            out.breach_time = first_bad;
            out.breach_dist = gap(first_bad);
        }
        if (best_d < out.min_dist) {
            out.min_dist = best_d;
            out.min_time = best_t;
        }
        if (d_ref < out.min_dist) {
            out.min_dist = d_ref;
            out.min_time = t_ref;
        }
    };

    auto refine_interval = [&](double a, double b) {
        if (!(b > a)) return;
        const double t_ref = golden_refine(gap, a, b, 1e-9);
        const double d_ref = gap(t_ref);
        if (d_ref < out.min_dist) {
            out.min_dist = d_ref;
            out.min_time = t_ref;
        }
        if (d_ref <= radius && !out.breached) {
            out.breached = true;
            out.breach_time = first_crossing(gap, a, t_ref, radius);
            out.breach_dist = gap(out.breach_time);
        }
    };

    double t_prev = lo, d_prev = gap(lo);
    note(t_prev, d_prev);
    if (hi <= lo) return out;

    // Rolling window (t2,d2) -> (t1,d1) -> current, for local-min detection.
    double t2 = lo, d2 = d_prev, t1 = lo, d1 = d_prev;
    bool have2 = false;
    double first_end = lo;
    std::vector<std::array<double, 2>> brackets;

    while (t_prev < hi) {
        const double stride = lip > 0.0 ? std::max(res, (d_prev - radius) / lip) : (hi - t_prev);
        const double t = std::min(hi, t_prev + std::max(stride, res));
        const double d = gap(t);

        // Worst-case interior dip for this interval under the speed bound.
        const double bound = 0.5 * (d_prev + d - lip * (t - t_prev));
        if (bound <= radius + lip * res) rescan(t_prev, d_prev, t, d);

        note(t, d);
        if (first_end == lo) first_end = t;
        if (have2 && d1 <= d2 && d1 <= d && (d1 < d2 || d1 < d)) brackets.push_back({t2, t});
        t2 = t1;
        d2 = d1;
        t1 = t;
        d1 = d;
        have2 = true;
        t_prev = t;
        d_prev = d;
    }

    for (const auto& br : brackets) refine_interval(br[0], br[1]);
    refine_interval(lo, first_end);
    if (have2) refine_interval(t2, hi);
    return out;
}

double travel_seconds(const DronePath& p) {
    return travel_time(build_profile(p.length(), p.limits));
}

}  // namespace

VerifyResult verify(const std::vector<DronePath>& paths, const std::vector<double>& delays,
                    double radius, double resolution) {
    if (paths.size() != delays.size())
        throw std::invalid_argument("verify: one delay per path required");
    if (!(radius >= 0.0)) throw std::invalid_argument("verify: radius must be non-negative");
    if (!(resolution > 0.0)) throw std::invalid_argument("verify: resolution must be positive");

    VerifyResult result;
    const std::size_t n = paths.size();
    if (n < 2) return result;

    std::vector<Motion> motion;
    motion.reserve(n);
    for (std::size_t i = 0; i < n; ++i) motion.push_back(make_motion(paths[i], delays[i]));

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Motion& A = motion[i];
            const Motion& B = motion[j];
            const double lo = std::min({0.0, A.delay, B.delay});
            const double hi = std::max(A.delay + A.total(), B.delay + B.total());
            const double lip = A.vp + B.vp;
            auto gap = [&](double t) { return distance(position(A, t), position(B, t)); };
            const PairOutcome po = scan_pair(gap, lo, std::max(hi, lo), lip, radius, resolution);
            if (po.min_dist < result.min_distance) result.min_distance = po.min_dist;
            if (po.breached) {
                result.collision_free = false;
                if (!result.first_violation || po.breach_time < result.first_violation->time) {
                    Violation v;
                    v.drone_a = static_cast<int>(i);
                    v.drone_b = static_cast<int>(j);
                    v.time = po.breach_time;
                    v.distance = po.breach_dist;
                    result.first_violation = v;
                }
            }
        }
    }
    return result;
}

double flock_time(const std::vector<DronePath>& paths, const std::vector<double>& delays) {
    if (paths.size() != delays.size())
        throw std::invalid_argument("flock_time: one delay per path required");
    double ft = 0.0;
    for (std::size_t i = 0; i < paths.size(); ++i)
        ft = std::max(ft, delays[i] + travel_seconds(paths[i]));
    return ft;
}

Overheads overheads(const std::vector<DronePath>& paths, const std::vector<double>& delays) {
    Overheads oh;
    double max_travel = 0.0;
    for (const DronePath& p : paths) max_travel = std::max(max_travel, travel_seconds(p));
    if (max_travel > 0.0) oh.time_pct = 100.0 * flock_time(paths, delays) / max_travel;
    oh.distance_pct = 100.0;  // straight segments: flown length == ideal length
    return oh;
}

RunMetrics compute_metrics(const std::vector<DronePath>& paths, const std::vector<double>& delays,
                           double radius, double calc_time_s, double resolution) {
    RunMetrics m;
    m.flock_time = flock_time(paths, delays);
    if (!delays.empty()) {
        double sum = 0.0;
        for (double d : delays) {
            sum += d;
            m.max_delay = std::max(m.max_delay, d);
        }
        m.mean_delay = sum / static_cast<double>(delays.size());
    }
    const Overheads oh = overheads(paths, delays);
    m.overhead_time_pct = oh.time_pct;
    m.overhead_distance_pct = oh.distance_pct;
    m.calc_time = calc_time_s;
    const VerifyResult vr = verify(paths, delays, radius, resolution);
    m.min_observed_pair_distance = vr.min_distance;
    m.collision_free = vr.collision_free;
    return m;
}

}  // namespace flockplan
