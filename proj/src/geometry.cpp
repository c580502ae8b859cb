#include "flockplan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flockplan/errors.hpp"

namespace flockplan {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

double point_segment_distance(const Vec3& point, const Vec3& seg_a, const Vec3& seg_b) {
    const Vec3 ab = seg_b - seg_a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(point, seg_a);
    const double u = clamp01(dot(point - seg_a, ab) / len2);
    return distance(point, seg_a + ab * u);
}

PairGeometry closest_approach(const DronePath& path_p, const DronePath& path_q) {
    const Vec3 b1 = path_p.target - path_p.start;
    const Vec3 b2 = path_q.target - path_q.start;
    const Vec3 r = path_p.start - path_q.start;
    const double a = dot(b1, b1);
    const double c = dot(b2, b2);
    if (a == 0.0 || c == 0.0)
        throw DegeneratePathError("closest_approach: zero-length path segment");
    const double b = dot(b1, b2);
    const double d = dot(b1, r);
    const double e = dot(b2, r);
    const double denom = a * c - b * b;

    PairGeometry out;
    if (std::abs(denom) <= kParallelEps * a * c) {
        out.parallel = true;
        // Extent of q along p's parameterization.
        const double tau0 = -d / a;
        const double tau1 = (b - d) / a;
        const double lo = std::max(0.0, std::min(tau0, tau1));
        const double hi = std::min(1.0, std::max(tau0, tau1));
        if (lo <= hi) {
            // Overlapping extents: distance is the constant inter-line gap;
            // report the overlap midpoint on both segments.
            out.s = 0.5 * (lo + hi);
            out.t = clamp01((e + out.s * b) / c);
        } else {
            // Disjoint extents: the minimum sits on an endpoint of one
            // segment paired with its projection onto the other.
            const double cand[4][2] = {
                {0.0, clamp01(e / c)},
                {1.0, clamp01((e + b) / c)},
                {clamp01(-d / a), 0.0},
                {clamp01((b - d) / a), 1.0},
            };
            double best = std::numeric_limits<double>::infinity();
            for (const auto& st : cand) {
                const Vec3 pp = path_p.start + b1 * st[0];
                const Vec3 qq = path_q.start + b2 * st[1];
                const double dist = distance(pp, qq);
                if (dist < best) {
                    best = dist;
                    out.s = st[0];
                    out.t = st[1];
                }
            }
        }
    } else {
        const double s0 = (b * e - c * d) / denom;
        const double t0 = (a * e - b * d) / denom;
        if (s0 >= 0.0 && s0 <= 1.0 && t0 >= 0.0 && t0 <= 1.0) {
            // Interior optimum: keep the closed forms, which are exactly
            // symmetric under swapping the two paths.
            out.s = s0;
            out.t = t0;
        } else {
            double s = clamp01(s0);
            double t = (e + s * b) / c;
            if (t < 0.0) {
                t = 0.0;
                s = clamp01(-d / a);
            } else if (t > 1.0) {
                t = 1.0;
                s = clamp01((b - d) / a);
            }
            out.s = s;
            out.t = t;
        }
    }

    out.point_p = path_p.start + b1 * out.s;
    out.point_q = path_q.start + b2 * out.t;
    out.mu = distance(out.point_p, out.point_q);
    return out;
}

}  // namespace flockplan
