#include "flockplan/collision_model.hpp"

#include <stdexcept>

namespace flockplan {

namespace {

// Slack for deciding whether a clamped parameter sits exactly on 0 or 1.
// The split is diagnostic (both sides of each split carry the same
// constraint semantics), so the tolerance only buys robustness.
constexpr double kBoundaryTol = 1e-9;

void validate(const SafetyParams& params) {
    if (params.r_col <= 0.0) throw std::invalid_argument("safety params: r_col must be positive");
    if (params.sf <= 1.0) throw std::invalid_argument("safety params: sf must exceed 1");
    if (params.lambda <= 0.0 || params.lambda >= 1.0)
        throw std::invalid_argument("safety params: lambda must lie inside (0,1)");
}

// Constraint entry for one ordered pair. masked = closest fraction already
// zeroed for pairs that never breach the threshold.
double constraint_entry(const PairGeometry& pg, const EndpointDistances& ed, double masked,
                        const SafetyParams& params) {
    const double thr = params.threshold();
    if (pg.mu > thr) return 0.0;
    // The row drone's parked target, or the column drone's parked start,
    // inside the corridor can never be resolved by a finite delay of the
    // row drone alone: it must move after the column drone is done.
    if (ed.p_target_to_q <= thr || ed.q_start_to_p <= thr) return 1.0;
    // Row drone parked on its start inside the corridor with the closest
    // approach exactly there: mark softly so the pair still constrains the
    // ordering even though the masked fraction is zero.
    if (ed.p_start_to_q <= thr && pg.s <= kBoundaryTol) return params.lambda;
    return masked;
}

}  // namespace

PairClass classify_pair(const PairGeometry& pg, const EndpointDistances& ed,
                        const SafetyParams& params) {
    const double thr = params.threshold();
    if (pg.mu > thr) return pg.parallel ? PairClass::ParallelClear : PairClass::SkewClear;
    const bool start_in = ed.p_start_to_q <= thr;
    const bool target_in = ed.p_target_to_q <= thr;
    // Point-to-segment distance is convex along the path, so both endpoints
    // inside the corridor put the whole path inside it. Such a pair is not an
    // error: the endpoint rules below make it mutually hard-constrained, so
    // it surfaces as a two-drone dependency cycle.
    if (start_in && target_in) return PairClass::ParallelBlocked;
    if (target_in) return pg.s >= 1.0 - kBoundaryTol ? PairClass::TargetParked
                                                     : PairClass::TargetExposed;
    if (start_in) return pg.s <= kBoundaryTol ? PairClass::StartParked
                                              : PairClass::StartExposed;
    return PairClass::Crossing;
}

CollisionTables build_tables(const std::vector<DronePath>& paths, const SafetyParams& params) {
    validate(params);
    const int n = static_cast<int>(paths.size());
    if (n < 1) throw std::invalid_argument("build_tables: need at least one path");

    CollisionTables t;
    t.n = n;
    t.min_dist = Grid<double>(n);
    t.may_collide = Grid<int>(n);
    t.closest_frac = Grid<double>(n);
    t.masked_frac = Grid<double>(n);
    t.constraint = Grid<double>(n);
    t.config = Grid<PairClass>(n);

    const double thr = params.threshold();
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const PairGeometry g_pq = closest_approach(paths[p], paths[q]);
            PairGeometry g_qp = g_pq;
            std::swap(g_qp.s, g_qp.t);
            std::swap(g_qp.point_p, g_qp.point_q);

            const double p_start_to_q =
                point_segment_distance(paths[p].start, paths[q].start, paths[q].target);
            const double p_target_to_q =
                point_segment_distance(paths[p].target, paths[q].start, paths[q].target);
            const double q_start_to_p =
                point_segment_distance(paths[q].start, paths[p].start, paths[p].target);
            const double q_target_to_p =
                point_segment_distance(paths[q].target, paths[p].start, paths[p].target);
            const EndpointDistances ed_pq{p_start_to_q, p_target_to_q, q_start_to_p};
            const EndpointDistances ed_qp{q_start_to_p, q_target_to_p, p_start_to_q};

            const int pb = g_pq.mu <= thr ? 1 : 0;
            t.min_dist(p, q) = t.min_dist(q, p) = g_pq.mu;
            t.may_collide(p, q) = t.may_collide(q, p) = pb;
            t.closest_frac(p, q) = g_pq.s;
            t.closest_frac(q, p) = g_pq.t;
            t.masked_frac(p, q) = g_pq.s * pb;
            t.masked_frac(q, p) = g_pq.t * pb;

            t.config(p, q) = classify_pair(g_pq, ed_pq, params);
            t.config(q, p) = classify_pair(g_qp, ed_qp, params);

            t.constraint(p, q) = constraint_entry(g_pq, ed_pq, t.masked_frac(p, q), params);
            t.constraint(q, p) = constraint_entry(g_qp, ed_qp, t.masked_frac(q, p), params);
        }
    }
    return t;
}

}  // namespace flockplan
