#include "flockplan/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "flockplan/collision_model.hpp"
#include "flockplan/errors.hpp"
#include "flockplan/io.hpp"
#include "flockplan/priority.hpp"

namespace flockplan {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MeanCi mean_ci(const std::vector<double>& xs) {
    MeanCi out{kNan, kNan};
    const std::size_t k = xs.size();
    if (k == 0) return out;
    double sum = 0.0;
    for (double x : xs) sum += x;
    out.mean = sum / static_cast<double>(k);
    if (k < 2) return out;
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    const double s = std::sqrt(ss / static_cast<double>(k - 1));
    out.half_width = 1.96 * s / std::sqrt(static_cast<double>(k));
    return out;
}

std::string ci_or_na(double v, int precision) {
    return std::isnan(v) ? std::string("na") : format_fixed(v, precision);
}

std::string run_row(const RunRecord& r) {
    std::ostringstream row;
    if (r.status == RunStatus::Ok) {
        row << metrics_csv_row(r.seed, r.n, r.delta, r.metrics);
    } else {
        row << r.seed << ',' << r.n << ',' << format_fixed(r.delta, 4)
            << ",nan,nan,nan,nan,nan,nan,nan,0";
    }
    row << ',' << run_status_name(r.status);
    return row.str();
}

}  // namespace

const char* run_status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Ok: return "ok";
        case RunStatus::Cycle: return "cycle";
        case RunStatus::Blocked: return "blocked";
        case RunStatus::GenFail: return "gen_fail";
    }
    return "unknown";
}

RunRecord run_single(const CampaignSpec& spec, int n, std::uint64_t seed) {
    RunRecord rec;
    rec.seed = seed;
    rec.n = n;
    rec.delta = spec.delta > 0.0 ? spec.delta : density(n);
    rec.metrics.min_observed_pair_distance = kNan;  // until the checker runs

    ScenarioConfig cfg;
    cfg.n = n;
    cfg.delta = rec.delta;
    cfg.cube_far_corner = spec.cube_far_corner;
    cfg.seed = seed;
    cfg.limits = spec.limits;
    cfg.safety = spec.safety;

    Scenario sc;
    try {
        sc = generate(cfg);
    } catch (const GenerationError&) {
        rec.status = RunStatus::GenFail;
        return rec;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const CollisionTables tables = build_tables(sc.paths, spec.safety);
    if (!detect_cycle(tables).empty()) {
        rec.status = RunStatus::Cycle;
        rec.metrics.calc_time = seconds_since(t0);
        return rec;
    }
    if (!spec.schedule_runs) {
        rec.metrics.calc_time = seconds_since(t0);
        return rec;
    }

    const PriorityVector pv = compute_priority(tables);
    Schedule schedule;
    try {
        schedule = schedule_all(sc.paths, tables, pv, spec.safety, spec.search);
    } catch (const BlockedPairError&) {
        rec.status = RunStatus::Blocked;
        rec.metrics.calc_time = seconds_since(t0);
        return rec;
    }
    rec.metrics.calc_time = seconds_since(t0);

    rec.metrics.flock_time = flock_time(sc.paths, schedule.delays);
    double sum = 0.0, mx = 0.0;
    for (double d : schedule.delays) {
        sum += d;
        mx = std::max(mx, d);
    }
    rec.metrics.mean_delay = schedule.delays.empty() ? 0.0 : sum / schedule.delays.size();
    rec.metrics.max_delay = mx;
    const Overheads oh = overheads(sc.paths, schedule.delays);
    rec.metrics.overhead_time_pct = oh.time_pct;
    rec.metrics.overhead_distance_pct = oh.distance_pct;
    if (spec.verify_runs) {
        const double radius = spec.verify_radius > 0.0 ? spec.verify_radius : spec.safety.r_col;
        const VerifyResult vr = verify(sc.paths, schedule.delays, radius);
        rec.metrics.min_observed_pair_distance = vr.min_distance;
        rec.metrics.collision_free = vr.collision_free;
    }
    return rec;
}

GroupStats summarize(int n, double delta, const std::vector<RunRecord>& group) {
    GroupStats g;
    g.n = n;
    g.delta = delta;
    g.replications = static_cast<int>(group.size());
    std::vector<double> flock, mean_d, max_d, t_oh, d_oh, calc, min_d;
    for (const RunRecord& r : group) {
        switch (r.status) {
            case RunStatus::Ok: ++g.ok; break;
            case RunStatus::Cycle: ++g.cycles; break;
            case RunStatus::Blocked: ++g.blocked; break;
            case RunStatus::GenFail: ++g.gen_fail; break;
        }
        if (r.status != RunStatus::Ok) continue;
        if (!r.metrics.collision_free) ++g.collisions;
        flock.push_back(r.metrics.flock_time);
        mean_d.push_back(r.metrics.mean_delay);
        max_d.push_back(r.metrics.max_delay);
        t_oh.push_back(r.metrics.overhead_time_pct);
        d_oh.push_back(r.metrics.overhead_distance_pct);
        calc.push_back(r.metrics.calc_time);
        if (!std::isnan(r.metrics.min_observed_pair_distance))
            min_d.push_back(r.metrics.min_observed_pair_distance);
    }
    if (g.replications > 0)
        g.cycle_free_pct = 100.0 * (g.replications - g.cycles) / g.replications;
    g.flock_time = mean_ci(flock);
    g.mean_delay = mean_ci(mean_d);
    g.max_delay = mean_ci(max_d);
    g.overhead_time = mean_ci(t_oh);
    g.overhead_distance = mean_ci(d_oh);
    g.calc_time = mean_ci(calc);
    g.min_distance = mean_ci(min_d);
    return g;
}

CampaignResult run_campaign(const CampaignSpec& spec) {
    if (spec.drone_counts.empty())
        throw std::invalid_argument("campaign: drone_counts must be non-empty");
    if (spec.replications < 1)
        throw std::invalid_argument("campaign: replications must be >= 1");

    CampaignResult result;
    std::ostringstream runs_csv;
    runs_csv << metrics_csv_header() << ",status\n";
    for (int n : spec.drone_counts) {
        std::vector<RunRecord> group;
        group.reserve(static_cast<std::size_t>(spec.replications));
        for (int r = 0; r < spec.replications; ++r) {
            RunRecord rec = run_single(spec, n, spec.base_seed + static_cast<std::uint64_t>(r));
            runs_csv << run_row(rec) << '\n';
            group.push_back(rec);
        }
        const double delta = spec.delta > 0.0 ? spec.delta : density(n);
        result.groups.push_back(summarize(n, delta, group));
        for (RunRecord& rec : group) result.runs.push_back(std::move(rec));
    }
    result.runs_csv = runs_csv.str();

    std::ostringstream summary;
    summary << "n,delta,replications,ok,cycles,blocked,gen_fail,collisions,"
               "cycle_free_pct,flock_time_mean,flock_time_ci,mean_delay_mean,mean_delay_ci,"
               "max_delay_mean,max_delay_ci,overhead_time_mean,overhead_time_ci,"
               "overhead_distance_mean,overhead_distance_ci,calc_time_mean,calc_time_ci,"
               "min_distance_mean,min_distance_ci\n";
    for (const GroupStats& g : result.groups) {
        summary << g.n << ',' << format_fixed(g.delta, 4) << ',' << g.replications << ',' << g.ok
                << ',' << g.cycles << ',' << g.blocked << ',' << g.gen_fail
                << ',' << g.collisions << ',' << format_fixed(g.cycle_free_pct, 2) << ','
                << ci_or_na(g.flock_time.mean, 6) << ',' << ci_or_na(g.flock_time.half_width, 6)
                << ',' << ci_or_na(g.mean_delay.mean, 6) << ','
                << ci_or_na(g.mean_delay.half_width, 6) << ',' << ci_or_na(g.max_delay.mean, 6)
                << ',' << ci_or_na(g.max_delay.half_width, 6) << ','
                << ci_or_na(g.overhead_time.mean, 3) << ','
                << ci_or_na(g.overhead_time.half_width, 3) << ','
                << ci_or_na(g.overhead_distance.mean, 3) << ','
                << ci_or_na(g.overhead_distance.half_width, 3) << ','
                << ci_or_na(g.calc_time.mean, 6) << ',' << ci_or_na(g.calc_time.half_width, 6)
                << ',' << ci_or_na(g.min_distance.mean, 6) << ','
                << ci_or_na(g.min_distance.half_width, 6) << '\n';
    }
    result.summary_csv = summary.str();
    return result;
}

std::string render_summary_table(const CampaignResult& result) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "n" << std::setw(10) << "delta" << std::setw(6) << "reps"
        << std::setw(6) << "ok" << std::setw(12) << "cycle-free%" << std::setw(22)
        << "flock_time (s)" << std::setw(22) << "avg_delay (s)" << std::setw(22)
        << "max_delay (s)" << std::setw(20) << "T_OH (%)" << std::setw(12) << "D_OH (%)"
        << std::setw(18) << "calc_time (s)" << '\n';
    auto cell = [](const MeanCi& m, int prec) {
        if (std::isnan(m.mean)) return std::string("na");
        std::string s = format_fixed(m.mean, prec);
        s += " +/- ";
        s += std::isnan(m.half_width) ? "na" : format_fixed(m.half_width, prec);
        return s;
    };
    for (const GroupStats& g : result.groups) {
        out << std::left << std::setw(6) << g.n << std::setw(10) << format_fixed(g.delta, 4)
            << std::setw(6) << g.replications << std::setw(6) << g.ok << std::setw(12)
            << format_fixed(g.cycle_free_pct, 2) << std::setw(22) << cell(g.flock_time, 3)
            << std::setw(22) << cell(g.mean_delay, 3) << std::setw(22) << cell(g.max_delay, 3)
            << std::setw(20) << cell(g.overhead_time, 3) << std::setw(12)
            << (std::isnan(g.overhead_distance.mean) ? std::string("na")
                                                     : format_fixed(g.overhead_distance.mean, 3))
            << std::setw(18) << cell(g.calc_time, 4) << '\n';
    }
    return out.str();
}

}  // namespace flockplan
