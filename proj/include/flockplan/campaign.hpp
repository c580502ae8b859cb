#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flockplan/delay_scheduler.hpp"
#include "flockplan/scenario.hpp"
#include "flockplan/verify.hpp"

namespace flockplan {

enum class RunStatus { Ok, Cycle, Blocked, GenFail };

const char* run_status_name(RunStatus s);

/// Outcome of one seeded run. `metrics` is meaningful only for Ok status;
/// calc_time covers table construction, cycle check, priority, and delay
/// assignment, never generation or verification.
struct RunRecord {
    std::uint64_t seed = 0;
    int n = 0;
    double delta = 0.0;
    RunStatus status = RunStatus::Ok;
    RunMetrics metrics;
};

/// A Monte Carlo sweep over drone counts with fixed replication count.
/// Replication r of every count uses seed base_seed + r.
struct CampaignSpec {
    std::vector<int> drone_counts;
    int replications = 200;
    double delta = 10.0;  // <= 0: per-count growth-law density(n)
    Vec3 cube_far_corner{200.0, 200.0, 200.0};
    std::uint64_t base_seed = 0;
    std::string output_dir = ".";
    KinematicLimits limits{};
    SafetyParams safety{};
    SearchParams search{};
    // When false, runs stop after the cycle check (for cycle-rate surveys at
    // large n where full delay assignment would dominate).
    bool schedule_runs = true;
    // When false, the independent checker is skipped; min distance is
    // reported as nan to mark the verdict as untested.
    bool verify_runs = true;
    double verify_radius = 0.0;  // <= 0: use safety.r_col
};

/// Sample mean with normal-approximation 95% half-width (1.96 * s / sqrt(k)).
/// Both are nan when no samples exist; the half-width alone is nan for a
/// single sample, rendered as "na" in tables.
struct MeanCi {
    double mean;
    double half_width;
};

struct GroupStats {
    int n = 0;
    double delta = 0.0;
    int replications = 0;
    int ok = 0;
    int cycles = 0;
    int blocked = 0;
    int gen_fail = 0;
    int collisions = 0;  // Ok runs the independent checker rejected
    double cycle_free_pct = 0.0;
    MeanCi flock_time{};
    MeanCi mean_delay{};
    MeanCi max_delay{};
    MeanCi overhead_time{};
    MeanCi overhead_distance{};
    MeanCi calc_time{};
    MeanCi min_distance{};
};

struct CampaignResult {
    std::vector<RunRecord> runs;     // grouped by count, seed order within
    std::vector<GroupStats> groups;  // one per drone count, in listed order
    std::string runs_csv;            // plot-ready long format, one row per run
    std::string summary_csv;         // one row per count
};

/// Generate, plan, and measure one seeded scenario. Failures are folded into
/// the record's status instead of escaping, except for programming errors.
RunRecord run_single(const CampaignSpec& spec, int n, std::uint64_t seed);

/// Per-count aggregation; Ok runs feed the statistics, every status feeds the
/// counters.
GroupStats summarize(int n, double delta, const std::vector<RunRecord>& group);

/// Execute the full sweep sequentially in seed order (aggregation only reads
/// per-run records, so a worker pool could slot in without changing results)
/// and render both CSVs deterministically: same spec and base_seed give
/// byte-identical strings.
CampaignResult run_campaign(const CampaignSpec& spec);

/// Human-readable fixed-width summary for terminal output.
std::string render_summary_table(const CampaignResult& result);

}  // namespace flockplan
