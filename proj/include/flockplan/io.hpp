#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flockplan/scenario.hpp"
#include "flockplan/verify.hpp"

namespace flockplan {

/// All serialized documents carry this schema_version and round-trip every
/// number bit-exactly (shortest round-trip float form).
inline constexpr int kSchemaVersion = 1;

std::string scenario_to_json(const Scenario& sc);

/// Parses and validates a scenario document: structural fields, one start and
/// one target per drone, positive motion limits, and pairwise spacing within
/// each endpoint set (skipped when min_spacing is 0, the escape hatch for
/// handcrafted layouts). Throws std::invalid_argument with a field-specific
/// message on any violation.
Scenario scenario_from_json(const std::string& text);

/// Planner output: the scheduling order (highest priority first) plus one
/// start delay per drone id.
struct ScheduleFile {
    std::vector<int> order;
    std::vector<double> delays;
};

std::string schedule_to_json(const ScheduleFile& s);
ScheduleFile schedule_from_json(const std::string& text);

/// One CSV row per run. Columns, in order: seed, n, delta, flock_time,
/// mean_delay, max_delay, overhead_time_pct, overhead_distance_pct,
/// calc_time, min_distance, collision_free.
std::string metrics_csv_header();
std::string metrics_csv_row(std::uint64_t seed, int n, double delta, const RunMetrics& m);

/// Fixed-point decimal with `precision` digits, locale-independent.
std::string format_fixed(double value, int precision);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace flockplan
