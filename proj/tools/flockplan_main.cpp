// Command-line front end: scenario generation, single-run planning and
// checking, Monte Carlo campaigns, and diagnostic table dumps.
//
// Exit codes: 0 success; 1 collision found by `verify`; 2 validation or
// usage error; 3 priority cycle; 4 blocked pair; 5 generation failure.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flockplan/campaign.hpp"
#include "flockplan/collision_model.hpp"
#include "flockplan/delay_scheduler.hpp"
#include "flockplan/errors.hpp"
#include "flockplan/io.hpp"
#include "flockplan/priority.hpp"
#include "flockplan/scenario.hpp"
#include "flockplan/verify.hpp"

namespace {

using nlohmann::json;
using namespace flockplan;

constexpr int kExitOk = 0;
constexpr int kExitCollision = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCycle = 3;
constexpr int kExitBlocked = 4;
constexpr int kExitGeneration = 5;

const std::vector<std::string> kConfigKeys = {
    "n",           "delta",       "min_spacing", "cube_far_corner", "seed",
    "accel",       "v_max",       "decel",       "r_col",           "sf",
    "lambda",      "spacing_rule", "dt_step",    "t_sample",        "expansion_cap",
    "refine_tol",  "counts",      "replications", "base_seed",      "output_dir",
    "resolution",  "radius"};

// Values shared by several verbs, initialized from built-in defaults, then the
// JSON config file (if any), then command-line flags.
struct Options {
    int n = 1;
    double delta = 10.0;
    bool auto_delta = false;
    double min_spacing = 2.0;
    std::vector<double> far = {200.0, 200.0, 200.0};
    std::uint64_t seed = 0;
    KinematicLimits limits{};
    SafetyParams safety{};
    std::string spacing_rule = "euclidean";
    SearchParams search{};
    std::vector<int> counts;
    int replications = 200;
    std::uint64_t base_seed = 0;
    std::string output_dir = ".";
    double resolution = 1e-3;
    double radius = 0.0;  // <= 0: scenario's r_col
};

json load_config_json(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config file: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config file: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const std::string& k : kConfigKeys) known = known || k == key;
        if (!known) throw std::invalid_argument("config file: unknown key '" + key + "'");
    }
    return j;
}

template <class T>
void cfg_get(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void apply_config_file(const json& j, Options& o) {
    cfg_get(j, "n", o.n);
    if (j.contains("delta")) {
        if (j["delta"].is_string() && j["delta"].get<std::string>() == "auto")
            o.auto_delta = true;
        else
            o.delta = j["delta"].get<double>();
    }
    cfg_get(j, "min_spacing", o.min_spacing);
    if (j.contains("cube_far_corner")) {
        o.far = j["cube_far_corner"].get<std::vector<double>>();
        if (o.far.size() != 3)
            throw std::invalid_argument("config file: cube_far_corner needs three values");
    }
    cfg_get(j, "seed", o.seed);
    cfg_get(j, "accel", o.limits.accel);
    cfg_get(j, "v_max", o.limits.v_max);
    cfg_get(j, "decel", o.limits.decel);
    cfg_get(j, "r_col", o.safety.r_col);
    cfg_get(j, "sf", o.safety.sf);
    cfg_get(j, "lambda", o.safety.lambda);
    cfg_get(j, "spacing_rule", o.spacing_rule);
    cfg_get(j, "dt_step", o.search.dt_step);
    cfg_get(j, "t_sample", o.search.t_sample);
    cfg_get(j, "expansion_cap", o.search.expansion_cap);
    cfg_get(j, "refine_tol", o.search.refine_tol);
    cfg_get(j, "counts", o.counts);
    cfg_get(j, "replications", o.replications);
    cfg_get(j, "base_seed", o.base_seed);
    cfg_get(j, "output_dir", o.output_dir);
    cfg_get(j, "resolution", o.resolution);
    cfg_get(j, "radius", o.radius);
}

SpacingRule parse_rule(const std::string& name) {
    if (name == "euclidean") return SpacingRule::Euclidean;
    if (name == "grid_neighbors") return SpacingRule::GridNeighbors;
    throw std::invalid_argument("spacing rule must be 'euclidean' or 'grid_neighbors'");
}

ScenarioConfig to_scenario_config(const Options& o) {
    ScenarioConfig cfg;
    cfg.n = o.n;
    cfg.delta = o.auto_delta ? 0.0 : o.delta;
    cfg.min_spacing = o.min_spacing;
    cfg.cube_far_corner = Vec3{o.far[0], o.far[1], o.far[2]};
    cfg.seed = o.seed;
    cfg.limits = o.limits;
    cfg.safety = o.safety;
    cfg.spacing_rule = parse_rule(o.spacing_rule);
    return cfg;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content;
    else
        write_text_file(out_path, content);
}

// Log stream that stays out of the way when documents go to stdout.
std::ostream& info(const std::string& out_path) {
    return (out_path.empty() || out_path == "-") ? std::cerr : std::cout;
}

int do_generate(const Options& o, const std::string& out_path) {
    try {
        const Scenario sc = generate(to_scenario_config(o));
        emit(out_path, scenario_to_json(sc));
        info(out_path) << "generated " << sc.paths.size() << " paths (square side "
                       << square_side(sc.config.n, sc.config.resolved_delta()) << " m, cube side "
                       << cube_side(sc.config.n, sc.config.resolved_delta()) << " m)\n";
        return kExitOk;
    } catch (const GenerationError& e) {
        std::cerr << "error: generation-failed: " << e.what() << "\n";
        return kExitGeneration;
    }
}

void append_metrics_row(const std::string& path, std::uint64_t seed, int n, double delta,
                        const RunMetrics& m) {
    const bool fresh = !std::filesystem::exists(path);
    std::string chunk;
    if (fresh) chunk += metrics_csv_header() + "\n";
    chunk += metrics_csv_row(seed, n, delta, m) + "\n";
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open for append: " + path);
    out << chunk;
}

int do_schedule(const Options& o, const std::string& scenario_path, const std::string& out_path,
                const std::string& metrics_path, bool run_checker) {
    const Scenario sc = scenario_from_json(read_text_file(scenario_path));
    const auto t0 = std::chrono::steady_clock::now();
    const CollisionTables tables = build_tables(sc.paths, sc.config.safety);
    const CycleReport cycles = detect_cycle(tables);
    if (!cycles.empty()) {
        std::cerr << "error: cycle-detected: " << cycles.cycles.size()
                  << " dependency cycle(s); first:";
        for (int id : cycles.cycles.front()) std::cerr << " " << id;
        std::cerr << "\n";
        return kExitCycle;
    }
    const PriorityVector pv = compute_priority(tables);
    Schedule schedule;
    try {
        schedule = schedule_all(sc.paths, tables, pv, sc.config.safety, o.search);
    } catch (const BlockedPairError& e) {
        std::cerr << "error: blocked-pair: drones " << e.drone_p << " and " << e.drone_q << ": "
                  << e.what() << "\n";
        return kExitBlocked;
    }
    const double calc_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ScheduleFile out;
    out.order = schedule.pv.order;
    out.delays = schedule.delays;
    emit(out_path, schedule_to_json(out));

    RunMetrics m;
    if (run_checker) {
        const double radius = o.radius > 0.0 ? o.radius : sc.config.safety.r_col;
        m = compute_metrics(sc.paths, schedule.delays, radius, calc_time, o.resolution);
    } else {
        m.flock_time = flock_time(sc.paths, schedule.delays);
        double sum = 0.0;
        for (double d : schedule.delays) {
            sum += d;
            m.max_delay = std::max(m.max_delay, d);
        }
        m.mean_delay = schedule.delays.empty() ? 0.0 : sum / schedule.delays.size();
        const Overheads oh = overheads(sc.paths, schedule.delays);
        m.overhead_time_pct = oh.time_pct;
        m.overhead_distance_pct = oh.distance_pct;
        m.calc_time = calc_time;
        m.min_observed_pair_distance = std::numeric_limits<double>::quiet_NaN();
    }
    if (!metrics_path.empty())
        append_metrics_row(metrics_path, sc.config.seed, sc.config.n, sc.config.resolved_delta(),
                           m);
    info(out_path) << "scheduled " << sc.paths.size() << " drones: flock time "
                   << format_fixed(m.flock_time, 3) << " s, max delay "
                   << format_fixed(m.max_delay, 3) << " s, calc "
                   << format_fixed(m.calc_time, 4) << " s"
                   << (run_checker ? (m.collision_free ? ", checker: clear" : ", checker: COLLISION")
                                   : ", checker: skipped")
                   << "\n";
    if (run_checker && !m.collision_free) return kExitCollision;
    return kExitOk;
}

int do_verify(const Options& o, const std::string& scenario_path,
              const std::string& schedule_path) {
    const Scenario sc = scenario_from_json(read_text_file(scenario_path));
    const ScheduleFile sf = schedule_from_json(read_text_file(schedule_path));
    if (sf.delays.size() != sc.paths.size())
        throw std::invalid_argument("verify: schedule drone count does not match the scenario");
    const double radius = o.radius > 0.0 ? o.radius : sc.config.safety.r_col;
    const VerifyResult r = verify(sc.paths, sf.delays, radius, o.resolution);
    std::cout << "radius " << format_fixed(radius, 3) << " m, min distance "
              << format_fixed(r.min_distance, 6) << " m: "
              << (r.collision_free ? "collision-free" : "COLLISION") << "\n";
    if (!r.collision_free) {
        std::cout << "first violation: drones " << r.first_violation->drone_a << " and "
                  << r.first_violation->drone_b << " at t="
                  << format_fixed(r.first_violation->time, 4) << " s (gap "
                  << format_fixed(r.first_violation->distance, 4) << " m)\n";
        return kExitCollision;
    }
    return kExitOk;
}

int do_campaign(const Options& o, bool cycle_scan, bool no_verify) {
    CampaignSpec spec;
    spec.drone_counts = o.counts;
    spec.replications = o.replications;
    spec.delta = o.auto_delta ? 0.0 : o.delta;
    spec.cube_far_corner = Vec3{o.far[0], o.far[1], o.far[2]};
    spec.base_seed = o.base_seed;
    spec.output_dir = o.output_dir;
    spec.limits = o.limits;
    spec.safety = o.safety;
    spec.search = o.search;
    spec.schedule_runs = !cycle_scan;
    spec.verify_runs = !no_verify && !cycle_scan;
    spec.verify_radius = o.radius;

    const CampaignResult result = run_campaign(spec);
    std::filesystem::create_directories(spec.output_dir);
    const auto dir = std::filesystem::path(spec.output_dir);
    write_text_file((dir / "runs.csv").string(), result.runs_csv);
    write_text_file((dir / "summary.csv").string(), result.summary_csv);
    std::cout << render_summary_table(result);
    std::cout << "wrote " << (dir / "runs.csv").string() << " and "
              << (dir / "summary.csv").string() << "\n";
    return kExitOk;
}

int do_dump(const std::string& scenario_path, const std::string& out_path) {
    const Scenario sc = scenario_from_json(read_text_file(scenario_path));
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = sc.config.n;
    j["threshold"] = sc.config.safety.threshold();
    const CollisionTables t = build_tables(sc.paths, sc.config.safety);
    auto grid_to_json = [&](const auto& grid) {
        json rows = json::array();
        for (int i = 0; i < sc.config.n; ++i) {
            json row = json::array();
            for (int k = 0; k < sc.config.n; ++k) row.push_back(grid(i, k));
            rows.push_back(row);
        }
        return rows;
    };
    j["min_dist"] = grid_to_json(t.min_dist);
    j["may_collide"] = grid_to_json(t.may_collide);
    j["closest_frac"] = grid_to_json(t.closest_frac);
    j["masked_frac"] = grid_to_json(t.masked_frac);
    j["constraint"] = grid_to_json(t.constraint);
    {
        json rows = json::array();
        for (int i = 0; i < sc.config.n; ++i) {
            json row = json::array();
            for (int k = 0; k < sc.config.n; ++k) row.push_back(static_cast<int>(t.config(i, k)));
            rows.push_back(row);
        }
        j["config"] = rows;
    }
    const CycleReport cycles = detect_cycle(t);
    j["cycles"] = json::array();
    for (const auto& cyc : cycles.cycles) j["cycles"].push_back(cyc);
    if (cycles.empty()) {
        std::vector<PriorityRound> trace;
        const PriorityVector pv = compute_priority(t, 0.5, &trace);
        j["priority_order"] = pv.order;
        json rounds = json::array();
        for (const PriorityRound& r : trace) {
            const char* reason = "unconstrained";
            if (r.reason == PickReason::MostSoft) reason = "most_soft";
            if (r.reason == PickReason::SmallestMax) reason = "smallest_max";
            if (r.reason == PickReason::SmallestIndex) reason = "smallest_index";
            rounds.push_back({{"round", r.round},
                              {"drone", r.drone},
                              {"reason", reason},
                              {"soft_count", r.soft_count},
                              {"row_max", r.row_max}});
        }
        j["priority_rounds"] = rounds;
    } else {
        j["priority_order"] = nullptr;
    }
    emit(out_path, j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"straight-path flock scheduler: priority ordering plus start delays"};
    app.require_subcommand(1);

    Options opt;
    std::string config_file;
    std::string scenario_path, schedule_path, out_path, metrics_path;
    bool no_verify = false, cycle_scan = false;

    // The config file must be applied before flag parsing so flags win.
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_file = argv[i + 1];
    if (!config_file.empty()) {
        try {
            apply_config_file(load_config_json(config_file), opt);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitValidation;
        }
    }
    if (const char* env_dir = std::getenv("FLOCKPLAN_OUTPUT_DIR"))
        if (*env_dir) opt.output_dir = env_dir;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_file, "JSON config file; flags override its values");
    };
    auto add_scenario_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n", opt.n, "drone count");
        cmd->add_option("--delta", opt.delta, "area density factor (m^2 per drone)");
        cmd->add_flag("--auto-delta", opt.auto_delta, "use the growth-law density for n");
        cmd->add_option("--min-spacing", opt.min_spacing, "pairwise endpoint spacing (m)");
        cmd->add_option("--far", opt.far, "target cube far corner x y z")->expected(3);
        cmd->add_option("--seed", opt.seed, "RNG seed");
        cmd->add_option("--accel", opt.limits.accel, "acceleration (m/s^2)");
        cmd->add_option("--v-max", opt.limits.v_max, "cruise speed cap (m/s)");
        cmd->add_option("--decel", opt.limits.decel, "deceleration (m/s^2)");
        cmd->add_option("--r-col", opt.safety.r_col, "collision radius (m)");
        cmd->add_option("--sf", opt.safety.sf, "safety factor on the radius");
        cmd->add_option("--lambda", opt.safety.lambda, "soft-constraint marker in (0,1)");
        cmd->add_option("--spacing-rule", opt.spacing_rule, "euclidean | grid_neighbors");
    };
    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--dt-step", opt.search.dt_step, "delay search step (s)");
        cmd->add_option("--t-sample", opt.search.t_sample, "clearance sampling step (s)");
        cmd->add_option("--expansion-cap", opt.search.expansion_cap,
                        "max bound-expansion factor for the delay search");
        cmd->add_option("--refine-tol", opt.search.refine_tol, "dip refinement tolerance (s)");
    };

    CLI::App* gen = app.add_subcommand("generate", "create a random scenario file");
    add_common(gen);
    add_scenario_flags(gen);
    gen->add_option("--out", out_path, "output path ('-' or empty: stdout)");

    CLI::App* sch = app.add_subcommand("schedule", "plan delays for a scenario file");
    add_common(sch);
    add_search_flags(sch);
    sch->add_option("--scenario", scenario_path, "scenario JSON path")->required();
    sch->add_option("--out", out_path, "schedule output path ('-' or empty: stdout)");
    sch->add_option("--metrics-out", metrics_path, "append a metrics CSV row here");
    sch->add_flag("--no-verify", no_verify, "skip the independent checker");
    sch->add_option("--radius", opt.radius, "checker radius (m; default scenario r_col)");
    sch->add_option("--resolution", opt.resolution, "checker sampling step (s)");

    CLI::App* ver = app.add_subcommand("verify", "check a schedule against a scenario");
    add_common(ver);
    ver->add_option("--scenario", scenario_path, "scenario JSON path")->required();
    ver->add_option("--schedule", schedule_path, "schedule JSON path")->required();
    ver->add_option("--radius", opt.radius, "separation radius (m; default scenario r_col)");
    ver->add_option("--resolution", opt.resolution, "sampling step (s)");

    CLI::App* camp = app.add_subcommand("campaign", "seeded Monte Carlo sweep over drone counts");
    add_common(camp);
    add_scenario_flags(camp);
    add_search_flags(camp);
    camp->add_option("--counts", opt.counts, "drone counts to sweep")->required()->expected(-1);
    camp->add_option("--reps", opt.replications, "replications per count");
    camp->add_option("--base-seed", opt.base_seed, "seed of replication 0");
    camp->add_option("--out-dir", opt.output_dir,
                     "directory for runs.csv and summary.csv (env FLOCKPLAN_OUTPUT_DIR overrides "
                     "the default)");
    camp->add_flag("--no-verify", no_verify, "skip the independent checker");
    camp->add_flag("--cycle-scan", cycle_scan, "stop each run after cycle detection");
    camp->add_option("--radius", opt.radius, "checker radius (m; default r_col)");

    CLI::App* dump = app.add_subcommand("dump-matrices", "write all pairwise tables as JSON");
    add_common(dump);
    dump->add_option("--scenario", scenario_path, "scenario JSON path")->required();
    dump->add_option("--out", out_path, "output path ('-' or empty: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*gen) return do_generate(opt, out_path);
        if (*sch) return do_schedule(opt, scenario_path, out_path, metrics_path, !no_verify);
        if (*ver) return do_verify(opt, scenario_path, schedule_path);
        if (*camp) return do_campaign(opt, cycle_scan, no_verify);
        if (*dump) return do_dump(scenario_path, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const GenerationError& e) {
        std::cerr << "error: generation-failed: " << e.what() << "\n";
        return kExitGeneration;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
