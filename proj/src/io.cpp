#include "flockplan/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace flockplan {

namespace {

using nlohmann::json;

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument(std::string(field) + ": expected [x, y, z]");
    Vec3 v{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
        throw std::invalid_argument(std::string(field) + ": coordinates must be finite");
    return v;
}

void require_version(const json& j, const char* what) {
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        j["schema_version"].get<int>() != kSchemaVersion)
        throw std::invalid_argument(std::string(what) + ": unsupported or missing schema_version");
}

const char* rule_name(SpacingRule r) {
    return r == SpacingRule::Euclidean ? "euclidean" : "grid_neighbors";
}

SpacingRule rule_from_name(const std::string& name) {
    if (name == "euclidean") return SpacingRule::Euclidean;
    if (name == "grid_neighbors") return SpacingRule::GridNeighbors;
    throw std::invalid_argument("config.spacing_rule: unknown value '" + name + "'");
}

void check_spacing(const std::vector<Vec3>& pts, double min_spacing, const char* what) {
    if (min_spacing <= 0.0) return;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (distance(pts[i], pts[j]) < min_spacing - 1e-9)
                throw std::invalid_argument(std::string(what) + ": points " + std::to_string(i) +
                                            " and " + std::to_string(j) +
                                            " violate the minimum spacing");
}

}  // namespace

std::string scenario_to_json(const Scenario& sc) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json cfg;
    cfg["n"] = sc.config.n;
    cfg["delta"] = sc.config.delta;
    cfg["min_spacing"] = sc.config.min_spacing;
    cfg["cube_far_corner"] = vec_to_json(sc.config.cube_far_corner);
    cfg["seed"] = sc.config.seed;
    cfg["limits"] = {{"accel", sc.config.limits.accel},
                     {"v_max", sc.config.limits.v_max},
                     {"decel", sc.config.limits.decel}};
    cfg["safety"] = {{"r_col", sc.config.safety.r_col},
                     {"sf", sc.config.safety.sf},
                     {"lambda", sc.config.safety.lambda}};
    cfg["spacing_rule"] = rule_name(sc.config.spacing_rule);
    j["config"] = cfg;
    json starts = json::array();
    json targets = json::array();
    for (const DronePath& p : sc.paths) {
        starts.push_back(vec_to_json(p.start));
        targets.push_back(vec_to_json(p.target));
    }
    j["starts"] = starts;
    j["targets"] = targets;
    return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("scenario: not valid JSON: ") + e.what());
    }
    try {
        require_version(j, "scenario");
        if (!j.contains("config")) throw std::invalid_argument("scenario: missing config");
        const json& cfg = j["config"];
        ScenarioConfig config;
        config.n = cfg.at("n").get<int>();
        if (config.n < 1) throw std::invalid_argument("config.n: must be >= 1");
        config.delta = cfg.at("delta").get<double>();
        config.min_spacing = cfg.at("min_spacing").get<double>();
        if (config.min_spacing < 0.0)
            throw std::invalid_argument("config.min_spacing: must be >= 0");
        config.cube_far_corner = vec_from_json(cfg.at("cube_far_corner"), "config.cube_far_corner");
        config.seed = cfg.at("seed").get<std::uint64_t>();
        const json& lim = cfg.at("limits");
        config.limits.accel = lim.at("accel").get<double>();
        config.limits.v_max = lim.at("v_max").get<double>();
        config.limits.decel = lim.at("decel").get<double>();
        if (!(config.limits.accel > 0.0) || !(config.limits.v_max > 0.0) ||
            !(config.limits.decel > 0.0))
            throw std::invalid_argument("config.limits: all values must be positive");
        const json& saf = cfg.at("safety");
        config.safety.r_col = saf.at("r_col").get<double>();
        config.safety.sf = saf.at("sf").get<double>();
        config.safety.lambda = saf.at("lambda").get<double>();
        if (!(config.safety.r_col > 0.0) || !(config.safety.sf > 0.0))
            throw std::invalid_argument("config.safety: r_col and sf must be positive");
        if (!(config.safety.lambda > 0.0) || !(config.safety.lambda < 1.0))
            throw std::invalid_argument("config.safety: lambda must lie in (0, 1)");
        config.spacing_rule = rule_from_name(cfg.value("spacing_rule", "euclidean"));

        const json& starts = j.at("starts");
        const json& targets = j.at("targets");
        if (!starts.is_array() || static_cast<int>(starts.size()) != config.n)
            throw std::invalid_argument("starts: expected one entry per drone");
        if (!targets.is_array() || static_cast<int>(targets.size()) != config.n)
            throw std::invalid_argument("targets: expected one entry per drone");
        std::vector<Vec3> s, t;
        for (int i = 0; i < config.n; ++i) {
            s.push_back(vec_from_json(starts[static_cast<std::size_t>(i)], "starts"));
            t.push_back(vec_from_json(targets[static_cast<std::size_t>(i)], "targets"));
        }
        check_spacing(s, config.min_spacing, "starts");
        check_spacing(t, config.min_spacing, "targets");

        Scenario sc;
        sc.config = config;
        for (int i = 0; i < config.n; ++i)
            sc.paths.push_back(DronePath{s[static_cast<std::size_t>(i)],
                                         t[static_cast<std::size_t>(i)], config.limits});
        return sc;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("scenario: malformed document: ") + e.what());
    }
}

std::string schedule_to_json(const ScheduleFile& s) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = s.delays.size();
    j["order"] = s.order;
    j["delays"] = s.delays;
    return j.dump(2) + "\n";
}

ScheduleFile schedule_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("schedule: not valid JSON: ") + e.what());
    }
    try {
        require_version(j, "schedule");
        ScheduleFile s;
        s.order = j.at("order").get<std::vector<int>>();
        s.delays = j.at("delays").get<std::vector<double>>();
        if (s.order.size() != s.delays.size())
            throw std::invalid_argument("schedule: order and delays disagree on drone count");
        for (double d : s.delays)
            if (!std::isfinite(d) || d < 0.0)
                throw std::invalid_argument("schedule: delays must be finite and non-negative");
        std::vector<bool> seen(s.order.size(), false);
        for (int id : s.order) {
            if (id < 0 || static_cast<std::size_t>(id) >= s.order.size() ||
                seen[static_cast<std::size_t>(id)])
                throw std::invalid_argument("schedule: order must be a permutation of drone ids");
            seen[static_cast<std::size_t>(id)] = true;
        }
        return s;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("schedule: malformed document: ") + e.what());
    }
}

std::string format_fixed(double value, int precision) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed,
                                   precision);
    return std::string(buf, res.ptr);
}

std::string metrics_csv_header() {
    return "seed,n,delta,flock_time,mean_delay,max_delay,overhead_time_pct,"
           "overhead_distance_pct,calc_time,min_distance,collision_free";
}

std::string metrics_csv_row(std::uint64_t seed, int n, double delta, const RunMetrics& m) {
    std::ostringstream row;
    row << seed << ',' << n << ',' << format_fixed(delta, 4) << ','
        << format_fixed(m.flock_time, 6) << ',' << format_fixed(m.mean_delay, 6) << ','
        << format_fixed(m.max_delay, 6) << ',' << format_fixed(m.overhead_time_pct, 3) << ','
        << format_fixed(m.overhead_distance_pct, 3) << ',' << format_fixed(m.calc_time, 6) << ','
        << format_fixed(m.min_observed_pair_distance, 6) << ','
        << (m.collision_free ? '1' : '0');
    return row.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw std::runtime_error("read failed: " + path);
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace flockplan
