#include "flockplan/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "flockplan/errors.hpp"

namespace flockplan {

namespace {

// Smallest integer s >= 1 with s^2 >= area. The integer fix-up loops make the
// result immune to one-ulp errors in sqrt near perfect squares.
int ceil_sqrt(double area) {
    int s = std::max(1, static_cast<int>(std::ceil(std::sqrt(area))));
    while (s > 1 && static_cast<double>(s - 1) * (s - 1) >= area) --s;
    while (static_cast<double>(s) * s < area) ++s;
    return s;
}

// Smallest integer s >= 1 with s^3 >= volume.
int ceil_cbrt(double volume) {
    int s = std::max(1, static_cast<int>(std::ceil(std::cbrt(volume))));
    while (s > 1 && static_cast<double>(s - 1) * (s - 1) * (s - 1) >= volume) --s;
    while (static_cast<double>(s) * s * s < volume) ++s;
    return s;
}

// Draw lattice points of a (side+1)^2 square (volumetric: (side+1)^3 cube)
// uniformly until n of them satisfy the spacing rule. The square keeps the
// grid's z index pinned to 0 so it costs two RNG draws per attempt, making
// flat and volumetric sampling sequences independent of each other's shape.
std::vector<Vec3> sample_points(std::mt19937_64& rng, int n, int side, const Vec3& origin,
                                bool volumetric, double min_spacing, SpacingRule rule,
                                const char* label) {
    std::uniform_int_distribution<int> pick(0, side);
    const long budget = 1000L * n;
    const double spacing2 = min_spacing * min_spacing;
    std::vector<Vec3> pts;
    std::vector<std::array<int, 3>> cells;
    pts.reserve(static_cast<std::size_t>(n));
    cells.reserve(static_cast<std::size_t>(n));
    long draws = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (draws >= budget) {
            const double fill = static_cast<double>(pts.size()) / n;
            throw GenerationError(std::string(label) + " placement gave up after " +
                                      std::to_string(budget) + " draws with " +
                                      std::to_string(pts.size()) + "/" + std::to_string(n) +
                                      " points placed",
                                  fill);
        }
        ++draws;
        const std::array<int, 3> cell{pick(rng), pick(rng), volumetric ? pick(rng) : 0};
        const Vec3 cand = origin + Vec3{static_cast<double>(cell[0]),
                                        static_cast<double>(cell[1]),
                                        static_cast<double>(cell[2])};
        bool clear = true;
        if (rule == SpacingRule::Euclidean) {
            for (const Vec3& p : pts) {
                const Vec3 d = cand - p;
                const bool duplicate = d.x == 0.0 && d.y == 0.0 && d.z == 0.0;
                if (duplicate || norm2(d) < spacing2) {
                    clear = false;
                    break;
                }
            }
        } else {
            for (const std::array<int, 3>& c : cells) {
                const int cheb = std::max({std::abs(cell[0] - c[0]), std::abs(cell[1] - c[1]),
                                           std::abs(cell[2] - c[2])});
                if (cheb <= 1) {
                    clear = false;
                    break;
                }
            }
        }
        if (clear) {
            pts.push_back(cand);
            cells.push_back(cell);
        }
    }
    return pts;
}

}  // namespace

double ScenarioConfig::resolved_delta() const { return delta > 0.0 ? delta : density(n); }

int square_side(int n, double delta) {
    if (n < 1) throw std::invalid_argument("square_side: drone count must be >= 1");
    if (!(delta > 0.0)) throw std::invalid_argument("square_side: density factor must be positive");
    return ceil_sqrt(static_cast<double>(n) * delta);
}

int cube_side(int n, double delta) {
    if (n < 1) throw std::invalid_argument("cube_side: drone count must be >= 1");
    if (!(delta > 0.0)) throw std::invalid_argument("cube_side: density factor must be positive");
    return ceil_cbrt(3.0 * static_cast<double>(n) * delta);
}

double density(int n) {
    if (n < 1) throw std::invalid_argument("density: drone count must be >= 1");
    return 1.06 * std::pow(static_cast<double>(n), 0.5329);
}

Scenario generate(const ScenarioConfig& config) {
    if (config.n < 1) throw std::invalid_argument("generate: drone count must be >= 1");
    if (config.min_spacing < 0.0) throw std::invalid_argument("generate: min_spacing must be >= 0");
    const double delta = config.resolved_delta();
    if (!(delta > 0.0)) throw std::invalid_argument("generate: density factor must be positive");

    const int side_sq = square_side(config.n, delta);
    const int side_cu = cube_side(config.n, delta);

    std::mt19937_64 rng(config.seed);
    const Vec3 square_origin{-static_cast<double>(side_sq / 2),
                             -static_cast<double>(side_sq / 2), 0.0};
    const std::vector<Vec3> starts =
        sample_points(rng, config.n, side_sq, square_origin, false, config.min_spacing,
                      config.spacing_rule, "start square");
    const Vec3 cube_origin =
        config.cube_far_corner - Vec3{static_cast<double>(side_cu), static_cast<double>(side_cu),
                                      static_cast<double>(side_cu)};
    const std::vector<Vec3> targets =
        sample_points(rng, config.n, side_cu, cube_origin, true, config.min_spacing,
                      config.spacing_rule, "target cube");

    Scenario sc;
    sc.config = config;
    sc.paths.reserve(static_cast<std::size_t>(config.n));
    for (int i = 0; i < config.n; ++i)
        sc.paths.push_back(DronePath{starts[static_cast<std::size_t>(i)],
                                     targets[static_cast<std::size_t>(i)], config.limits});
    return sc;
}

}  // namespace flockplan
