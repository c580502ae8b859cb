#pragma once

#include <cstdint>
#include <vector>

#include "flockplan/collision_model.hpp"
#include "flockplan/kinematics.hpp"

namespace flockplan {

/// How candidate grid points near already-placed ones are ruled out.
enum class SpacingRule {
    Euclidean,      // reject when the straight-line gap is below min_spacing
    GridNeighbors,  // reject the Chebyshev-1 lattice shell around each point
};

/// Everything needed to regenerate a random mission deterministically.
struct ScenarioConfig {
    int n = 1;
    double delta = 0.0;        // area per drone (m^2); values <= 0 pick density(n)
    double min_spacing = 2.0;  // m, pairwise within starts and within targets
    Vec3 cube_far_corner{200.0, 200.0, 200.0};
    std::uint64_t seed = 0;
    KinematicLimits limits{};
    SafetyParams safety{};
    SpacingRule spacing_rule = SpacingRule::Euclidean;

    double resolved_delta() const;
};

struct Scenario {
    std::vector<DronePath> paths;
    ScenarioConfig config;
};

/// Ground-square side: smallest integer s with s^2 >= n * delta.
int square_side(int n, double delta);

/// Target-cube side: smallest integer s with s^3 >= 3 * n * delta.
int cube_side(int n, double delta);

/// Area-per-drone growth law keeping the random layouts schedulable as the
/// flock grows: 1.06 * n^0.5329 (m^2 per drone).
double density(int n);

/// Place n start points on the unit-pitch grid of a ground square centered on
/// the origin (z = 0) and n target points on the grid of a cube hanging from
/// config.cube_far_corner toward the origin, by seeded uniform rejection
/// sampling under the spacing rule; path i joins start i to target i.
/// Throws GenerationError when a point set exhausts its draw budget
/// (1000 * n attempts) and std::invalid_argument for bad config values.
Scenario generate(const ScenarioConfig& config);

}  // namespace flockplan
