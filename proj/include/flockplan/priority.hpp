#pragma once

#include <vector>

#include "flockplan/collision_model.hpp"

namespace flockplan {

/// Circular hard-constraint dependencies. Each cycle lists drone ids in
/// must-precede order, starting from the smallest id in the cycle.
struct CycleReport {
    std::vector<std::vector<int>> cycles;

    bool empty() const { return cycles.empty(); }
};

/// Scan the hard entries (constraint == 1: row waits for column) for cycles.
/// Edges run column -> row ("column must precede row"). Returns every
/// elementary cycle for n <= 50 (capped at 64 for pathological graphs);
/// for larger flocks only the first cycle found.
CycleReport detect_cycle(const CollisionTables& tables);

/// Why a drone was selected in its round.
enum class PickReason {
    Unconstrained,  // row had no soft and no hard entries
    MostSoft,       // unique maximum soft-entry count among unblocked rows
    SmallestMax,    // soft-count tie broken by smaller row maximum
    SmallestIndex,  // full tie broken by drone index
};

/// One round of the ordering pass, for diagnostics.
struct PriorityRound {
    int round = 0;
    int drone = 0;
    PickReason reason = PickReason::Unconstrained;
    int soft_count = 0;
    double row_max = 0.0;
};

/// Scheduling order. order[i] is the drone processed in slot i; slot 0 is
/// the highest priority (scheduled first, delay zero).
struct PriorityVector {
    std::vector<int> order;
};

/// Order the drones so that every hard constraint points backwards: when
/// constraint(p,q) == 1, q appears before p. Among unblocked drones the most
/// soft-constrained one goes first; processing a drone converts hard entries
/// against it into soft entries of weight gamma.
/// Requires a cycle-free hard graph; throws std::logic_error when some round
/// has every remaining drone blocked (detect_cycle would have reported it).
PriorityVector compute_priority(const CollisionTables& tables, double gamma = 0.5,
                                std::vector<PriorityRound>* trace = nullptr);

}  // namespace flockplan
