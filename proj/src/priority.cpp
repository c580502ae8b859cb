#include "flockplan/priority.hpp"

#include <algorithm>
#include <stdexcept>

namespace flockplan {

namespace {

constexpr int kMaxReportedCycles = 64;
constexpr int kEnumerationLimit = 50;  // full enumeration only for small flocks

// All elementary cycles whose smallest vertex is `s`, found by DFS over
// vertices >= s. Bounded by the global cycle cap.
void enumerate_from(int s, int u, const std::vector<std::vector<int>>& adj,
                    std::vector<char>& on_path, std::vector<int>& path,
                    std::vector<std::vector<int>>& out) {
    for (int v : adj[u]) {
        if (static_cast<int>(out.size()) >= kMaxReportedCycles) return;
        if (v == s) {
            out.push_back(path);
        } else if (v > s && !on_path[v]) {
            on_path[v] = 1;
            path.push_back(v);
            enumerate_from(s, v, adj, on_path, path, out);
            path.pop_back();
            on_path[v] = 0;
        }
    }
}

// One cycle via iterative DFS back-edge detection, or empty if acyclic.
std::vector<int> first_cycle(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> colour(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (colour[root] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[u].size()) {
                const int v = adj[u][next++];
                if (colour[v] == 0) {
                    colour[v] = 1;
                    parent[v] = u;
                    stack.emplace_back(v, 0);
                } else if (colour[v] == 1) {
                    std::vector<int> cycle{v};
                    for (int w = u; w != v; w = parent[w]) cycle.push_back(w);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    return cycle;
                }
            } else {
                colour[u] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

}  // namespace

CycleReport detect_cycle(const CollisionTables& tables) {
    const int n = tables.n;
    std::vector<std::vector<int>> adj(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q && tables.constraint(p, q) == 1.0) adj[q].push_back(p);

    CycleReport report;
    if (n <= kEnumerationLimit) {
        std::vector<char> on_path(n, 0);
        for (int s = 0; s < n; ++s) {
            std::vector<int> path{s};
            on_path[s] = 1;
            enumerate_from(s, s, adj, on_path, path, report.cycles);
            on_path[s] = 0;
            if (static_cast<int>(report.cycles.size()) >= kMaxReportedCycles) break;
        }
    } else {
        std::vector<int> cycle = first_cycle(adj);
        if (!cycle.empty()) report.cycles.push_back(std::move(cycle));
    }
    return report;
}

PriorityVector compute_priority(const CollisionTables& tables, double gamma,
                                std::vector<PriorityRound>* trace) {
    if (gamma <= 0.0 || gamma >= 1.0)
        throw std::invalid_argument("compute_priority: gamma must lie inside (0,1)");
    const int n = tables.n;
    Grid<double> ecl = tables.constraint;
    std::vector<int> soft(n, 0), blocks(n, 0);
    std::vector<double> row_max(n, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            const double v = ecl(j, k);
            if (v == 1.0) {
                ++blocks[j];
            } else if (v > 0.0) {
                ++soft[j];
                row_max[j] = std::max(row_max[j], v);
            }
        }
    }

    PriorityVector pv;
    pv.order.reserve(n);
    std::vector<char> processed(n, 0);
    for (int round = 0; round < n; ++round) {
        int sel = -1;
        PickReason reason = PickReason::Unconstrained;
        for (int j = 0; j < n; ++j) {
            if (!processed[j] && soft[j] == 0 && blocks[j] == 0) {
                sel = j;
                break;
            }
        }
        if (sel < 0) {
            for (int j = 0; j < n; ++j) {
                if (processed[j] || blocks[j] > 0) continue;
                if (sel < 0 || soft[j] > soft[sel] ||
                    (soft[j] == soft[sel] && row_max[j] < row_max[sel])) {
                    sel = j;
                }
                // Equal count and equal maximum keep the earlier (smaller) index.
            }
            if (sel >= 0 && trace) {
                reason = PickReason::MostSoft;
                for (int j = 0; j < n; ++j) {
                    if (j == sel || processed[j] || blocks[j] > 0) continue;
                    if (soft[j] != soft[sel]) continue;
                    reason = row_max[j] == row_max[sel] ? PickReason::SmallestIndex
                                                        : PickReason::SmallestMax;
                    if (reason == PickReason::SmallestIndex) break;
                }
            }
        }
        if (sel < 0)
            throw std::logic_error(
                "compute_priority: every remaining drone is hard-blocked; "
                "the hard-constraint graph must contain a cycle");

        if (trace) trace->push_back({round, sel, reason, soft[sel], row_max[sel]});
        pv.order.push_back(sel);
        processed[sel] = 1;
        for (int k = 0; k < n; ++k) ecl(sel, k) = 0.0;
        soft[sel] = 0;
        blocks[sel] = 0;
        row_max[sel] = 0.0;
        // Rows that were hard-blocked by the processed drone now only need to
        // avoid it softly; entries move 1 -> gamma, so the row maximum can
        // only grow towards gamma.
        for (int j = 0; j < n; ++j) {
            if (!processed[j] && ecl(j, sel) == 1.0) {
                ecl(j, sel) = gamma;
                ++soft[j];
                --blocks[j];
                row_max[j] = std::max(row_max[j], gamma);
            }
        }
    }
    return pv;
}

}  // namespace flockplan
