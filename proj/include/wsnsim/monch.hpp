#ifndef WSNSIM_MONCH_HPP
#define WSNSIM_MONCH_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "wsnsim/core.hpp"
#include "wsnsim/energy.hpp"
#include "wsnsim/leach.hpp"

namespace wsnsim {

struct MonchPlan {
    int kopt = 0;     // target head count
    int capacity = 0; // members per cluster (CN)
    std::vector<int> head_order; // heads in selection sequence
    ClusterAssignment assignment;
    bool capacity_waived = false; // leftover nodes attached past capacity
};

// Euclidean distance of the BS from the origin, as the head-count formula
// uses it (not distance to the field center).
inline double bs_distance(const FieldGeometry& field) {
    return std::hypot(field.bs_position.x, field.bs_position.y);
}

// Field diagonal, the geometry scalar M in the head-count formula.
inline double field_diagonal(const FieldGeometry& field) {
    return std::hypot(field.yard_length, field.yard_width);
}

inline double optimal_head_count_raw(const RadioParams& radio, const FieldGeometry& field,
                                     int alive, double pt) {
    const double eh = head_unit_energy(radio);
    const double ec = node_unit_energy(radio);
    const double m = field_diagonal(field);
    const double dbs = bs_distance(field);
    return std::sqrt((eh / ec) * 2.0 * pt * (m / (dbs * dbs)) * static_cast<double>(alive));
}

// Kopt = sqrt((Eh/Ec) * 2 * pt * (M / dBS^2) * N), rounded half-up and
// clamped to [1, alive].
inline int optimal_head_count(const RadioParams& radio, const FieldGeometry& field,
                              int alive, double pt) {
    const double raw = optimal_head_count_raw(radio, field, alive, pt);
    int k = static_cast<int>(std::floor(raw + 0.5));
    return std::clamp(k, 1, alive);
}

// CN = ceil(alive / kopt).
inline int cluster_capacity(int alive, int kopt) {
    return (alive + kopt - 1) / kopt;
}

// Head candidates: alive nodes with residual energy at or above the
// population mean, ordered by ascending distance to the BS. Ties break to
// higher residual energy, then lower id. If the energy filter leaves nobody,
// all alive nodes are ranked.
inline std::vector<int> rank_head_candidates(const std::vector<const SensorNode*>& nodes,
                                             const FieldGeometry& field) {
    double mean = 0.0;
    for (const SensorNode* n : nodes) mean += n->residual_energy;
    mean /= static_cast<double>(nodes.size());

    std::vector<const SensorNode*> pool;
    for (const SensorNode* n : nodes)
        if (n->residual_energy >= mean) pool.push_back(n);
    if (pool.empty())
        pool.assign(nodes.begin(), nodes.end());

    std::sort(pool.begin(), pool.end(), [&](const SensorNode* a, const SensorNode* b) {
        const double da = distance(a->position, field.bs_position);
        const double db = distance(b->position, field.bs_position);
        if (da != db) return da < db;
        if (a->residual_energy != b->residual_energy)
            return a->residual_energy > b->residual_energy;
        return a->id < b->id;
    });

    std::vector<int> out;
    out.reserve(pool.size());
    for (const SensorNode* n : pool) out.push_back(n->id);
    return out;
}

// Greedy capacity-bounded formation: repeatedly pick the best-ranked head
// among unassigned nodes, attach its nearest unassigned nodes up to the
// cluster size CN (head included, so capacity - 1 members), and remove the
// cluster from the pool. Leftovers past kopt clusters attach to the nearest
// head with capacity waived.
inline MonchPlan form_clusters(const std::vector<const SensorNode*>& nodes,
                               const FieldGeometry& field, int kopt, int capacity) {
    MonchPlan plan;
    plan.kopt = kopt;
    plan.capacity = capacity;

    std::vector<const SensorNode*> pool(nodes.begin(), nodes.end());
    std::sort(pool.begin(), pool.end(),
              [](const SensorNode* a, const SensorNode* b) { return a->id < b->id; });
    std::vector<const SensorNode*> head_nodes;

    while (static_cast<int>(plan.head_order.size()) < kopt && !pool.empty()) {
        const std::vector<int> ranked = rank_head_candidates(pool, field);
        const int head_id = ranked.front();
        auto head_it = std::find_if(pool.begin(), pool.end(),
                                    [&](const SensorNode* n) { return n->id == head_id; });
        const SensorNode* head = *head_it;
        pool.erase(head_it);
        plan.head_order.push_back(head_id);
        plan.assignment.heads.insert(head_id);
        head_nodes.push_back(head);

        // capacity nearest remaining nodes join this head; ties to lower id
        std::vector<const SensorNode*> by_dist(pool.begin(), pool.end());
        std::sort(by_dist.begin(), by_dist.end(),
                  [&](const SensorNode* a, const SensorNode* b) {
                      const double da = distance(a->position, head->position);
                      const double db = distance(b->position, head->position);
                      if (da != db) return da < db;
                      return a->id < b->id;
                  });
        const int take = std::min<int>(capacity - 1, static_cast<int>(by_dist.size()));
        for (int i = 0; i < take; ++i) {
            plan.assignment.membership[by_dist[i]->id] = head_id;
            pool.erase(std::find(pool.begin(), pool.end(), by_dist[i]));
        }
    }

    // leftover nodes: nearest head, capacity ignored
    for (const SensorNode* n : pool) {
        const SensorNode* best = nullptr;
        double best_d = 0.0;
        for (const SensorNode* h : head_nodes) {
            const double d = distance(n->position, h->position);
            if (!best || d < best_d || (d == best_d && h->id < best->id)) {
                best = h;
                best_d = d;
            }
        }
        plan.assignment.membership[n->id] = best->id;
        plan.capacity_waived = true;
    }
    return plan;
}

} // namespace wsnsim

#endif
