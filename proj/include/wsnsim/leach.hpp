#ifndef WSNSIM_LEACH_HPP
#define WSNSIM_LEACH_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "wsnsim/core.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

// One round's cluster structure. Every alive node is exactly one of: a head,
// a member (mapped to its head), or unassigned. `unassigned` is only
// populated when no head exists (direct-to-BS fallback).
struct ClusterAssignment {
    std::set<int> heads;
    std::map<int, int> membership; // member id -> head id
    std::set<int> unassigned;
};

inline int leach_epoch(double p) {
    return static_cast<int>(std::floor(1.0 / p));
}

// Rotating-election threshold T(n) = p / (1 - p * (r mod floor(1/p))),
// zero for nodes that already served as head in the current epoch.
inline double election_threshold(double p, int round, bool eligible) {
    if (!eligible) return 0.0;
    const int epoch = leach_epoch(p);
    return p / (1.0 - p * static_cast<double>(round % epoch));
}

// A node is eligible iff it has not served as head in the current epoch,
// where epochs are aligned blocks of floor(1/p) rounds; the eligible set
// refills at every epoch boundary. rounds_since_ch counts rounds since the
// node last served, so service in the current epoch means
// rounds_since_ch <= round mod epoch.
inline bool election_eligible(const SensorNode& n, double p, int round) {
    return n.rounds_since_ch > round % leach_epoch(p);
}

// Each alive node draws one uniform number, in id order, and becomes a head
// iff the draw is below its threshold. Elected nodes get rounds_since_ch = 0.
inline std::set<int> elect_heads(std::vector<SensorNode*>& nodes, double p,
                                 int round, SplitMix64& rng) {
    std::set<int> heads;
    for (SensorNode* n : nodes) {
        const bool eligible = election_eligible(*n, p, round);
        const double draw = rng.uniform01();
        if (draw < election_threshold(p, round, eligible)) {
            heads.insert(n->id);
            n->rounds_since_ch = 0;
        }
    }
    return heads;
}

// Every alive non-head joins the closest head (distance as the proxy for
// signal strength); ties break to the lower head id. With no heads at all,
// every non-head is unassigned.
inline ClusterAssignment join_nearest(const std::vector<const SensorNode*>& nodes,
                                      const std::set<int>& heads) {
    ClusterAssignment out;
    out.heads = heads;
    std::vector<const SensorNode*> head_nodes;
    for (const SensorNode* n : nodes)
        if (heads.count(n->id)) head_nodes.push_back(n);
    std::sort(head_nodes.begin(), head_nodes.end(),
              [](const SensorNode* a, const SensorNode* b) { return a->id < b->id; });

    for (const SensorNode* n : nodes) {
        if (heads.count(n->id)) continue;
        if (head_nodes.empty()) {
            out.unassigned.insert(n->id);
            continue;
        }
        const SensorNode* best = nullptr;
        double best_d = 0.0;
        for (const SensorNode* h : head_nodes) {
            const double d = distance(n->position, h->position);
            if (!best || d < best_d) { // strict: earlier (lower id) head wins ties
                best = h;
                best_d = d;
            }
        }
        out.membership[n->id] = best->id;
    }
    return out;
}

} // namespace wsnsim

#endif
