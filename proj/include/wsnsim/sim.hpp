#ifndef WSNSIM_SIM_HPP
#define WSNSIM_SIM_HPP

#include <stdexcept>
#include <vector>

#include "wsnsim/core.hpp"
#include "wsnsim/energy.hpp"
#include "wsnsim/leach.hpp"
#include "wsnsim/metrics.hpp"
#include "wsnsim/monch.hpp"

namespace wsnsim {

class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimulationState {
    int round = 0;
    std::vector<SensorNode> nodes;
    EnergyLedger ledger;
    long long cumulative_packets_to_bs = 0;
    SplitMix64 rng;

    explicit SimulationState(SplitMix64 r = SplitMix64{}) : rng(r) {}

    SensorNode& node(int id) { return nodes[static_cast<size_t>(id)]; }
};

struct SimulationResult {
    std::vector<RoundMetrics> per_round;
    Summary summary;
    SimConfig config_echo;
    uint64_t seed = 0;
};

namespace detail {

// Debits `cost`; a node whose energy hits zero dies immediately and skips
// all later activity. The part of the cost it could not cover goes to the
// ledger's overdraft so the energy account stays balanced.
inline void charge(SimulationState& state, SensorNode& n, double cost) {
    state.ledger.charge(n.id, n.residual_energy, cost);
    n.residual_energy -= cost;
    if (n.residual_energy <= 0.0) {
        n.residual_energy = 0.0;
        n.alive = false;
    }
}

} // namespace detail

// One data frame: members transmit to their heads, heads receive, aggregate
// (member bits plus their own reading), and forward one packet to the BS.
// Headless (unassigned) nodes transmit their reading straight to the BS.
// A node that can only partially pay a transmission still completes it,
// then dies.
inline void steady_state_frame(SimulationState& state, const ClusterAssignment& assignment,
                               const SimConfig& config) {
    const RadioParams& radio = config.radio;
    const Position& bs = config.field.bs_position;

    for (int head_id : assignment.heads) {
        SensorNode& head = state.node(head_id);
        uint64_t agg_bits = 0;
        for (const auto& [member_id, h] : assignment.membership) {
            if (h != head_id) continue;
            SensorNode& member = state.node(member_id);
            if (!member.alive) continue;
            detail::charge(state, member,
                           tx_energy(radio, radio.node_packet_len,
                                     distance(member.position, head.position)));
            if (head.alive) {
                detail::charge(state, head, rx_energy(radio, radio.node_packet_len));
                agg_bits += radio.node_packet_len;
            }
        }
        if (!head.alive) continue;
        agg_bits += radio.node_packet_len; // the head senses too
        detail::charge(state, head, aggregation_energy(radio, agg_bits));
        if (!head.alive) continue;
        detail::charge(state, head,
                       tx_energy(radio, radio.packet_len, distance(head.position, bs)));
        state.cumulative_packets_to_bs += 1;
    }

    for (int id : assignment.unassigned) {
        SensorNode& n = state.node(id);
        if (!n.alive) continue;
        detail::charge(state, n,
                       tx_energy(radio, radio.node_packet_len, distance(n.position, bs)));
        state.cumulative_packets_to_bs += 1;
    }
}

// One full round: cluster formation followed by frames_per_round data
// frames. A LEACH round that elects zero heads falls back to every node
// transmitting directly to the BS.
inline RoundMetrics run_round(SimulationState& state, const SimConfig& config) {
    std::vector<SensorNode*> alive;
    std::vector<const SensorNode*> alive_const;
    for (SensorNode& n : state.nodes) {
        n.is_ch_this_round = false;
        if (n.alive) {
            alive.push_back(&n);
            alive_const.push_back(&n);
        }
    }
    if (alive.empty()) throw SimulationError("population extinct");

    for (SensorNode* n : alive) n->rounds_since_ch += 1;

    ClusterAssignment assignment;
    if (config.protocol == Protocol::LEACH) {
        std::set<int> heads = elect_heads(alive, config.ch_probability, state.round, state.rng);
        assignment = join_nearest(alive_const, heads);
    } else {
        const int n_alive = static_cast<int>(alive.size());
        const int kopt = optimal_head_count(config.radio, config.field, n_alive, config.pt);
        const int capacity = cluster_capacity(n_alive, kopt);
        assignment = form_clusters(alive_const, config.field, kopt, capacity).assignment;
    }
    for (int id : assignment.heads) state.node(id).is_ch_this_round = true;

    for (int f = 0; f < config.frames_per_round; ++f)
        steady_state_frame(state, assignment, config);

    RoundMetrics m;
    m.round = state.round;
    m.head_count = static_cast<int>(assignment.heads.size());
    m.cumulative_packets_to_bs = state.cumulative_packets_to_bs;
    for (const SensorNode& n : state.nodes) {
        if (n.alive) m.alive_count += 1;
        m.total_residual_energy += n.residual_energy;
    }
    state.round += 1;
    return m;
}

// Deploys and runs rounds until the population is extinct or max_rounds is
// reached. Identical (config, seed) gives identical results.
inline SimulationResult run_simulation(const SimConfig& config) {
    validate_config(config);
    SimulationState state{SplitMix64{config.seed}};
    state.nodes = deploy_nodes(config, state.rng);

    SimulationResult result;
    result.config_echo = config;
    result.seed = config.seed;
    while (state.round < config.max_rounds) {
        bool any_alive = false;
        for (const SensorNode& n : state.nodes)
            if (n.alive) { any_alive = true; break; }
        if (!any_alive) break;
        result.per_round.push_back(run_round(state, config));
    }
    result.summary = summarize(result.per_round, config.node_count);
    return result;
}

} // namespace wsnsim

#endif
