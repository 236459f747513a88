#ifndef WSNSIM_METRICS_HPP
#define WSNSIM_METRICS_HPP

#include <optional>
#include <vector>

namespace wsnsim {

struct RoundMetrics {
    int round = 0;
    int alive_count = 0;
    double total_residual_energy = 0.0; // joules
    long long cumulative_packets_to_bs = 0;
    int head_count = 0;
};

struct Summary {
    std::optional<int> first_node_death_round;
    std::optional<int> half_nodes_death_round; // alive <= floor(N/2)
    std::optional<int> last_node_death_round;
    long long total_packets_to_bs = 0;
    int rounds_executed = 0;
};

// Death rounds from alive-count crossings: first round with alive < N,
// first with alive <= floor(N/2), first with alive == 0.
inline Summary summarize(const std::vector<RoundMetrics>& per_round, int node_count) {
    Summary s;
    s.rounds_executed = static_cast<int>(per_round.size());
    const int half = node_count / 2;
    for (const RoundMetrics& m : per_round) {
        if (!s.first_node_death_round && m.alive_count < node_count)
            s.first_node_death_round = m.round;
        if (!s.half_nodes_death_round && m.alive_count <= half)
            s.half_nodes_death_round = m.round;
        if (!s.last_node_death_round && m.alive_count == 0)
            s.last_node_death_round = m.round;
        s.total_packets_to_bs = m.cumulative_packets_to_bs;
    }
    return s;
}

} // namespace wsnsim

#endif
