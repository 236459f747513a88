// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "wsnsim/report.hpp"
#include "wsnsim/sim.hpp"
#include "test_helpers.hpp"

using namespace wsnsim;
using wsnsim::testing::default_config;
using wsnsim::testing::make_node;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail = "") {
    std::printf("%s: %s%s%s\n", ok ? "PASS" : "FAIL", name, detail.empty() ? "" : " — ",
                detail.c_str());
    if (!ok) ++g_failures;
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

struct PairedRun {
    SimulationResult leach;
    SimulationResult monch;
};

// 20 paired runs: default parameter set, BS (50,100), p=0.05, 4 frames,
// shared deployment per seed.
std::vector<PairedRun> paired_runs() {
    std::vector<PairedRun> runs;
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        SimConfig leach = default_config(Protocol::LEACH, seed);
        SimConfig monch = default_config(Protocol::MONCH, seed);
        leach.max_rounds = monch.max_rounds = 30000;
        runs.push_back({run_simulation(leach), run_simulation(monch)});
    }
    return runs;
}

int death_round(const std::optional<int>& v, const SimulationResult& r) {
    // a crossing that never happened counts as the full run length
    return v.value_or(r.summary.rounds_executed);
}

void lifetime_criteria(const std::vector<PairedRun>& runs, double elapsed_s) {
    int half_wins = 0, last_wins = 0, packet_wins = 0;
    std::vector<double> half_ratios;
    for (const PairedRun& p : runs) {
        const int lh = death_round(p.leach.summary.half_nodes_death_round, p.leach);
        const int mh = death_round(p.monch.summary.half_nodes_death_round, p.monch);
        if (mh > lh) ++half_wins;
        half_ratios.push_back(static_cast<double>(mh) / static_cast<double>(lh));

        const int ll = death_round(p.leach.summary.last_node_death_round, p.leach);
        const int ml = death_round(p.monch.summary.last_node_death_round, p.monch);
        if (ml > ll) ++last_wins;

        // cumulative packets at the final round both runs reached
        const int common = std::min(p.leach.summary.rounds_executed,
                                    p.monch.summary.rounds_executed);
        auto packets_at = [&](const SimulationResult& r) {
            return r.per_round[static_cast<size_t>(common) - 1].cumulative_packets_to_bs;
        };
        if (common > 0 && packets_at(p.monch) > packets_at(p.leach)) ++packet_wins;
    }
    std::sort(half_ratios.begin(), half_ratios.end());
    const double median_ratio = (half_ratios[9] + half_ratios[10]) / 2.0;

    char buf[256];
    std::snprintf(buf, sizeof(buf), "monch half-death later in %d/20 pairs, median ratio %.3f, %.1fs",
                  half_wins, median_ratio, elapsed_s);
    report("lifetime ordering (half-death, >=18/20 and median ratio >= 1.15, < 120 s)",
           half_wins >= 18 && median_ratio >= 1.15 && elapsed_s < 120.0, buf);

    std::snprintf(buf, sizeof(buf), "monch last-death later in %d/20 pairs", last_wins);
    report("longevity ordering (last-death, >=18/20)", last_wins >= 18, buf);

    std::snprintf(buf, sizeof(buf), "monch ahead on packets in %d/20 pairs", packet_wins);
    report("throughput ordering (packets at final common round, >=18/20)", packet_wins >= 18,
           buf);
}

void kopt_criterion() {
    SimConfig cfg = default_config();
    FieldGeometry f = cfg.field;
    f.bs_position = {50, 50};
    const int k = optimal_head_count(cfg.radio, f, 100, M_PI);
    report("optimal head count oracle (= 25)", k == 25, "got " + std::to_string(k));
}

void energy_point_criterion() {
    const RadioParams radio = default_config().radio;
    const double d0 = distance_threshold(radio);
    const bool threshold_ok = close_rel(d0, std::sqrt(100.0 / 0.013), 1e-6);
    const bool tx_ok = close_rel(tx_energy(radio, 200, 50.0), 6.0e-5, 1e-12) &&
                       close_rel(tx_energy(radio, 200, 100.0), 2.7e-4, 1e-12);
    const double short_branch = radio.e_elec * 200 + radio.e_amp * 200 * d0 * d0;
    const double long_branch = radio.e_elec * 200 + radio.e_fs * 200 * d0 * d0 * d0 * d0;
    const bool cont_ok = close_rel(short_branch, long_branch, 1e-15);
    report("energy model point checks (threshold, tx values, branch continuity)",
           threshold_ok && tx_ok && cont_ok);
}

void conservation_criterion() {
    bool ok = true;
    for (Protocol proto : {Protocol::LEACH, Protocol::MONCH}) {
        SimConfig cfg = default_config(proto, 11);
        cfg.max_rounds = 2000;
        validate_config(cfg);
        SimulationState st{SplitMix64{cfg.seed}};
        st.nodes = deploy_nodes(cfg, st.rng);
        const double budget = cfg.initial_energy * cfg.node_count;
        for (int r = 0; r < cfg.max_rounds; ++r) {
            bool any = false;
            for (const auto& n : st.nodes)
                if (n.alive) { any = true; break; }
            if (!any) break;
            run_round(st, cfg);
            double residual = 0;
            for (const auto& n : st.nodes) residual += n.residual_energy;
            if (std::abs(residual + st.ledger.total_consumed() - budget) > 1e-9 * budget)
                ok = false;
        }
    }
    report("energy conservation every round (1e-9 relative)", ok);
}

void determinism_criterion() {
    SimConfig cfg = default_config(Protocol::MONCH, 101);
    cfg.max_rounds = 500;
    const bool csv_ok = csv_string(run_simulation(cfg)) == csv_string(run_simulation(cfg));

    double total = 0;
    for (uint64_t trial = 0; trial < 1000; ++trial) {
        SimConfig c = default_config(Protocol::LEACH, trial + 1);
        SplitMix64 rng{c.seed};
        auto nodes = deploy_nodes(c, rng);
        std::vector<SensorNode*> p;
        for (auto& n : nodes) p.push_back(&n);
        total += static_cast<double>(elect_heads(p, 0.05, 0, rng).size());
    }
    const double mean = total / 1000.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "mean head count %.3f", mean);
    report("determinism (byte-identical CSVs) and election mean in [4, 6]",
           csv_ok && mean >= 4.0 && mean <= 6.0, buf);
}

void assignment_criterion() {
    bool join_ok = true;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        SplitMix64 rng{seed + 40000};
        std::vector<SensorNode> nodes;
        for (int i = 0; i < 20; ++i)
            nodes.push_back(make_node(i, rng.uniform(0, 100), rng.uniform(0, 100)));
        std::set<int> heads;
        while (heads.size() < 3) heads.insert(static_cast<int>(rng.next_u64() % 20));
        std::vector<const SensorNode*> cp;
        for (auto& n : nodes) cp.push_back(&n);
        auto assignment = join_nearest(cp, heads);
        for (const auto& [m, h] : assignment.membership) {
            double best = 1e300;
            int best_id = -1;
            for (int hid : heads) {
                const double d = distance(nodes[static_cast<size_t>(m)].position,
                                          nodes[static_cast<size_t>(hid)].position);
                if (d < best || (d == best && hid < best_id)) {
                    best = d;
                    best_id = hid;
                }
            }
            if (h != best_id) join_ok = false;
        }
        for (const auto& n : nodes)
            if ((heads.count(n.id) > 0) == (assignment.membership.count(n.id) > 0))
                join_ok = false;
    }

    bool form_ok = true;
    FieldGeometry field;
    field.bs_position = {50, 100};
    for (uint64_t seed = 0; seed < 100; ++seed) {
        SplitMix64 rng{seed + 90000};
        std::vector<SensorNode> nodes;
        for (int i = 0; i < 25; ++i)
            nodes.push_back(make_node(i, rng.uniform(0, 100), rng.uniform(0, 100),
                                      rng.uniform(0.5, 2.0)));
        std::vector<const SensorNode*> cp;
        for (auto& n : nodes) cp.push_back(&n);
        const int kopt = 6;
        const int capacity = cluster_capacity(25, kopt);
        auto plan = form_clusters(cp, field, kopt, capacity);

        for (const auto& n : nodes)
            if ((plan.assignment.heads.count(n.id) > 0) ==
                (plan.assignment.membership.count(n.id) > 0))
                form_ok = false;

        // replay the greedy procedure step by step
        std::vector<const SensorNode*> pool = cp;
        for (int head_id : plan.head_order) {
            auto ranked = rank_head_candidates(pool, field);
            if (ranked.front() != head_id) form_ok = false;
            const SensorNode* head = &nodes[static_cast<size_t>(head_id)];
            pool.erase(std::find_if(pool.begin(), pool.end(),
                                    [&](const SensorNode* n) { return n->id == head_id; }));
            std::vector<const SensorNode*> by_dist = pool;
            std::sort(by_dist.begin(), by_dist.end(),
                      [&](const SensorNode* a, const SensorNode* b) {
                          const double da = distance(a->position, head->position);
                          const double db = distance(b->position, head->position);
                          if (da != db) return da < db;
                          return a->id < b->id;
                      });
            const int take = std::min<int>(capacity - 1, static_cast<int>(by_dist.size()));
            for (int i = 0; i < take; ++i) {
                auto it = plan.assignment.membership.find(by_dist[static_cast<size_t>(i)]->id);
                if (it == plan.assignment.membership.end() || it->second != head_id)
                    form_ok = false;
                pool.erase(std::find(pool.begin(), pool.end(), by_dist[static_cast<size_t>(i)]));
            }
        }
    }
    report("assignment oracles (nearest-head scan, greedy replay, full coverage)",
           join_ok && form_ok);
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    auto runs = paired_runs();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    lifetime_criteria(runs, elapsed);
    kopt_criterion();
    energy_point_criterion();
    conservation_criterion();
    determinism_criterion();
    assignment_criterion();

    std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures;
}
