// Command-line runner: single simulations, LEACH-vs-MONCH paired
// comparisons, and seed sweeps.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsnsim/report.hpp"
#include "wsnsim/sim.hpp"

namespace fs = std::filesystem;
using namespace wsnsim;

namespace {

struct CliOptions {
    std::string config_path;
    std::optional<uint64_t> seed;
    int seed_count = 1;
    std::string out_dir = "out";
    std::optional<int> max_rounds;
};

SimConfig load_with_overrides(const CliOptions& opt) {
    SimConfig cfg = load_config_file(opt.config_path);
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.max_rounds) {
        cfg.max_rounds = *opt.max_rounds;
        validate_config(cfg);
    }
    return cfg;
}

const char* proto_name(Protocol p) {
    return p == Protocol::LEACH ? "leach" : "monch";
}

// Rounds where a death crossing never happened are reported as the number of
// rounds executed (a lower bound on the true value).
int round_or_cap(const std::optional<int>& v, const Summary& s) {
    return v.value_or(s.rounds_executed);
}

long long median(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

int cmd_run(const CliOptions& opt) {
    SimConfig cfg = load_with_overrides(opt);
    SimulationResult result = run_simulation(cfg);
    fs::create_directories(opt.out_dir);
    export_csv(result, opt.out_dir + "/results.csv");
    export_summary_json(result, opt.out_dir + "/summary.json");
    render_plots({result}, {proto_name(cfg.protocol)}, opt.out_dir);

    const Summary& s = result.summary;
    std::cout << "protocol=" << proto_name(cfg.protocol) << " seed=" << result.seed
              << " rounds=" << s.rounds_executed
              << " fnd=" << round_or_cap(s.first_node_death_round, s)
              << " hnd=" << round_or_cap(s.half_nodes_death_round, s)
              << " lnd=" << round_or_cap(s.last_node_death_round, s)
              << " packets=" << s.total_packets_to_bs << "\n";
    return 0;
}

int cmd_compare(const CliOptions& opt) {
    SimConfig base = load_with_overrides(opt);
    fs::create_directories(opt.out_dir);

    struct Pair {
        uint64_t seed;
        Summary leach, monch;
    };
    std::vector<Pair> pairs;

    for (int i = 0; i < opt.seed_count; ++i) {
        const uint64_t seed = base.seed + static_cast<uint64_t>(i);
        SimConfig cfg_l = base, cfg_m = base;
        cfg_l.protocol = Protocol::LEACH;
        cfg_m.protocol = Protocol::MONCH;
        cfg_l.seed = cfg_m.seed = seed;

        SimulationResult rl = run_simulation(cfg_l);
        SimulationResult rm = run_simulation(cfg_m);

        const std::string dir = opt.out_dir + "/seed_" + std::to_string(seed);
        fs::create_directories(dir);
        export_csv(rl, dir + "/leach.csv");
        export_csv(rm, dir + "/monch.csv");
        export_summary_json(rl, dir + "/leach_summary.json");
        export_summary_json(rm, dir + "/monch_summary.json");
        if (i == 0) render_plots({rl, rm}, {"leach", "monch"}, opt.out_dir);

        pairs.push_back({seed, rl.summary, rm.summary});
    }

    std::cout << std::left << std::setw(12) << "seed" << std::setw(12) << "leach_hnd"
              << std::setw(12) << "monch_hnd" << std::setw(12) << "leach_lnd" << std::setw(12)
              << "monch_lnd" << std::setw(14) << "leach_pkts" << std::setw(14) << "monch_pkts"
              << "\n";
    std::vector<long long> lh, mh, ll, ml, lp, mp;
    for (const Pair& p : pairs) {
        lh.push_back(round_or_cap(p.leach.half_nodes_death_round, p.leach));
        mh.push_back(round_or_cap(p.monch.half_nodes_death_round, p.monch));
        ll.push_back(round_or_cap(p.leach.last_node_death_round, p.leach));
        ml.push_back(round_or_cap(p.monch.last_node_death_round, p.monch));
        lp.push_back(p.leach.total_packets_to_bs);
        mp.push_back(p.monch.total_packets_to_bs);
        std::cout << std::left << std::setw(12) << p.seed << std::setw(12) << lh.back()
                  << std::setw(12) << mh.back() << std::setw(12) << ll.back() << std::setw(12)
                  << ml.back() << std::setw(14) << lp.back() << std::setw(14) << mp.back()
                  << "\n";
    }
    if (opt.seed_count > 1) {
        std::cout << std::left << std::setw(12) << "median" << std::setw(12) << median(lh)
                  << std::setw(12) << median(mh) << std::setw(12) << median(ll) << std::setw(12)
                  << median(ml) << std::setw(14) << median(lp) << std::setw(14) << median(mp)
                  << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"LEACH / MONCH wireless sensor network simulator"};
    app.require_subcommand(1);

    CliOptions opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", opt.config_path, "config file path")->required();
        sub->add_option("--seed", opt.seed, "seed override");
        sub->add_option("--seeds", opt.seed_count, "number of seeds to sweep")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--max-rounds", opt.max_rounds, "round-limit override");
    };
    CLI::App* run = app.add_subcommand("run", "run one simulation");
    CLI::App* compare = app.add_subcommand("compare", "run both protocols on shared deployments");
    add_common(run);
    add_common(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run->parsed() ? cmd_run(opt) : cmd_compare(opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
