#ifndef WSNSIM_CORE_HPP
#define WSNSIM_CORE_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsnsim/rng.hpp"

namespace wsnsim {

struct Position {
    double x = 0.0; // meters
    double y = 0.0;
};

inline double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct FieldGeometry {
    double yard_length = 100.0; // meters
    double yard_width = 100.0;
    Position bs_position{50.0, 100.0}; // default: on-field edge midpoint
};

// Radio energy constants. Note: this follows the source model's naming where
// e_amp pairs with the d^2 (short-range) term and e_fs with the d^4
// (long-range) term, which is the reverse of the classical first-order radio
// model convention.
struct RadioParams {
    double e_elec = 50e-9;   // J/bit, transmit/receive electronics (ETX)
    double e_da = 5e-9;      // J/bit, aggregation
    double e_amp = 100e-12;  // J/bit/m^2
    double e_fs = 0.013e-12; // J/bit/m^4
    uint32_t packet_len = 6400;     // bits, aggregated CH->BS packet
    uint32_t node_packet_len = 200; // bits, member->CH packet
};

struct SensorNode {
    int id = 0;
    Position position;
    double residual_energy = 0.0; // joules
    bool alive = true;
    int rounds_since_ch = 0; // epoch bookkeeping for LEACH election
    bool is_ch_this_round = false;
};

enum class Protocol { LEACH, MONCH };

struct SimConfig {
    int node_count = 100;
    FieldGeometry field;
    RadioParams radio;
    double initial_energy = 2.0; // joules per node
    Protocol protocol = Protocol::LEACH;
    double ch_probability = 0.05; // LEACH's p
    int frames_per_round = 4;
    int max_rounds = 5000;
    uint64_t seed = 1;
    double pt = M_PI; // dimensionless constant in the head-count formula
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Returns the config unchanged iff every invariant holds; otherwise throws
// ConfigError naming the first violated invariant.
inline const SimConfig& validate_config(const SimConfig& cfg) {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(cfg.field.bs_position.x) || !finite(cfg.field.bs_position.y))
        throw ConfigError("non-finite bs position");
    if (!(cfg.field.yard_length > 0.0) || !(cfg.field.yard_width > 0.0))
        throw ConfigError("nonpositive yard");
    if (std::hypot(cfg.field.bs_position.x, cfg.field.bs_position.y) <= 0.0)
        throw ConfigError("bs at origin");
    if (!(cfg.radio.e_elec > 0.0) || !(cfg.radio.e_da > 0.0) ||
        !(cfg.radio.e_amp > 0.0) || !(cfg.radio.e_fs > 0.0))
        throw ConfigError("nonpositive radio energy");
    if (cfg.radio.packet_len == 0 || cfg.radio.node_packet_len == 0)
        throw ConfigError("nonpositive packet length");
    if (!(cfg.initial_energy > 0.0))
        throw ConfigError("nonpositive initial energy");
    if (cfg.node_count <= 0)
        throw ConfigError("nonpositive node count");
    if (!(cfg.ch_probability > 0.0 && cfg.ch_probability < 1.0))
        throw ConfigError("ch probability outside (0,1)");
    if (cfg.frames_per_round < 1)
        throw ConfigError("nonpositive frames per round");
    if (cfg.max_rounds < 0)
        throw ConfigError("negative max rounds");
    if (!(cfg.pt > 0.0))
        throw ConfigError("nonpositive pt");
    return cfg;
}

// Uniform deployment over the field. Pure function of (config, rng state):
// node i consumes exactly two draws (x, then y), in id order.
inline std::vector<SensorNode> deploy_nodes(const SimConfig& cfg, SplitMix64& rng) {
    std::vector<SensorNode> nodes;
    nodes.reserve(static_cast<size_t>(cfg.node_count));
    const int epoch = static_cast<int>(std::floor(1.0 / cfg.ch_probability));
    for (int i = 0; i < cfg.node_count; ++i) {
        SensorNode n;
        n.id = i;
        n.position.x = rng.uniform(0.0, cfg.field.yard_length);
        n.position.y = rng.uniform(0.0, cfg.field.yard_width);
        n.residual_energy = cfg.initial_energy;
        n.alive = true;
        n.rounds_since_ch = epoch; // never served: immediately eligible
        n.is_ch_this_round = false;
        nodes.push_back(n);
    }
    return nodes;
}

namespace detail {

inline std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace detail

// Key-value config file: one `key = value` per line, `#` comments.
// Every key is required; unknown keys are an error.
inline SimConfig parse_config_text(std::istream& in, const std::string& origin = "<stream>") {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = detail::trim(line.substr(0, eq));
        std::string val = detail::trim(line.substr(eq + 1));
        if (kv.count(key))
            throw ConfigError(origin + ": duplicate key '" + key + "'");
        kv[key] = val;
    }

    static const char* known[] = {
        "node_count", "yard_length", "yard_width", "bs_x", "bs_y",
        "e_elec", "e_da", "e_amp", "e_fs", "packet_len", "node_packet_len",
        "initial_energy", "protocol", "ch_probability", "frames_per_round",
        "max_rounds", "seed", "pt"};
    for (const auto& [key, val] : kv) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) { ok = true; break; }
        if (!ok) throw ConfigError(origin + ": unknown key '" + key + "'");
    }
    for (const char* k : known)
        if (!kv.count(k)) throw ConfigError(origin + ": missing key '" + std::string(k) + "'");

    auto as_double = [&](const char* k) {
        try {
            size_t pos = 0;
            double v = std::stod(kv[k], &pos);
            if (pos != kv[k].size()) throw std::invalid_argument(kv[k]);
            return v;
        } catch (const std::exception&) {
            throw ConfigError(origin + ": bad number for '" + std::string(k) + "': " + kv[k]);
        }
    };
    auto as_int = [&](const char* k) {
        double v = as_double(k);
        long long r = std::llround(v);
        if (static_cast<double>(r) != v)
            throw ConfigError(origin + ": expected integer for '" + std::string(k) + "': " + kv[k]);
        return r;
    };

    SimConfig cfg;
    cfg.node_count = static_cast<int>(as_int("node_count"));
    cfg.field.yard_length = as_double("yard_length");
    cfg.field.yard_width = as_double("yard_width");
    cfg.field.bs_position = {as_double("bs_x"), as_double("bs_y")};
    cfg.radio.e_elec = as_double("e_elec");
    cfg.radio.e_da = as_double("e_da");
    cfg.radio.e_amp = as_double("e_amp");
    cfg.radio.e_fs = as_double("e_fs");
    cfg.radio.packet_len = static_cast<uint32_t>(as_int("packet_len"));
    cfg.radio.node_packet_len = static_cast<uint32_t>(as_int("node_packet_len"));
    cfg.initial_energy = as_double("initial_energy");
    std::string proto = kv["protocol"];
    if (proto == "leach")
        cfg.protocol = Protocol::LEACH;
    else if (proto == "monch")
        cfg.protocol = Protocol::MONCH;
    else
        throw ConfigError(origin + ": protocol must be 'leach' or 'monch', got '" + proto + "'");
    cfg.ch_probability = as_double("ch_probability");
    cfg.frames_per_round = static_cast<int>(as_int("frames_per_round"));
    cfg.max_rounds = static_cast<int>(as_int("max_rounds"));
    cfg.seed = static_cast<uint64_t>(as_int("seed"));
    cfg.pt = as_double("pt");
    validate_config(cfg);
    return cfg;
}

inline SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config_text(in, path);
}

} // namespace wsnsim

#endif
