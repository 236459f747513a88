#ifndef WSNSIM_ENERGY_HPP
#define WSNSIM_ENERGY_HPP

#include <cmath>
#include <cstdint>
#include <map>

#include "wsnsim/core.hpp"

namespace wsnsim {

// Distance at which the transmit amplifier switches from the d^2 term to the
// d^4 term. The two branches are equal here by construction.
inline double distance_threshold(const RadioParams& radio) {
    return std::sqrt(radio.e_amp / radio.e_fs);
}

// Transmit cost for `bits` over `dist` meters. The boundary dist == do falls
// into the d^4 branch; the function is continuous there so the value is the
// same either way.
inline double tx_energy(const RadioParams& radio, uint64_t bits, double dist) {
    const double k = static_cast<double>(bits);
    if (dist < distance_threshold(radio))
        return radio.e_elec * k + radio.e_amp * k * dist * dist;
    return radio.e_elec * k + radio.e_fs * k * dist * dist * dist * dist;
}

inline double rx_energy(const RadioParams& radio, uint64_t bits) {
    return radio.e_elec * static_cast<double>(bits);
}

inline double aggregation_energy(const RadioParams& radio, uint64_t bits) {
    return radio.e_da * static_cast<double>(bits);
}

// Per-head and per-node unit energies feeding the optimal head count only.
// Both carry a distance-free e_fs * packet_len term, kept verbatim from the
// source model; it is numerically negligible (~8e-11 J at the defaults) and
// does not enter the steady-state ledger.
inline double head_unit_energy(const RadioParams& radio) {
    const double k = static_cast<double>(radio.packet_len);
    return (radio.e_elec + radio.e_da) * k + radio.e_fs * k;
}

inline double node_unit_energy(const RadioParams& radio) {
    return radio.e_elec * static_cast<double>(radio.node_packet_len) +
           radio.e_fs * static_cast<double>(radio.packet_len);
}

// Running account of consumed energy. `overdraft` accumulates the part of a
// final transmission a dying node could not pay; consumed entries record only
// energy the node actually had, so residual + total_consumed stays equal to
// the deployed total.
class EnergyLedger {
public:
    // Returns the amount actually debited (min of cost and available).
    double charge(int node_id, double available, double cost) {
        double paid = cost <= available ? cost : available;
        per_node_[node_id] += paid;
        total_ += paid;
        if (cost > available) overdraft_ += cost - available;
        return paid;
    }

    double total_consumed() const { return total_; }
    double overdraft() const { return overdraft_; }
    const std::map<int, double>& per_node_consumed() const { return per_node_; }

private:
    std::map<int, double> per_node_;
    double total_ = 0.0;
    double overdraft_ = 0.0;
};

} // namespace wsnsim

#endif
