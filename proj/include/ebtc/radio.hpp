#pragma once

#include <cstdint>

namespace ebtc::radio {

// First-order radio model: a fixed electronics cost per bit on both ends, plus
// an amplifier term that is d^2 (free space) below the crossover distance and
// d^4 (multipath) above it.
struct RadioParams {
    double e_elec = 50e-9;     // J/bit
    double eps_fs = 10e-12;    // J/bit/m^2
    double eps_mp = 0.0013e-12; // J/bit/m^4

    // d0 = sqrt(eps_fs / eps_mp); the two amplifier branches agree here.
    double crossover_distance() const;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

// Per-bit transmit energy at distance d (J/bit). This is also the unit used
// for link and node transmit powers throughout the library.
double tx_energy_per_bit(const RadioParams& params, double distance);

// E_S: energy to transmit `bits` over `distance`. Requires bits > 0, distance >= 0.
double energy_send(const RadioParams& params, std::uint64_t bits, double distance);

// E_R: energy to receive `bits`. Requires bits > 0.
double energy_recv(const RadioParams& params, std::uint64_t bits);

}  // namespace ebtc::radio
