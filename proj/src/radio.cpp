#include "ebtc/radio.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ebtc::radio {

double RadioParams::crossover_distance() const {
    return std::sqrt(eps_fs / eps_mp);
}

void RadioParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string("radio parameter ") + name +
                                        " must be finite and > 0");
        }
    };
    positive(e_elec, "e_elec");
    positive(eps_fs, "eps_fs");
    positive(eps_mp, "eps_mp");

    const double d0 = crossover_distance();
    const double fs = eps_fs * d0 * d0;
    const double mp = eps_mp * d0 * d0 * d0 * d0;
    if (std::abs(fs - mp) > 1e-12 * fs) {
        throw std::invalid_argument("radio amplifier branches are discontinuous at d0");
    }
}

double tx_energy_per_bit(const RadioParams& params, double distance) {
    if (!(distance >= 0.0)) {
        throw std::invalid_argument("transmit distance must be >= 0");
    }
    const double d2 = distance * distance;
    if (distance < params.crossover_distance()) {
        return params.e_elec + params.eps_fs * d2;
    }
    return params.e_elec + params.eps_mp * d2 * d2;
}

double energy_send(const RadioParams& params, std::uint64_t bits, double distance) {
    if (bits == 0) {
        throw std::invalid_argument("energy_send: packet size must be > 0 bits");
    }
    return static_cast<double>(bits) * tx_energy_per_bit(params, distance);
}

double energy_recv(const RadioParams& params, std::uint64_t bits) {
    if (bits == 0) {
        throw std::invalid_argument("energy_recv: packet size must be > 0 bits");
    }
    return static_cast<double>(bits) * params.e_elec;
}

}  // namespace ebtc::radio
