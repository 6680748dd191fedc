#pragma once

#include "ebtc/world.hpp"

namespace ebtc {

// Energies feeding the cost of a single link (i, j). "m" is the data packet,
// "mp" the acknowledgement frame.
struct LinkCostInputs {
    double s_i = 0.0;           // residual energy at i (J)
    double s_j = 0.0;           // residual energy at j (J)
    double e_send_ij_m = 0.0;   // E_S(i, j, m)
    double e_send_ji_m = 0.0;   // E_S(j, i, m)
    double e_send_ij_mp = 0.0;  // E_S(i, j, m')
    double e_send_ji_mp = 0.0;  // E_S(j, i, m')
    double e_recv_m = 0.0;      // E_R(m)
    double e_recv_mp = 0.0;     // E_R(m')

    // Same link seen from j's side.
    LinkCostInputs swapped() const;
};

// Gathers the inputs for link (i, j) from the current world state.
LinkCostInputs link_cost_inputs(const World& world, NodeId i, NodeId j);

enum class Direction { IToJ, JToI };

// C: the larger of the two endpoints' per-packet depletion fractions when a
// data packet crosses the link in `direction` and is acknowledged.
double directed_cost(const LinkCostInputs& in, Direction direction);

// Z: packets the link can carry in `direction` before an endpoint runs dry.
// Computed as a min of packet counts; equals 1 / directed_cost.
double link_lifetime(const LinkCostInputs& in, Direction direction);

struct EdgeWeight {
    double c_ij = 0.0;
    double c_ji = 0.0;
    double w = 0.0;  // max(c_ij, c_ji), shared by both directions
    double z_ij = 0.0;
    double z_ji = 0.0;
};

EdgeWeight edge_weight(const LinkCostInputs& in);

}  // namespace ebtc
