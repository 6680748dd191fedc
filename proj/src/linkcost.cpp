#include "ebtc/linkcost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ebtc {

namespace {

void require_live(const LinkCostInputs& in) {
    if (!(in.s_i > 0.0) || !(in.s_j > 0.0)) {
        throw std::invalid_argument("link cost requested for an endpoint with no residual energy");
    }
}

// Per-packet energy drawn from the sending and the receiving endpoint.
struct Drain {
    double sender;
    double receiver;
};

Drain drain(const LinkCostInputs& in, Direction direction) {
    if (direction == Direction::IToJ) {
        return {in.e_send_ij_m + in.e_recv_mp, in.e_recv_m + in.e_send_ji_mp};
    }
    return {in.e_send_ji_m + in.e_recv_mp, in.e_recv_m + in.e_send_ij_mp};
}

}  // namespace

LinkCostInputs LinkCostInputs::swapped() const {
    return LinkCostInputs{s_j, s_i, e_send_ji_m, e_send_ij_m, e_send_ji_mp, e_send_ij_mp, e_recv_m, e_recv_mp};
}

LinkCostInputs link_cost_inputs(const World& world, NodeId i, NodeId j) {
    const auto& radio = world.radio();
    const auto m = world.config().packet_bits();
    const auto mp = world.config().ack_bits();
    const double d = world.distance(i, j);
    LinkCostInputs in;
    in.s_i = world.node(i).residual_energy;
    in.s_j = world.node(j).residual_energy;
    in.e_send_ij_m = radio::energy_send(radio, m, d);
    in.e_send_ji_m = in.e_send_ij_m;
    in.e_send_ij_mp = radio::energy_send(radio, mp, d);
    in.e_send_ji_mp = in.e_send_ij_mp;
    in.e_recv_m = radio::energy_recv(radio, m);
    in.e_recv_mp = radio::energy_recv(radio, mp);
    return in;
}

double directed_cost(const LinkCostInputs& in, Direction direction) {
    require_live(in);
    const Drain e = drain(in, direction);
    const double s_sender = direction == Direction::IToJ ? in.s_i : in.s_j;
    const double s_receiver = direction == Direction::IToJ ? in.s_j : in.s_i;
    return std::max(e.sender / s_sender, e.receiver / s_receiver);
}

double link_lifetime(const LinkCostInputs& in, Direction direction) {
    require_live(in);
    const Drain e = drain(in, direction);
    const double s_sender = direction == Direction::IToJ ? in.s_i : in.s_j;
    const double s_receiver = direction == Direction::IToJ ? in.s_j : in.s_i;
    return std::min(s_receiver / e.receiver, s_sender / e.sender);
}

EdgeWeight edge_weight(const LinkCostInputs& in) {
    EdgeWeight out;
    out.c_ij = directed_cost(in, Direction::IToJ);
    out.c_ji = directed_cost(in, Direction::JToI);
    out.z_ij = link_lifetime(in, Direction::IToJ);
    out.z_ji = link_lifetime(in, Direction::JToI);
    out.w = std::max(out.c_ij, out.c_ji);
    return out;
}

}  // namespace ebtc
