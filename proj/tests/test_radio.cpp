#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ebtc/radio.hpp"

using namespace ebtc::radio;

TEST_CASE("zero distance costs only the electronics") {
    RadioParams p;
    CHECK(energy_send(p, 256, 0.0) == doctest::Approx(12.8e-6).epsilon(1e-12));
}

TEST_CASE("free-space send at 50 m") {
    RadioParams p;
    // 256 * (50e-9 + 10e-12 * 2500)
    CHECK(energy_send(p, 256, 50.0) == doctest::Approx(19.2e-6).epsilon(1e-12));
}

TEST_CASE("branches meet at the crossover distance") {
    RadioParams p;
    const double d0 = p.crossover_distance();
    CHECK(d0 == doctest::Approx(87.7058).epsilon(1e-5));
    const double fs = p.e_elec + p.eps_fs * d0 * d0;
    const double mp = p.e_elec + p.eps_mp * std::pow(d0, 4);
    CHECK(std::abs(fs - mp) <= 1e-12 * fs);
    CHECK(std::abs(tx_energy_per_bit(p, d0) - fs) <= 1e-12 * fs);
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("receive energy") {
    RadioParams p;
    CHECK(energy_recv(p, 256) == doctest::Approx(12.8e-6).epsilon(1e-12));
    CHECK_THROWS_AS(energy_recv(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(energy_send(p, 0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(energy_send(p, 8, -1.0), std::invalid_argument);
}

TEST_CASE("invalid parameters are rejected") {
    RadioParams p;
    p.eps_mp = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = RadioParams{};
    p.e_elec = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("properties over random sizes and distances") {
    RadioParams p;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> bits(1, 4096);
    std::uniform_real_distribution<double> dist(0.0, 300.0);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto a = bits(rng);
        const auto b = bits(rng);
        const double d = dist(rng);
        const double joint = energy_send(p, a + b, d);
        CHECK(std::abs(joint - energy_send(p, a, d) - energy_send(p, b, d)) <= 1e-15 * joint);
        CHECK(std::abs(energy_recv(p, a + b) - energy_recv(p, a) - energy_recv(p, b)) <= 1e-15 * energy_recv(p, a + b));

        // Strict monotonicity in distance and size.
        const double d2 = d + 0.5 + dist(rng);
        CHECK(energy_send(p, a, d) < energy_send(p, a, d2));
        CHECK(energy_send(p, a, d) < energy_send(p, a + 1, d));

        if (d > 0.0) {
            CHECK(energy_recv(p, a) < energy_send(p, a, d));
        }
    }
    CHECK(energy_recv(p, 77) == energy_send(p, 77, 0.0));
}
