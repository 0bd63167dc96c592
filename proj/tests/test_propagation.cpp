#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "rfp/propagation.hpp"

using namespace rfp;
using rfp::test::rel_err;

namespace {

const PropagationParams kUrban07{3.0, 0.7, 2.0, 32.4};  // 0.7 GHz deployment kernel

}  // namespace

TEST_SUITE("propagation") {

TEST_CASE("path gain reference points") {
    CHECK(path_gain(1.0, PropagationParams(2.0, 1.0, 2.0, 0.0)) == 1.0);
    CHECK(rel_err(path_gain(500.0, kUrban07), 9.394937752443375e-12) < 1e-12);
    // Pure power law in distance.
    const double ratio = path_gain(200.0, kUrban07) / path_gain(100.0, kUrban07);
    CHECK(rel_err(ratio, 1.0 / 8.0) < 1e-12);
}

TEST_CASE("received power reference points") {
    CHECK(received_power(PowerWatts(0.0), 123.0, kUrban07).value == 0.0);
    // Power chosen so the cell edge at 500 m sees exactly -90 dBm.
    const double pe = 1e-12 * std::pow(500.0, 3.0) * 0.49 * db_to_linear(GainDb(32.4));
    CHECK(rel_err(received_power(PowerWatts(pe), 500.0, kUrban07).value, 1e-12) < 1e-12);
    CHECK(rel_err(received_power(PowerWatts(0.10644030076089929), 16.0, kUrban07).value,
                  3.0517578125e-08) < 1e-12);
}

TEST_CASE("received power is linear in the emitted power") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> kdist(0.0, 50.0);
    std::uniform_real_distribution<double> ddist(1.0, 1000.0);
    for (int i = 0; i < 200; ++i) {
        const double k = kdist(rng);
        const double d = ddist(rng);
        const double base = received_power(PowerWatts(0.3), d, kUrban07).value;
        const double scaled = received_power(PowerWatts(0.3 * k), d, kUrban07).value;
        CHECK(std::abs(scaled - k * base) <= 1e-12 * std::max(scaled, 1e-300));
    }
}

TEST_CASE("path gain decreases strictly with distance") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> gdist(2.0, 4.0);
    std::uniform_real_distribution<double> ddist(0.1, 5000.0);
    for (int i = 0; i < 200; ++i) {
        const PropagationParams params(gdist(rng), 3.7, 2.0, 32.4);
        double d1 = ddist(rng);
        double d2 = ddist(rng);
        if (d1 == d2) continue;
        if (d1 > d2) std::swap(d1, d2);
        CHECK(path_gain(d1, params) > path_gain(d2, params));
    }
}

TEST_CASE("exponent 2 with the 32.4 dB baseline reproduces free-space loss") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ddist(1.0, 10000.0);
    std::uniform_real_distribution<double> fdist(0.4, 6.0);
    for (int i = 0; i < 100; ++i) {
        const double d = ddist(rng);
        const double f = fdist(rng);
        const PropagationParams params(2.0, f, 2.0, 32.4);
        const double loss_db = -10.0 * std::log10(path_gain(d, params));
        const double fspl_db = 32.4 + 20.0 * std::log10(f) + 20.0 * std::log10(d);
        CHECK(std::abs(loss_db - fspl_db) < 1e-9);
    }
}

TEST_CASE("construction and evaluation domain errors") {
    CHECK_THROWS_AS(PropagationParams(1.9, 1.0, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PropagationParams(4.1, 1.0, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PropagationParams(3.0, 0.0, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PropagationParams(3.0, 1.0, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(path_gain(0.0, kUrban07), std::domain_error);
    CHECK_THROWS_AS(path_gain(-5.0, kUrban07), std::domain_error);
}

}  // TEST_SUITE
