#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "relaync/model.hpp"

using namespace relaync;

TEST_CASE("energy_rate matches the per-scheme slot formulas") {
    const EnergyParams ones(1, 1, 1, 1);
    // indicator zeroes e_rx at alpha = 1; (1-alpha) zeroes e_nc
    CHECK(energy_rate(Scheme::CodeRelayOnly, 1.0, ones) == doctest::Approx(1.0));
    // one for transmission, one for coding
    CHECK(energy_rate(Scheme::CodeSourceOnly, 1.0, ones) == doctest::Approx(2.0));
    CHECK(energy_rate(Scheme::CodeRelayOnly, 0.5, ones) == doctest::Approx(2.0));
    CHECK(energy_rate(Scheme::CodeBoth, 1.0, ones) == doctest::Approx(2.0));
    CHECK(energy_rate(Scheme::CodeBoth, 0.5, ones) == doctest::Approx(2.5));
    CHECK(energy_rate(Scheme::CodeSourceOnly, 0.5, ones) == doctest::Approx(2.0));
}

TEST_CASE("energy_rate is monotone nondecreasing in each energy field") {
    const double alphas[] = {0.0, 0.3, 0.7, 1.0};
    const Scheme schemes[] = {Scheme::CodeBoth, Scheme::CodeRelayOnly,
                              Scheme::CodeSourceOnly};
    for (Scheme s : schemes)
        for (double a : alphas) {
            const EnergyParams base(1, 1, 1, 1);
            const double v = energy_rate(s, a, base);
            CHECK(energy_rate(s, a, EnergyParams(2, 1, 1, 1)) >= v);
            CHECK(energy_rate(s, a, EnergyParams(1, 2, 1, 1)) >= v);
            CHECK(energy_rate(s, a, EnergyParams(1, 1, 2, 1)) >= v);
            CHECK(energy_rate(s, a, EnergyParams(1, 1, 1, 2)) >= v);
        }
}

TEST_CASE("at alpha = 1 the reception term vanishes for every scheme") {
    for (Scheme s : {Scheme::CodeBoth, Scheme::CodeRelayOnly, Scheme::CodeSourceOnly})
        CHECK(energy_rate(s, 1.0, EnergyParams(1, 0, 1, 1)) ==
              energy_rate(s, 1.0, EnergyParams(1, 100, 1, 1)));
}

TEST_CASE("state validity predicates") {
    CHECK(is_valid_state({1, 1, 1}, Scheme::CodeRelayOnly, 3, 3));
    CHECK(is_valid_state({0, 0, 0}, Scheme::CodeRelayOnly, 1, 1));
    CHECK(is_valid_state({0, 0, 0}, Scheme::CodeSourceOnly, 1, 1));
    CHECK_FALSE(is_valid_state({0, 2, 1}, Scheme::CodeSourceOnly, 3, 2));  // k+l > x
    CHECK_FALSE(is_valid_state({2, 1, 1}, Scheme::CodeRelayOnly, 3, 3));   // sum > n
    CHECK(is_valid_state({2, 1, 0}, Scheme::CodeRelayOnly, 3, 3));
    CHECK_FALSE(is_valid_state({-1, 0, 0}, Scheme::CodeRelayOnly, 3, 3));
    CHECK(is_absorbing({2, 1, 0}, 3));
    CHECK_FALSE(is_absorbing({2, 0, 1}, 3));
}

TEST_CASE("construction rejects out-of-range and NaN inputs") {
    CHECK_THROWS_AS(ChannelParams(1.5, 0.5, 0.5), InvalidParameter);
    CHECK_THROWS_AS(ChannelParams(0.5, -0.1, 0.5), InvalidParameter);
    CHECK_THROWS_AS(ChannelParams(0.5, 0.5, std::nan("")), InvalidParameter);
    CHECK_THROWS_AS(EnergyParams(-1, 1, 1, 1), InvalidParameter);
    CHECK_THROWS_AS(EnergyParams(1, 1, 1, std::numeric_limits<double>::infinity()),
                    InvalidParameter);
    CHECK_THROWS_AS(SchemeConfig(Scheme::CodeRelayOnly, 0, 1, 0.5), InvalidParameter);
    CHECK_THROWS_AS(SchemeConfig(Scheme::CodeSourceOnly, 3, 4, 0.5), InvalidParameter);
    CHECK_THROWS_AS(SchemeConfig(Scheme::CodeSourceOnly, 3, 0, 0.5), InvalidParameter);
    CHECK_THROWS_AS(SchemeConfig(Scheme::CodeRelayOnly, 3, 3, 1.5), InvalidParameter);
    // the both-coding scheme requires 0 < alpha
    CHECK_THROWS_AS(SchemeConfig(Scheme::CodeBoth, 3, 3, 0.0), InvalidParameter);
    CHECK_NOTHROW(SchemeConfig(Scheme::CodeRelayOnly, 3, 3, 0.0));
}

TEST_CASE("scheme names round-trip") {
    for (Scheme s : {Scheme::CodeBoth, Scheme::CodeRelayOnly, Scheme::CodeSourceOnly})
        CHECK(scheme_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(scheme_from_string("relay"), InvalidParameter);
}
