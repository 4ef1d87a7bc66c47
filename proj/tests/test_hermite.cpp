// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "qpair/hermite.hpp"

#include "oracle_util.hpp"

using qpair::hermite_orbital_series;
using qpair::hermite_orbital_value;

TEST_CASE("ground state at the origin is pi^{-1/4}") {
    CHECK(hermite_orbital_value(0, 1.0, 0.0) ==
          doctest::Approx(0.75112554446494248286).epsilon(1e-15));
}

TEST_CASE("odd orders vanish at the origin") {
    for (int m : {1, 3, 7, 31})
        CHECK(hermite_orbital_value(m, 1.0, 0.0) == 0.0);
    CHECK(hermite_orbital_value(1, 3.7, 0.0) == 0.0);
}

TEST_CASE("m = 30 against a 40-digit evaluation of the explicit formula") {
    // (2/pi)^{1/4} (2^30 30!)^{-1/2} e^{-1.69} H_30(1.3 sqrt(2)),
    // evaluated with arbitrary-precision arithmetic and frozen here.
    const double reference = 0.030648120832917030262;
    const double v = hermite_orbital_value(30, 2.0, 1.3);
    CHECK(std::abs(v - reference) / std::abs(reference) < 1e-10);
}

TEST_CASE("low orders match their closed forms") {
    // phi_2(t) = pi^{-1/4} (2 t^2 - 1) / sqrt(2) e^{-t^2/2}, t = sqrt(alpha) u
    const double alpha = 1.7, u = 0.45;
    const double t = std::sqrt(alpha) * u;
    const double damp = std::pow(alpha, 0.25) * 0.75112554446494248286 *
                        std::exp(-0.5 * t * t);
    CHECK(hermite_orbital_value(2, alpha, u) ==
          doctest::Approx(damp * (2.0 * t * t - 1.0) / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(hermite_orbital_value(3, alpha, u) ==
          doctest::Approx(damp * t * (2.0 * t * t - 3.0) / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("orthonormality under Gauss-Hermite quadrature up to order 40") {
    // integral phi_m phi_n du = (1/sqrt(alpha)) sum_i w_i (phi_m phi_n e^{t^2})(t_i)
    const double alpha = 2.3;
    const auto rule = testutil::gauss_hermite(64);
    std::vector<std::vector<double>> phi(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        hermite_orbital_series(40, alpha, rule.nodes[i] / std::sqrt(alpha), phi[i]);
    double worst = 0.0;
    for (int m = 0; m <= 40; ++m)
        for (int n = m; n <= 40; ++n) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double t = rule.nodes[i];
                acc += rule.weights[i] * phi[i][m] * phi[i][n] * std::exp(t * t);
            }
            acc /= std::sqrt(alpha);
            worst = std::max(worst, std::abs(acc - (m == n ? 1.0 : 0.0)));
        }
    CHECK(worst < 1e-10);
}

TEST_CASE("series pass agrees with single-order evaluation") {
    std::vector<double> series;
    hermite_orbital_series(25, 0.8, -1.1, series);
    REQUIRE(series.size() == 26);
    for (int m : {0, 1, 7, 25})
        CHECK(series[static_cast<std::size_t>(m)] ==
              doctest::Approx(hermite_orbital_value(m, 0.8, -1.1)).epsilon(1e-15));
}

TEST_CASE("high orders stay finite and bounded") {
    for (int m : {150, 400, 800}) {
        const double v = hermite_orbital_value(m, 1.0, 1.7);
        CHECK(std::isfinite(v));
        CHECK(std::abs(v) < 1.0);
    }
    // far tail underflows cleanly to zero
    CHECK(hermite_orbital_value(10, 1.0, 60.0) == 0.0);
}

TEST_CASE("orbital objects validate and carry unit norm") {
    using qpair::HermiteOrbital;
    CHECK_THROWS_AS(HermiteOrbital(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(HermiteOrbital(2, 0.0), std::domain_error);
    // L2 norm over the line by Gauss-Hermite quadrature
    const auto rule = testutil::gauss_hermite(64);
    for (const auto orb : {HermiteOrbital(0, 1.0), HermiteOrbital(7, 0.4),
                           HermiteOrbital(33, 5.2)}) {
        double norm = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = rule.nodes[i] / std::sqrt(orb.alpha);
            const double v = orb.value(u);
            norm += rule.weights[i] * v * v * std::exp(rule.nodes[i] * rule.nodes[i]);
        }
        norm /= std::sqrt(orb.alpha);
        CHECK(std::abs(norm - 1.0) < 1e-10);
    }
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(hermite_orbital_value(-1, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(hermite_orbital_value(0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(hermite_orbital_value(0, -2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(
        hermite_orbital_value(0, 1.0, std::numeric_limits<double>::quiet_NaN()),
        std::domain_error);
    CHECK_THROWS_AS(
        hermite_orbital_value(0, 1.0, std::numeric_limits<double>::infinity()),
        std::domain_error);
}
