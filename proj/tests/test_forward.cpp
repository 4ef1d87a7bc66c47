// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpair/forward.hpp"
#include "qpair/quadrature.hpp"

using namespace qpair;

TEST_CASE("normal modes") {
    const auto m0 = normal_modes(ConfinedPair(1.0, 0.0));
    CHECK(m0.omega1 == 1.0);
    CHECK(m0.omega2 == 1.0);
    const auto m1 = normal_modes(ConfinedPair(1.0, 1.5));
    CHECK(m1.omega1 == 1.0);
    CHECK(m1.omega2 == doctest::Approx(2.0).epsilon(1e-15));
    const auto m2 = normal_modes(ConfinedPair(2.0, -0.375));
    CHECK(m2.omega1 == 2.0);
    CHECK(m2.omega2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(ConfinedPair(1.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(ConfinedPair(1.0, -0.6), std::domain_error);
    CHECK_THROWS_AS(ConfinedPair(0.0, 0.5), std::domain_error);
}

TEST_CASE("model parameters, uncorrelated limit") {
    const auto g = model_params(ConfinedPair(1.0, 0.0));
    CHECK(g.omega_s == 1.0);
    CHECK(g.d == 0.0);
    CHECK(g.omega_cap_s == 1.0);
}

TEST_CASE("model parameters at lambda = 3/2") {
    const auto g = model_params(ConfinedPair(1.0, 1.5));
    CHECK(g.omega_s == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(g.d == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(g.omega_cap_s == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("model parameters against the numeric marginal of the wavefunction") {
    // integrate the two-body gaussian over one coordinate, in position and
    // momentum space, and compare against the claimed one-body gaussians
    const ConfinedPair pair(1.0, 1.5);
    const auto g = model_params(pair);
    const auto psi = pair_ground_state(pair);
    const auto grid = gauss_legendre(200, 9.0);
    for (double x : {0.0, 0.35, 1.1, -1.7}) {
        const double n_num =
            integrate(grid, [&](double y) { return psi(x, y) * psi(x, y); });
        CHECK(std::abs(n_num - gaussian_density_position(x, g.omega_s)) < 1e-10);
    }
    // momentum-space amplitude of the same state: mode scales invert
    const auto modes = normal_modes(pair);
    const double norm_k =
        std::pow(1.0 / (modes.omega1 * modes.omega2 * std::numbers::pi *
                        std::numbers::pi),
                 0.25);
    auto psi_k = [&](double k1, double k2) {
        const double kc = (k1 + k2) / std::numbers::sqrt2;
        const double kr = (k1 - k2) / std::numbers::sqrt2;
        return norm_k * std::exp(-0.5 * (kc * kc / modes.omega1 + kr * kr / modes.omega2));
    };
    for (double k : {0.0, 0.5, 1.3}) {
        const double f_num =
            integrate(grid, [&](double q) { return psi_k(k, q) * psi_k(k, q); });
        CHECK(std::abs(f_num - gaussian_density_momentum(k, g.omega_cap_s)) < 1e-10);
    }
}

TEST_CASE("softening limit: omega_s collapses, omega_cap_s stays finite") {
    const auto g = model_params(ConfinedPair(1.0, -0.5 + 1e-9));
    CHECK(g.omega_s < 1e-4);
    CHECK(g.omega_cap_s == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("position one-matrix") {
    const GaussianModelParams g(4.0 / 3.0, 1.0 / 12.0);
    // diagonal equals the density
    for (double x : {-1.2, 0.0, 0.8})
        CHECK(gamma_position(x, x, g) ==
              doctest::Approx(gaussian_density_position(x, g.omega_s)).epsilon(1e-14));
    // d = 0 factorizes into orbitals
    const GaussianModelParams g0(4.0 / 3.0, 0.0);
    const double phi1 = std::pow(g0.omega_s / std::numbers::pi, 0.25) *
                        std::exp(-0.5 * g0.omega_s * 0.7 * 0.7);
    const double phi2 = std::pow(g0.omega_s / std::numbers::pi, 0.25) *
                        std::exp(-0.5 * g0.omega_s * 0.2 * 0.2);
    CHECK(gamma_position(0.7, 0.2, g0) == doctest::Approx(phi1 * phi2).epsilon(1e-14));
    // frozen off-diagonal value at (1, -1)
    const double expected = std::sqrt(g.omega_s / std::numbers::pi) *
                            std::exp(-g.omega_s) * std::exp(-1.0 / 6.0);
    CHECK(gamma_position(1.0, -1.0, g) == doctest::Approx(expected).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_position(std::nan(""), 0.0, g), std::domain_error);
}

TEST_CASE("momentum one-matrix") {
    const GaussianModelParams g(4.0 / 3.0, 1.0 / 12.0);
    for (double k : {-0.9, 0.0, 1.4})
        CHECK(gamma_momentum(k, k, g) ==
              doctest::Approx(gaussian_density_momentum(k, g.omega_cap_s))
                  .epsilon(1e-14));
    const GaussianModelParams g0(2.0, 0.0);
    const double f1 = std::pow(1.0 / (std::numbers::pi * 2.0), 0.25) *
                      std::exp(-0.5 * 0.7 * 0.7 / 2.0);
    const double f2 = std::pow(1.0 / (std::numbers::pi * 2.0), 0.25) *
                      std::exp(-0.5 * 0.3 * 0.3 / 2.0);
    CHECK(gamma_momentum(0.7, 0.3, g0) == doctest::Approx(f1 * f2).epsilon(1e-14));
}

TEST_CASE("trace of the position one-matrix is one") {
    for (double lambda : {-0.4, 0.0, 1.5, 8.0}) {
        const auto g = model_params(ConfinedPair(1.0, lambda));
        const auto grid = gauss_legendre(250, 8.0 / std::sqrt(g.omega_s));
        const double tr =
            integrate(grid, [&](double x) { return gamma_position(x, x, g); });
        CHECK(tr == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("marginals normalize and carry the right moments") {
    const auto g = model_params(ConfinedPair(1.0, 1.5));
    const auto marg = marginal_densities(g);
    const auto gx = gauss_legendre(250, 8.0 / std::sqrt(g.omega_s));
    const auto gk = gauss_legendre(250, 8.0 * std::sqrt(g.omega_cap_s));
    CHECK(integrate(gx, [&](double x) { return marg.position(x); }) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate(gk, [&](double k) { return marg.momentum(k); }) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(marg.position(0.0) ==
          doctest::Approx(std::sqrt(g.omega_s / std::numbers::pi)).epsilon(1e-14));
    const double x2 =
        integrate(gx, [&](double x) { return x * x * marg.position(x); });
    CHECK(x2 == doctest::Approx(1.0 / (2.0 * g.omega_s)).epsilon(1e-10));
    const double k2 =
        integrate(gk, [&](double k) { return k * k * marg.momentum(k); });
    CHECK(k2 == doctest::Approx(g.omega_cap_s / 2.0).epsilon(1e-10));
}

TEST_CASE("ground energy") {
    CHECK(ground_energy_H(ConfinedPair(1.0, 0.0)) == 1.0);
    CHECK(ground_energy_H(ConfinedPair(1.0, 1.5)) ==
          doctest::Approx(1.5).epsilon(1e-15));
    // strong coupling: E / sqrt(1 + 2 lambda) -> omega0 / 2
    const double e = ground_energy_H(ConfinedPair(1.0, 1e6));
    CHECK(e / std::sqrt(1.0 + 2e6) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("kinetic energies and their ordering") {
    const auto g0 = model_params(ConfinedPair(1.0, 0.0));
    const auto k0 = kinetic_energies(g0);
    CHECK(k0.k1 == 0.25);
    CHECK(k0.k2 == 0.25);

    const auto g = model_params(ConfinedPair(1.0, 1.5));
    const auto k = kinetic_energies(g);
    CHECK(k.k1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(k.k2 == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK(k.k1 / k.k2 == doctest::Approx(8.0 / 9.0).epsilon(1e-14));

    for (double lambda : {-0.45, -0.1, 0.2, 3.0, 50.0}) {
        const auto kin = kinetic_energies(model_params(ConfinedPair(1.0, lambda)));
        CHECK(kin.k1 < kin.k2);
    }
}

TEST_CASE("kinetic energy k1 equals the numeric gradient functional") {
    // (1/2) integral |d sqrt(N)/dx|^2 dx via a five-point stencil
    const auto g = model_params(ConfinedPair(1.0, 1.5));
    const auto grid = gauss_legendre(300, 8.0 / std::sqrt(g.omega_s));
    const double h = 1e-3;
    auto amp = [&](double x) { return std::sqrt(gaussian_density_position(x, g.omega_s)); };
    const double k1 = integrate(grid, [&](double x) {
        const double d = (-amp(x + 2 * h) + 8 * amp(x + h) - 8 * amp(x - h) +
                          amp(x - 2 * h)) /
                         (12 * h);
        return 0.5 * d * d;
    });
    CHECK(std::abs(k1 - g.omega_s / 4.0) < 1e-10);
}

TEST_CASE("small-coupling continuity toward the single oscillator") {
    const auto g = model_params(ConfinedPair(1.0, 1e-12));
    CHECK(std::abs(g.omega_s - 1.0) < 1e-11);
    CHECK(std::abs(g.omega_cap_s - 1.0) < 1e-11);
    CHECK(g.d < 1e-12);
    const auto kin = kinetic_energies(g);
    CHECK(std::abs(kin.k1 - 0.25) < 1e-12);
    CHECK(std::abs(kin.k2 - 0.25) < 1e-12);
}

TEST_CASE("pair wavefunction is normalized and exchange symmetric") {
    const auto psi = pair_ground_state(ConfinedPair(1.0, 1.5));
    CHECK(psi(0.4, -1.2) == psi(-1.2, 0.4));
    const auto grid = gauss_legendre(150, 9.0);
    double norm = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double v = psi(grid.nodes[i], grid.nodes[j]);
            norm += grid.weights[i] * grid.weights[j] * v * v;
        }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(GaussianModelParams(0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(GaussianModelParams(1.0, -0.1), std::domain_error);
}
