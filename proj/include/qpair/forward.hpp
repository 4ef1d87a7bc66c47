// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form ground state of two particles in a common harmonic trap of
// frequency omega0 coupled by the harmonic pair interaction
//
//   v(x1 - x2) = lambda (omega0^2 / 2) (x1 - x2)^2 .
//
// Normal modes separate exactly: the centre of mass keeps omega1 = omega0,
// the relative coordinate stiffens (or softens) to omega2 = omega0
// sqrt(1 + 2 lambda); lambda > -1/2 keeps the relative mode bound. Both
// one-body reduced density matrices are Gaussian and fully described by
//
//   omega_s     = 2 w1 w2 / (w1 + w2)            (position-density decay)
//   d           = (w1 - w2)^2 / (4 (w1 + w2))    (non-idempotency)
//   omega_cap_s = omega_s + 2 d = (w1 + w2) / 2  (momentum-density decay).

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qpair/mehler.hpp"

namespace qpair {

// Trap frequency and coupling of the interacting pair, atomic units.
struct ConfinedPair {
    double omega0;
    double lambda;

    ConfinedPair(double omega0_, double lambda_) : omega0(omega0_), lambda(lambda_) {
        if (!(omega0 > 0.0) || !std::isfinite(omega0))
            throw std::domain_error("ConfinedPair: omega0 must be positive");
        if (!(lambda > -0.5) || !std::isfinite(lambda))
            throw std::domain_error("ConfinedPair: coupling must exceed -1/2");
    }
};

struct NormalModes {
    double omega1; // centre-of-mass
    double omega2; // relative
};

inline NormalModes normal_modes(const ConfinedPair& p) {
    return {p.omega0, p.omega0 * std::sqrt(1.0 + 2.0 * p.lambda)};
}

// Gaussian parameters of the one-body reduced density matrices.
struct GaussianModelParams {
    double omega_s;
    double d;           // >= 0, zero iff the pair is uncorrelated
    double omega_cap_s; // omega_s + 2 d

    GaussianModelParams(double omega_s_, double d_)
        : omega_s(omega_s_), d(d_), omega_cap_s(omega_s_ + 2.0 * d_) {
        if (!(omega_s > 0.0) || !std::isfinite(omega_s))
            throw std::domain_error("GaussianModelParams: omega_s must be positive");
        if (!(d >= 0.0) || !std::isfinite(d))
            throw std::domain_error("GaussianModelParams: d must be non-negative");
    }
};

inline GaussianModelParams model_params(const ConfinedPair& p) {
    const auto [w1, w2] = normal_modes(p);
    const double ws = 2.0 * w1 * w2 / (w1 + w2);
    const double d = 0.25 * (w1 - w2) * (w1 - w2) / (w1 + w2);
    return {ws, d};
}

// Position-representation one-body matrix,
//   Gamma(x1, x2) = phi_s(x1) phi_s(x2) e^{-d (x1-x2)^2 / 2},
// with phi_s the omega_s Gaussian orbital. Diagonal is the density N(x).
inline double gamma_position(double x1, double x2, const GaussianModelParams& g) {
    if (!std::isfinite(x1) || !std::isfinite(x2))
        throw std::domain_error("gamma_position: non-finite argument");
    const double dx = x1 - x2;
    return std::sqrt(g.omega_s / std::numbers::pi) *
           std::exp(-0.5 * g.omega_s * (x1 * x1 + x2 * x2) - 0.5 * g.d * dx * dx);
}

// Momentum-representation one-body matrix; the two-variable Fourier
// transform of gamma_position. Diagonal is the momentum density F(k).
inline double gamma_momentum(double k1, double k2, const GaussianModelParams& g) {
    if (!std::isfinite(k1) || !std::isfinite(k2))
        throw std::domain_error("gamma_momentum: non-finite argument");
    const double det = g.omega_s * g.omega_cap_s;
    return std::exp(-0.5 * (k1 * k1 + k2 * k2) * (g.omega_s + g.d) / det +
                    g.d * k1 * k2 / det) /
           std::sqrt(std::numbers::pi * g.omega_cap_s);
}

// The two marginal densities, each integrating to one.
struct MarginalDensities {
    double omega_s;
    double omega_cap_s;

    double position(double x) const { return gaussian_density_position(x, omega_s); }
    double momentum(double k) const { return gaussian_density_momentum(k, omega_cap_s); }
};

inline MarginalDensities marginal_densities(const GaussianModelParams& g) {
    return {g.omega_s, g.omega_cap_s};
}

// Two-mode zero-point energy (w1 + w2)/2.
inline double ground_energy_H(const ConfinedPair& p) {
    const auto m = normal_modes(p);
    return 0.5 * (m.omega1 + m.omega2);
}

struct KineticEnergies {
    double k1; // gradient functional of sqrt(N): omega_s / 4
    double k2; // second moment of F:            omega_cap_s / 4
};

inline KineticEnergies kinetic_energies(const GaussianModelParams& g) {
    return {0.25 * g.omega_s, 0.25 * g.omega_cap_s};
}

// Normalized two-body ground-state amplitude in normal-mode form,
//   Psi(x1,x2) = (w1 w2 / pi^2)^{1/4} e^{-w1 R^2/2 - w2 r^2/2},
// R = (x1+x2)/sqrt(2), r = (x1-x2)/sqrt(2). Exchange symmetric.
struct PairWavefunction {
    double omega1;
    double omega2;
    double norm; // (w1 w2 / pi^2)^{1/4}

    double operator()(double x1, double x2) const {
        constexpr double inv_sqrt2 = 0.70710678118654752440;
        const double cm = (x1 + x2) * inv_sqrt2;
        const double rel = (x1 - x2) * inv_sqrt2;
        return norm * std::exp(-0.5 * (omega1 * cm * cm + omega2 * rel * rel));
    }
};

inline PairWavefunction pair_ground_state(const ConfinedPair& p) {
    const auto m = normal_modes(p);
    return {m.omega1, m.omega2,
            std::pow(m.omega1 * m.omega2 / (std::numbers::pi * std::numbers::pi), 0.25)};
}

} // namespace qpair
