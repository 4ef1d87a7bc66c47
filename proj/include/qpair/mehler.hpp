// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Diagonal Mehler expansions of norm-1 Gaussian densities.
//
// A Gaussian position density N(x) = sqrt(w_s/pi) e^{-w_s x^2} and its
// momentum partner F(k) = (pi W_s)^{-1/2} e^{-k^2/W_s} admit point-wise
// product expansions over one parametric oscillator basis,
//
//   N(x) = sum_m (1-Z) Z^m [phi_m(sqrt(wbar) x)]^2
//   F(k) = sum_m (1-Z) Z^m [phi_m(k / sqrt(wbar))]^2
//
// with shared geometric weights, provided
//
//   w_s = wbar (1-Z)/(1+Z)   and   1/W_s = (1/wbar)(1-Z)/(1+Z).
//
// The orbit parameter wbar sets the basis scale; Z in [0,1) fixes the
// weights. Truncating at order M leaves a tail of exactly Z^{M+1}.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qpair/hermite.hpp"

namespace qpair {

// Orbit parameter, weight ratio, and truncation order of one expansion.
struct MehlerSpectrum {
    double omega_bar;     // basis scale wbar > 0 (a.u.)
    double z;             // geometric ratio in [0,1)
    int truncation_order; // highest retained order M >= 0

    MehlerSpectrum(double omega_bar_, double z_, int truncation_order_)
        : omega_bar(omega_bar_), z(z_), truncation_order(truncation_order_) {
        if (!(omega_bar > 0.0) || !std::isfinite(omega_bar))
            throw std::domain_error("MehlerSpectrum: omega_bar must be positive");
        if (!(z >= 0.0) || !(z < 1.0))
            throw std::domain_error("MehlerSpectrum: z must lie in [0,1)");
        if (truncation_order < 0)
            throw std::domain_error("MehlerSpectrum: truncation order must be >= 0");
    }

    // Decay parameter of the position density this spectrum expands.
    double omega_s() const { return omega_bar * (1.0 - z) / (1.0 + z); }
    // Decay parameter of the momentum density (reciprocal constraint).
    double omega_cap_s() const { return omega_bar * (1.0 + z) / (1.0 - z); }
};

// Occupation weight P_m = (1-z) z^m.
inline double occupation(int m, double z) {
    if (m < 0)
        throw std::domain_error("occupation: order must be non-negative");
    if (!(z >= 0.0) || !(z < 1.0))
        throw std::domain_error("occupation: z must lie in [0,1)");
    return (1.0 - z) * std::pow(z, m);
}

// P_0..P_M for the given spectrum.
inline std::vector<double> occupations(const MehlerSpectrum& s) {
    std::vector<double> p(static_cast<std::size_t>(s.truncation_order) + 1);
    double zp = 1.0;
    for (auto& pm : p) {
        pm = (1.0 - s.z) * zp;
        zp *= s.z;
    }
    return p;
}

// Smallest M with z^{M+1} <= tol (M = 0 when z = 0), capped at `cap`.
inline int truncation_order_for(double z, double tol, int cap = 10000) {
    if (!(z >= 0.0) || !(z < 1.0))
        throw std::domain_error("truncation_order_for: z must lie in [0,1)");
    if (!(tol > 0.0))
        throw std::domain_error("truncation_order_for: tolerance must be positive");
    if (z == 0.0 || tol >= 1.0)
        return 0;
    const double estimate = std::ceil(std::log(tol) / std::log(z));
    if (estimate > static_cast<double>(cap)) // may exceed the int range
        return cap;
    int m = static_cast<int>(estimate) - 1;
    if (m < 0)
        m = 0;
    // the log-ratio estimate can land one off at representation boundaries
    while (m > 0 && std::pow(z, m) <= tol)
        --m;
    while (m < cap && std::pow(z, m + 1) > tol)
        ++m;
    return m;
}

// Closed Gaussian position density N(x) = sqrt(w_s/pi) e^{-w_s x^2}.
inline double gaussian_density_position(double x, double omega_s) {
    if (!(omega_s > 0.0))
        throw std::domain_error("gaussian_density_position: omega_s must be positive");
    return std::sqrt(omega_s / std::numbers::pi) * std::exp(-omega_s * x * x);
}

// Closed Gaussian momentum density F(k) = (pi W_s)^{-1/2} e^{-k^2/W_s}.
inline double gaussian_density_momentum(double k, double omega_cap_s) {
    if (!(omega_cap_s > 0.0))
        throw std::domain_error("gaussian_density_momentum: omega_cap_s must be positive");
    return std::exp(-k * k / omega_cap_s) / std::sqrt(std::numbers::pi * omega_cap_s);
}

namespace detail {

// sqrt(alpha) * sum_{m=0}^{M} (1-z) z^m h_m(sqrt(alpha) u)^2 in one
// recurrence pass; h_m are the unit-scale oscillator functions.
inline double mehler_diagonal_sum(double alpha, double u, double z, int max_order) {
    const double t = std::sqrt(alpha) * u;
    double h = inv_quartroot_pi * std::exp(-0.5 * t * t);
    double hm1 = 0.0;
    double zp = 1.0; // z^m
    double acc = h * h;
    for (int m = 0; m < max_order; ++m) {
        const double hp = std::sqrt(2.0 / (m + 1)) * t * h - std::sqrt(m / (m + 1.0)) * hm1;
        hm1 = h;
        h = hp;
        zp *= z;
        if (zp == 0.0)
            break;
        acc += zp * h * h;
    }
    return std::sqrt(alpha) * (1.0 - z) * acc;
}

} // namespace detail

// Truncated expansion of the position density at x. Within Z^{M+1} of the
// closed Gaussian N(x, omega_s()).
inline double mehler_density_position(double x, const MehlerSpectrum& s) {
    if (!std::isfinite(x))
        throw std::domain_error("mehler_density_position: non-finite argument");
    return detail::mehler_diagonal_sum(s.omega_bar, x, s.z, s.truncation_order);
}

// Truncated expansion of the momentum density at k; same weights, basis
// scale 1/omega_bar.
inline double mehler_density_momentum(double k, const MehlerSpectrum& s) {
    if (!std::isfinite(k))
        throw std::domain_error("mehler_density_momentum: non-finite argument");
    return detail::mehler_diagonal_sum(1.0 / s.omega_bar, k, s.z, s.truncation_order);
}

// Fourier transform of the closed Gaussian density of decay omega:
// (2 pi)^{-1/2} e^{-k^2/(4 omega)}.
inline double form_factor(double omega, double k) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::domain_error("form_factor: omega must be positive");
    return std::exp(-k * k / (4.0 * omega)) / std::sqrt(2.0 * std::numbers::pi);
}

} // namespace qpair
