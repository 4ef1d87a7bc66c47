// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Orthonormal harmonic-oscillator eigenfunctions
//
//   phi_m(sqrt(alpha) u) = (alpha/pi)^{1/4} (2^m m!)^{-1/2}
//                          e^{-alpha u^2 / 2} H_m(sqrt(alpha) u)
//
// evaluated through the three-term recurrence on the *normalized* functions
//
//   h_{m+1}(t) = sqrt(2/(m+1)) t h_m(t) - sqrt(m/(m+1)) h_{m-1}(t),
//   h_0(t)     = pi^{-1/4} e^{-t^2/2},
//
// which keeps every intermediate bounded (|h_m| < 1 for all m, t). Raw
// Hermite polynomials and factorials overflow near m ~ 150; the normalized
// recurrence is exact to rounding for m in the hundreds and beyond.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qpair {

namespace detail {

// pi^{-1/4}
inline constexpr double inv_quartroot_pi = 0.75112554446494248286;

inline void check_hermite_args(int m, double alpha, double u) {
    if (m < 0)
        throw std::domain_error("hermite: order must be non-negative");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("hermite: alpha must be positive and finite");
    if (!std::isfinite(u))
        throw std::domain_error("hermite: non-finite argument");
}

} // namespace detail

// One member of the parametric orthonormal set: order m at basis scale
// alpha (an inverse squared length, atomic units). Unit L2 norm over the
// real line for every valid (m, alpha).
struct HermiteOrbital {
    int m;
    double alpha;

    HermiteOrbital(int m_, double alpha_) : m(m_), alpha(alpha_) {
        if (m < 0)
            throw std::domain_error("HermiteOrbital: order must be non-negative");
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::domain_error("HermiteOrbital: alpha must be positive");
    }

    double value(double u) const;
};

// phi_m(sqrt(alpha) u); alpha is an inverse squared length in atomic units.
inline double hermite_orbital_value(int m, double alpha, double u) {
    detail::check_hermite_args(m, alpha, u);
    const double t = std::sqrt(alpha) * u;
    const double scale = std::pow(alpha, 0.25);
    double h = detail::inv_quartroot_pi * std::exp(-0.5 * t * t);
    if (m == 0)
        return scale * h;
    double hm1 = h;
    h *= std::numbers::sqrt2 * t;
    for (int j = 1; j < m; ++j) {
        const double hp = std::sqrt(2.0 / (j + 1)) * t * h - std::sqrt(j / (j + 1.0)) * hm1;
        hm1 = h;
        h = hp;
    }
    return scale * h;
}

// Fills out[m] = phi_m(sqrt(alpha) u) for m = 0..max_order in one pass.
inline void hermite_orbital_series(int max_order, double alpha, double u,
                                   std::vector<double>& out) {
    detail::check_hermite_args(max_order, alpha, u);
    const double t = std::sqrt(alpha) * u;
    const double scale = std::pow(alpha, 0.25);
    out.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
    double h = detail::inv_quartroot_pi * std::exp(-0.5 * t * t);
    out[0] = scale * h;
    if (max_order == 0)
        return;
    double hm1 = h;
    h *= std::numbers::sqrt2 * t;
    out[1] = scale * h;
    for (int j = 1; j < max_order; ++j) {
        const double hp = std::sqrt(2.0 / (j + 1)) * t * h - std::sqrt(j / (j + 1.0)) * hm1;
        hm1 = h;
        h = hp;
        out[static_cast<std::size_t>(j) + 1] = scale * h;
    }
}

inline double HermiteOrbital::value(double u) const {
    return hermite_orbital_value(m, alpha, u);
}

} // namespace qpair
