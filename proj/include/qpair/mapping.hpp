// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Surrogate-interaction optimization: replace the singular inverse-square
// pair interaction (coupling lambda_cap) by the harmonic pair interaction
// (coupling lambda) under ground-state-energy correspondence, then
// quantify where the surrogate's correlation measures fail.
//
//   E_H = omega0 (1 + sqrt(1 + 2 lambda)) / 2
//   E_C = omega0 (3 + sqrt(1 + 4 lambda_cap)) / 2
//
// Matching them is omega0-independent and closed form,
//   lambda_exact = [(2 + sqrt(1 + 4 lambda_cap))^2 - 1] / 2,
// which tends to the asymptotic rule lambda = 2 lambda_cap from above.
// The surrogate purity decays like sqrt(2) lambda_cap^{-1/4}; the true
// model's purity saturates - that divergence is the reportable result.

#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>

#include "qpair/entropy.hpp"
#include "qpair/forward.hpp"
#include "qpair/inversion.hpp"
#include "qpair/oracle.hpp"

namespace qpair {

enum class MappingRule { exact, asymptotic };

struct MappingResult {
    double lambda_cap;
    double lambda_asymptotic;  // 2 lambda_cap
    double lambda_exact;       // closed-form energy match
    double e_c;                // inverse-square ground energy
    double e_h_at_exact;       // harmonic-pair energy at lambda_exact
    double purity_h;           // surrogate purity at the chosen rule's coupling
    double purity_c;           // Nystrom purity of the inverse-square state
    double purity_h_asymptote; // sqrt(2) lambda_cap^{-1/4}
};

// Coupling solving E_H(lambda) = E_C(lambda_cap); omega0 drops out.
inline double energy_match(double omega0, double lambda_cap) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw std::domain_error("energy_match: omega0 must be positive");
    if (!(lambda_cap > 0.0) || !std::isfinite(lambda_cap))
        throw std::domain_error("energy_match: lambda_cap must be positive");
    const double s = 2.0 + std::sqrt(1.0 + 4.0 * lambda_cap);
    return 0.5 * (s * s - 1.0);
}

// Closed-form surrogate purity 2 sqrt(w1 w2)/(w1 + w2) at coupling lambda.
inline double heisenberg_purity(double lambda) {
    if (!(lambda > -0.5) || !std::isfinite(lambda))
        throw std::domain_error("heisenberg_purity: coupling must exceed -1/2");
    const double t = std::sqrt(1.0 + 2.0 * lambda); // w2/w1
    return 2.0 * std::sqrt(t) / (1.0 + t);
}

// Full comparison at one lambda_cap. purity_c comes from the numeric
// oracle on an automatically scaled grid; pass with_oracle = false to
// skip it (purity_c is then NaN).
inline MappingResult compare_purities(double omega0, double lambda_cap,
                                      MappingRule rule = MappingRule::asymptotic,
                                      int nodes = 400, bool with_oracle = true) {
    MappingResult r;
    r.lambda_cap = lambda_cap;
    r.lambda_asymptotic = 2.0 * lambda_cap;
    r.lambda_exact = energy_match(omega0, lambda_cap);
    const auto ground = inverse_square_ground(omega0, lambda_cap);
    r.e_c = ground.energy;
    r.e_h_at_exact = ground_energy_H(ConfinedPair(omega0, r.lambda_exact));
    r.purity_h = heisenberg_purity(rule == MappingRule::exact ? r.lambda_exact
                                                              : r.lambda_asymptotic);
    r.purity_h_asymptote = std::numbers::sqrt2 * std::pow(lambda_cap, -0.25);
    if (with_oracle) {
        const auto grid = inverse_square_grid(omega0, lambda_cap, nodes);
        r.purity_c = rdm_spectrum_from_wavefunction(ground, grid, 16).purity_numeric;
    } else {
        r.purity_c = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

struct PowerLawFit {
    double slope;
    double intercept; // of ln(purity) vs ln(lambda_cap); prefactor = e^intercept
};

namespace detail {

inline void check_scaling_grid(std::span<const double> lambda_caps) {
    if (lambda_caps.size() < 3)
        throw std::invalid_argument("grid too narrow: need at least 3 points");
    double lo = lambda_caps[0], hi = lambda_caps[0];
    for (double v : lambda_caps) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::domain_error("scaling grid values must be positive");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi / lo < 1e3)
        throw std::invalid_argument("grid too narrow: span at least 3 decades");
}

} // namespace detail

// Least-squares fit of ln(purity_h) against ln(lambda_cap).
inline PowerLawFit fit_purity_power_law(double omega0,
                                        std::span<const double> lambda_caps,
                                        MappingRule rule = MappingRule::asymptotic) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw std::domain_error("fit_purity_power_law: omega0 must be positive");
    detail::check_scaling_grid(lambda_caps);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(lambda_caps.size());
    for (double lc : lambda_caps) {
        const double lambda = rule == MappingRule::exact ? energy_match(omega0, lc)
                                                         : 2.0 * lc;
        const double x = std::log(lc);
        const double y = std::log(heisenberg_purity(lambda));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {slope, (sy - slope * sx) / n};
}

// Fitted exponent of the surrogate-purity decay; -1/4 for the asymptotic
// rule.
inline double purity_scaling_exponent(double omega0,
                                      std::span<const double> lambda_caps) {
    return fit_purity_power_law(omega0, lambda_caps).slope;
}

} // namespace qpair
