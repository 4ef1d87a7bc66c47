// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// The inverse step: from the two measurable Gaussian decay parameters
// (omega_s from the position density, omega_cap_s from the momentum
// density) to the shared expansion spectrum
//
//   wbar = sqrt(omega_s * omega_cap_s),
//   Z    = (1 - sqrt(omega_s/omega_cap_s)) / (1 + sqrt(omega_s/omega_cap_s)),
//
// and onward to the pair of couplings (one attractive, one repulsive)
// that reproduce Z under the harmonic-pair forward model. The sign of the
// interaction is not recoverable from the two widths: the purity
// 2 sqrt(w1 w2)/(w1 + w2) is invariant under w2/w1 -> w1/w2, so every Z
// belongs to a dual coupling pair.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpair/forward.hpp"
#include "qpair/mehler.hpp"

namespace qpair {

// The two experimentally accessible decay parameters, both positive and
// ordered omega_cap_s >= omega_s (kinetic-energy ordering).
struct WidthPair {
    double omega_s;
    double omega_cap_s;

    WidthPair(double omega_s_, double omega_cap_s_)
        : omega_s(omega_s_), omega_cap_s(omega_cap_s_) {
        if (!(omega_s > 0.0) || !std::isfinite(omega_s) ||
            !(omega_cap_s > 0.0) || !std::isfinite(omega_cap_s))
            throw std::domain_error("WidthPair: widths must be positive and finite");
        if (omega_s > omega_cap_s)
            throw std::domain_error(
                "unphysical width pair: omega_s exceeds omega_cap_s");
    }
};

inline WidthPair widths_of(const GaussianModelParams& g) {
    return {g.omega_s, g.omega_cap_s};
}

// Solve the two expansion constraints for (wbar, Z). Round trips exactly:
// wbar (1-Z)/(1+Z) = omega_s and wbar (1+Z)/(1-Z) = omega_cap_s.
inline MehlerSpectrum invert_widths(const WidthPair& w, double tol = 1e-12) {
    const double s = std::sqrt(w.omega_s / w.omega_cap_s); // <= 1
    const double z = (1.0 - s) / (1.0 + s);
    const double omega_bar = std::sqrt(w.omega_s * w.omega_cap_s);
    return {omega_bar, z, truncation_order_for(z, tol)};
}

// Z produced by the forward model at coupling lambda; the analytic
// composition of model_params with invert_widths.
inline double z_of_coupling(double lambda) {
    if (!(lambda > -0.5) || !std::isfinite(lambda))
        throw std::domain_error("z_of_coupling: coupling must exceed -1/2");
    const double rt = std::pow(1.0 + 2.0 * lambda, 0.25); // sqrt(w2/w1)
    const double q = (rt - 1.0) / (rt + 1.0);
    return q * q;
}

enum class SampleKind { position, momentum };

// Raw observations, positions or momenta in atomic units.
struct SampleSet {
    std::vector<double> values;
    SampleKind kind = SampleKind::position;
};

struct WidthFit {
    double value;     // fitted omega_s or omega_cap_s
    double std_error; // propagated standard error of the moment estimator
    std::size_t count;
};

// Second-moment estimator for the Gaussian families:
//   position: <x^2> = 1/(2 omega_s)      =>  omega_s     = 1/(2 <x^2>)
//   momentum: <k^2> = omega_cap_s / 2    =>  omega_cap_s = 2 <k^2>
// Unbiased for exact Gaussian data; standard error by the delta method.
inline WidthFit fit_width(const SampleSet& s) {
    const std::size_t n = s.values.size();
    if (n < 2)
        throw std::invalid_argument("fit_width: need at least 2 samples");
    double m2 = 0.0;
    for (double v : s.values) {
        if (!std::isfinite(v))
            throw std::domain_error("fit_width: non-finite sample");
        m2 += v * v;
    }
    m2 /= static_cast<double>(n);
    if (m2 == 0.0)
        throw std::domain_error("fit_width: zero second moment");
    double var = 0.0;
    for (double v : s.values) {
        const double d = v * v - m2;
        var += d * d;
    }
    var /= static_cast<double>(n - 1);
    const double se_m2 = std::sqrt(var / static_cast<double>(n));
    if (s.kind == SampleKind::position)
        return {1.0 / (2.0 * m2), se_m2 / (2.0 * m2 * m2), n};
    return {2.0 * m2, 2.0 * se_m2, n};
}

struct DualCouplings {
    double lambda_attractive; // >= 0
    double lambda_repulsive;  // in (-1/2, 0]
};

// The two couplings with identical Z. With T = 1 + 2 lambda_att the
// repulsive partner is lambda_rep = -lambda_att / T.
inline DualCouplings dual_couplings(double z) {
    if (!(z >= 0.0) || !(z < 1.0))
        throw std::domain_error("dual_couplings: z must lie in [0,1)");
    if (z == 0.0)
        return {0.0, 0.0};
    const double rz = std::sqrt(z);
    const double s = (1.0 + rz) / (1.0 - rz); // sqrt(w2/w1) of the attractive branch
    const double t_att = s * s * s * s;       // 1 + 2 lambda_att
    const double lambda_att = 0.5 * (t_att - 1.0);
    return {lambda_att, -lambda_att / t_att};
}

inline DualCouplings dual_couplings(const MehlerSpectrum& s) {
    return dual_couplings(s.z);
}

// Both members of the dual pair as full model inputs at trap frequency
// omega0.
inline std::pair<ConfinedPair, ConfinedPair> dual_pairs(const MehlerSpectrum& s,
                                                        double omega0) {
    const auto d = dual_couplings(s.z);
    return {ConfinedPair(omega0, d.lambda_attractive),
            ConfinedPair(omega0, d.lambda_repulsive)};
}

// Kinetic energies straight from the widths; shares the contract of
// kinetic_energies on the forward side.
inline KineticEnergies kinetic_from_widths(const WidthPair& w) {
    return {0.25 * w.omega_s, 0.25 * w.omega_cap_s};
}

} // namespace qpair
