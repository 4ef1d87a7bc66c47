// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Correlation measures of the geometric occupation spectrum
// P_m = (1-Z) Z^m. Every measure below depends on Z alone; the basis
// scale never enters.

#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "qpair/mehler.hpp"

namespace qpair {

// Purity = sum_m P_m^2 = (1-z)/(1+z); equals sqrt(omega_s/omega_cap_s)
// when z comes from a width inversion.
inline double purity(double z) {
    if (!(z >= 0.0) || !(z < 1.0))
        throw std::domain_error("purity: z must lie in [0,1)");
    return (1.0 - z) / (1.0 + z);
}

// Order-q Renyi entropy of the geometric spectrum,
//   S_R(q) = ln[(1-z)^q / (1-z^q)] / (1-q),     q > 0, q != 1.
inline double renyi_entropy(double z, double q) {
    if (!(z >= 0.0) || !(z < 1.0))
        throw std::domain_error("renyi_entropy: z must lie in [0,1)");
    if (!(q > 0.0) || !std::isfinite(q))
        throw std::domain_error("renyi_entropy: order q must be positive");
    if (q == 1.0)
        throw std::domain_error("renyi_entropy: q = 1 is the von Neumann limit");
    return (q * std::log1p(-z) - std::log1p(-std::pow(z, q))) / (1.0 - q);
}

// Von Neumann entropy, the q -> 1 limit:
//   S_N = -ln(1-z) - z ln(z)/(1-z),   with S_N(0) = 0.
inline double von_neumann_entropy(double z) {
    if (!(z >= 0.0) || !(z < 1.0))
        throw std::domain_error("von_neumann_entropy: z must lie in [0,1)");
    if (z == 0.0)
        return 0.0;
    return -std::log1p(-z) - z * std::log(z) / (1.0 - z);
}

struct RenyiSample {
    double q;
    double value;
};

struct EntropyReport {
    double purity;
    double linear_entropy; // 1 - purity
    double von_neumann;
    std::vector<RenyiSample> renyi_samples;
};

// Aggregate report over a grid of Renyi orders; q = 1 entries are filled
// with the von Neumann value.
inline EntropyReport entropy_report(double z, std::span<const double> q_grid) {
    EntropyReport r{purity(z), 0.0, von_neumann_entropy(z), {}};
    r.linear_entropy = 1.0 - r.purity;
    r.renyi_samples.reserve(q_grid.size());
    for (double q : q_grid) {
        if (!(q > 0.0) || !std::isfinite(q))
            throw std::domain_error("entropy_report: Renyi orders must be positive");
        r.renyi_samples.push_back({q, q == 1.0 ? r.von_neumann : renyi_entropy(z, q)});
    }
    return r;
}

inline EntropyReport entropy_report(const MehlerSpectrum& s,
                                    std::span<const double> q_grid) {
    return entropy_report(s.z, q_grid);
}

} // namespace qpair
