// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qpair {

// Nodes and weights of a quadrature rule on [-half_width, half_width].
struct QuadratureGrid {
    std::vector<double> nodes;   // strictly increasing
    std::vector<double> weights; // positive, sum to 2*half_width
    double half_width = 0.0;

    std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre rule with n nodes on [-half_width, half_width].
//
// Roots of P_n are located by Newton iteration from the Chebyshev initial
// guess cos(pi (i + 3/4)/(n + 1/2)); a handful of steps reaches machine
// precision. Weights are 2 / ((1 - x^2) P_n'(x)^2), scaled to the interval.
inline QuadratureGrid gauss_legendre(int n, double half_width) {
    if (n < 1)
        throw std::domain_error("gauss_legendre: need at least one node");
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::domain_error("gauss_legendre: half_width must be positive and finite");

    QuadratureGrid grid;
    grid.half_width = half_width;
    grid.nodes.assign(static_cast<std::size_t>(n), 0.0);
    grid.weights.assign(static_cast<std::size_t>(n), 0.0);

    const int mid = (n + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            // n == 1 leaves p1 = x, p0 = 1; the derivative formula still holds.
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // i-th positive root maps to the two symmetric interval positions
        grid.nodes[static_cast<std::size_t>(i)] = -x * half_width;
        grid.nodes[static_cast<std::size_t>(n - 1 - i)] = x * half_width;
        grid.weights[static_cast<std::size_t>(i)] = w * half_width;
        grid.weights[static_cast<std::size_t>(n - 1 - i)] = w * half_width;
    }
    return grid;
}

// Sum of w_i f(x_i) over the grid.
template <class F>
double integrate(const QuadratureGrid& grid, F&& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        acc += grid.weights[i] * f(grid.nodes[i]);
    return acc;
}

} // namespace qpair
