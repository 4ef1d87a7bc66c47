// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Independent numerical ground truth for everything the closed forms
// claim: Nystrom diagonalization of density-matrix kernels, reduced
// density matrices assembled from arbitrary two-body wavefunctions, the
// exact inverse-square-interaction ground state, quadrature Fourier
// transforms, and generic spectrum entropies.
//
// The Nystrom step discretizes the eigenproblem
//   integral K(x, x') u(x') dx' = mu u(x)
// on a Gauss-Legendre grid and diagonalizes the symmetrized matrix
// sqrt(w_i) K(x_i, x_j) sqrt(w_j); the dense symmetric solve is Eigen's.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qpair/errors.hpp"
#include "qpair/forward.hpp"
#include "qpair/quadrature.hpp"

namespace qpair {

struct OracleResult {
    std::vector<double> eigenvalues; // kept modes, descending
    double purity_numeric;           // sum mu^2 over the full spectrum
    double trace;                    // sum_i w_i K(x_i, x_i)
    double residual;                 // max |B v - mu v| over kept modes
};

namespace detail {

inline std::string describe(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// Eigendecompose B = D^{1/2} K D^{1/2} for a symmetric kernel matrix K
// already tabulated on the grid. Unit trace is required: these kernels
// are density matrices, and a drifting trace means the grid does not
// resolve or contain the kernel.
inline OracleResult weighted_kernel_eigs(const Eigen::MatrixXd& kernel,
                                         const QuadratureGrid& grid, int n_keep) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    if (kernel.rows() != n || kernel.cols() != n)
        throw std::invalid_argument("weighted_kernel_eigs: kernel/grid size mismatch");
    if (n_keep < 1)
        throw std::domain_error("weighted_kernel_eigs: must keep at least one mode");
    n_keep = std::min<int>(n_keep, static_cast<int>(n));

    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(grid.weights.data(), n);
    Eigen::VectorXd sqw = w.cwiseSqrt();

    const double trace = (w.array() * kernel.diagonal().array()).sum();
    if (std::abs(trace - 1.0) > 1e-6)
        throw convergence_error("kernel trace deviates from one by " +
                                describe(trace - 1.0) +
                                "; grid does not resolve the kernel");

    Eigen::MatrixXd b = sqw.asDiagonal() * kernel * sqw.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success)
        throw convergence_error("symmetric eigensolver failed to converge");

    // Eigen returns ascending order
    Eigen::VectorXd mu = solver.eigenvalues().reverse();
    OracleResult result;
    result.trace = trace;
    result.purity_numeric = mu.squaredNorm();
    result.eigenvalues.assign(mu.data(), mu.data() + n_keep);
    result.residual = 0.0;
    for (int i = 0; i < n_keep; ++i) {
        const auto v = solver.eigenvectors().col(n - 1 - i);
        const double r = (b * v - mu[i] * v).cwiseAbs().maxCoeff();
        result.residual = std::max(result.residual, r);
    }
    return result;
}

} // namespace detail

// Occupation spectrum of a symmetric kernel sampled on the grid.
template <class Kernel>
OracleResult nystrom_eigs(Kernel&& kernel, const QuadratureGrid& grid, int n_keep) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) {
            k(i, j) = kernel(grid.nodes[static_cast<std::size_t>(i)],
                             grid.nodes[static_cast<std::size_t>(j)]);
            k(j, i) = kernel(grid.nodes[static_cast<std::size_t>(j)],
                             grid.nodes[static_cast<std::size_t>(i)]);
        }
    const double asym = (k - k.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw std::invalid_argument("nystrom_eigs: kernel asymmetry " +
                                    detail::describe(asym) + " exceeds 1e-10");
    return detail::weighted_kernel_eigs(k, grid, n_keep);
}

// Grids sized to the Gaussian kernels of the harmonic pair: half-width
// 8/sqrt(decay) puts the boundary at 8 sigma-equivalents.
inline QuadratureGrid position_kernel_grid(const GaussianModelParams& g, int nodes = 200) {
    return gauss_legendre(nodes, 8.0 / std::sqrt(g.omega_s));
}

inline QuadratureGrid momentum_kernel_grid(const GaussianModelParams& g, int nodes = 200) {
    return gauss_legendre(nodes, 8.0 * std::sqrt(g.omega_cap_s));
}

// Occupation spectrum from a two-body amplitude: gamma(x, x') =
// integral psi(x, y) psi(x', y) dy by quadrature, then the Nystrom step.
template <class Psi>
OracleResult rdm_spectrum_from_wavefunction(Psi&& psi, const QuadratureGrid& grid,
                                            int n_keep) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd p(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            p(i, j) = psi(grid.nodes[static_cast<std::size_t>(i)],
                          grid.nodes[static_cast<std::size_t>(j)]);

    const double asym = (p - p.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw std::invalid_argument(
            "rdm_spectrum_from_wavefunction: amplitude not exchange symmetric");

    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(grid.weights.data(), n);
    const double norm = w.dot(p.cwiseProduct(p) * w);
    if (std::abs(norm - 1.0) > 1e-8)
        throw convergence_error("rdm_spectrum_from_wavefunction: norm deviates "
                                "from one by " +
                                detail::describe(norm - 1.0) +
                                "; raise the node count");

    Eigen::MatrixXd gamma = p * w.asDiagonal() * p;
    return detail::weighted_kernel_eigs(gamma, grid, n_keep);
}

// Exact ground state with the singular pair interaction
// v(x1 - x2) = lambda_cap / (x1 - x2)^2, lambda_cap > 0. In the scaled
// relative coordinate r = (x1 - x2)/sqrt(2) the potential is
// lambda_cap/(2 r^2) and the normalizable solution is
//   psi_rel(r) ~ |r|^a e^{-omega0 r^2/2},  a (a - 1) = lambda_cap, a > 1,
// with the centre of mass in its omega0 ground mode. Total energy
//   E = omega0 (3 + sqrt(1 + 4 lambda_cap)) / 2.
// Amplitudes are evaluated in log space: |r|^a alone overflows for the
// exponents (a ~ sqrt(lambda_cap)) this model reaches.
struct InverseSquareGround {
    double omega0;
    double lambda_cap;
    double a_exponent;
    double energy;
    double log_norm_rel; // ln of the relative normalization constant
    double log_norm_com;

    double relative_amplitude(double r) const {
        if (r == 0.0)
            return 0.0;
        return std::exp(log_norm_rel + a_exponent * std::log(std::abs(r)) -
                        0.5 * omega0 * r * r);
    }

    double operator()(double x1, double x2) const {
        constexpr double inv_sqrt2 = 0.70710678118654752440;
        const double cm = (x1 + x2) * inv_sqrt2;
        const double rel = (x1 - x2) * inv_sqrt2;
        if (rel == 0.0)
            return 0.0;
        return std::exp(log_norm_com - 0.5 * omega0 * cm * cm + log_norm_rel +
                        a_exponent * std::log(std::abs(rel)) - 0.5 * omega0 * rel * rel);
    }
};

inline InverseSquareGround inverse_square_ground(double omega0, double lambda_cap) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw std::domain_error("inverse_square_ground: omega0 must be positive");
    if (!(lambda_cap > 0.0) || !std::isfinite(lambda_cap))
        throw std::domain_error("inverse_square_ground: lambda_cap must be positive");
    InverseSquareGround g;
    g.omega0 = omega0;
    g.lambda_cap = lambda_cap;
    const double root = std::sqrt(1.0 + 4.0 * lambda_cap);
    g.a_exponent = 0.5 * (1.0 + root);
    g.energy = 0.5 * omega0 * (3.0 + root);
    // integral |r|^{2a} e^{-omega0 r^2} dr = Gamma(a + 1/2) omega0^{-(a+1/2)}
    g.log_norm_rel = 0.25 * (2.0 * g.a_exponent + 1.0) * std::log(omega0) -
                     0.5 * std::lgamma(g.a_exponent + 0.5);
    g.log_norm_com = 0.25 * std::log(omega0 / std::numbers::pi);
    return g;
}

// Grid for the inverse-square state. The relative blob sits near
// r0 = (lambda_cap/omega0^2)^{1/4} with width ~ (2 omega0)^{-1/2}, so the
// per-particle extent is r0/sqrt(2) plus trap-scale padding; half-width
// grows like lambda_cap^{1/4}.
inline QuadratureGrid inverse_square_grid(double omega0, double lambda_cap,
                                          int nodes = 400) {
    if (!(omega0 > 0.0) || !(lambda_cap > 0.0))
        throw std::domain_error("inverse_square_grid: parameters must be positive");
    const double r0 = std::pow(lambda_cap / (omega0 * omega0), 0.25);
    const double pad = 8.0 / std::sqrt(omega0);
    const double half_width = (r0 + pad) / std::numbers::sqrt2 + pad;
    return gauss_legendre(nodes, half_width);
}

struct FourierPoint {
    double value;         // real part of the transform
    double imag_residual; // |imaginary part|; nonzero means truncation error
};

// (1/2pi) double-integral of kernel(x1,x2) e^{-i k1 x1 + i k2 x2} by
// quadrature. Symmetric real kernels transform to real values; the
// imaginary residue is the truncation diagnostic.
template <class Kernel>
FourierPoint fourier_transform_2d(Kernel&& kernel, const QuadratureGrid& grid,
                                  double k1, double k2) {
    const std::size_t n = grid.size();
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = grid.nodes[i];
        const double wi = grid.weights[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double xj = grid.nodes[j];
            const double v = wi * grid.weights[j] * kernel(xi, xj);
            const double phase = k2 * xj - k1 * xi;
            re += v * std::cos(phase);
            im += v * std::sin(phase);
        }
    }
    re /= 2.0 * std::numbers::pi;
    im /= 2.0 * std::numbers::pi;
    if (std::abs(im) > 1e-8)
        throw convergence_error("fourier_transform_2d: imaginary residue " +
                                detail::describe(im) + " signals domain truncation");
    return {re, std::abs(im)};
}

struct SpectrumEntropy {
    double von_neumann;
    double purity;
};

// -sum mu ln mu and sum mu^2 of a numerically obtained spectrum.
// Discretization noise below -1e-10 is rejected, small negatives are
// clipped, and modes under 1e-12 are dropped from the entropy (0 ln 0 = 0).
inline SpectrumEntropy entropy_of_spectrum(std::span<const double> eigenvalues) {
    double trace = 0.0, p2 = 0.0, s = 0.0;
    for (double mu : eigenvalues) {
        if (mu < -1e-10)
            throw std::domain_error("entropy_of_spectrum: eigenvalue below -1e-10");
        const double m = std::max(mu, 0.0);
        trace += m;
        p2 += m * m;
        if (m > 1e-12)
            s -= m * std::log(m);
    }
    if (std::abs(trace - 1.0) > 1e-6)
        throw convergence_error("entropy_of_spectrum: trace deficit " +
                                detail::describe(trace - 1.0));
    return {s, p2};
}

} // namespace qpair
