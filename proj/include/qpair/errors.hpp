// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace qpair {

// Raised when a numerical result fails its convergence check (quadrature
// trace drift, Fourier truncation residue, spectrum trace deficit).
// Kept distinct from std::domain_error so callers can map invalid input
// and non-convergence to different exit paths.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qpair
