// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "holonomy/linalg.hpp"

namespace holonomy {

HermitianMatrix pauli_x();
HermitianMatrix pauli_y();
HermitianMatrix pauli_z();

/// Spin-j operators (Sx, Sy, Sz) in the basis m = j, j-1, ..., -j; d = 2j + 1.
/// `two_j` is 2j, so spin-1/2 is two_j = 1.
std::array<HermitianMatrix, 3> spin_matrices(int two_j);

/// n . S for a real 3-vector n.
HermitianMatrix spin_dot(const std::array<HermitianMatrix, 3>& s, double nx, double ny, double nz);

}  // namespace holonomy
