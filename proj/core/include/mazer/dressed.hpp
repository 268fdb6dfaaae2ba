#pragma once

#include <Eigen/Dense>

#include <array>

#include "mazer/system.hpp"

namespace mazer {

// Single-excitation atom-field coupling matrix in the bare basis
// (|1>, |j>, |0>), in units of hbar*g. |1> is the incoming excited atom,
// |j> the normalized symmetric state of the N-1 trapped atoms sharing one
// excitation, |0> the one-photon state; |j> couples with strength sqrt(N-1).
struct CouplingMatrix {
    Eigen::Matrix3d m;
};

// Closed-form eigensystem of the coupling matrix. Column k of `vectors`
// holds |Psi(+)>, |Psi(0)>, |Psi(-)> in the bare basis, with eigenvalues
// (+sqrt(N), 0, -sqrt(N)) in `values`.
struct DressedEigensystem {
    std::array<double, 3> values;
    Eigen::Matrix3d vectors;
};

CouplingMatrix coupling_matrix(const SystemParams& params);

DressedEigensystem dressed_eigensystem(const SystemParams& params);

// Coefficients (c+, c0, c-) of the incoming bare state in the dressed basis:
// |1> = c+ |Psi(+)> + c0 |Psi(0)> + c- |Psi(-)>. Their squares sum to 1.
std::array<double, 3> bare_state_decomposition(const SystemParams& params);

}  // namespace mazer
