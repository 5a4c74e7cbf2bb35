#pragma once

#include <vector>

#include "gruss/matrix.hpp"
#include "gruss/tolerances.hpp"

namespace gruss {

/// Spectral decomposition a = V diag(values) V* of a Hermitian matrix.
/// Eigenvalues ascend; ties keep the order in which the sweep produced
/// them, so results are deterministic for a fixed input.
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;  // columns are the eigenvectors, in `values` order

    [[nodiscard]] Matrix reconstruct() const;
};

[[nodiscard]] bool is_hermitian(const Matrix& a, double tol = tol::kHerm);

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws NotHermitian when |a - a*|_F > tol_herm * (1 + |a|_F).
EigenDecomposition hermitian_eig(const Matrix& a, double tol_herm = tol::kHerm);

}  // namespace gruss
