#pragma once

#include "gruss/eig.hpp"
#include "gruss/matrix.hpp"
#include "gruss/tolerances.hpp"

namespace gruss {

/// Largest singular value, computed as sqrt(max eig of a*a).
double operator_norm(const Matrix& a);

/// Hermitian within tol_herm and spectrum >= -tol_pos * (1 + |a|_op).
bool is_positive(const Matrix& a, double tol_herm = tol::kHerm, double tol_pos = tol::kPos);

/// Positive square root via the spectral mapping lambda -> sqrt(lambda).
/// Eigenvalues in [-tol_pos*(1+|a|_op), 0) are clamped to zero so that
/// positivity noise cannot poison downstream roots. Throws NotPositive.
Matrix positive_sqrt(const Matrix& a, double tol_herm = tol::kHerm, double tol_pos = tol::kPos);

/// |a| = positive square root of a*a.
Matrix abs_value(const Matrix& a);

/// Sum of singular values (the trace norm).
double trace_norm(const Matrix& a);

[[nodiscard]] bool is_normal(const Matrix& a, double tol = tol::kHerm);

struct SpectralRadiusEstimate {
    double value = 0.0;
    /// True when the input was normal and the value is an eigenvalue
    /// magnitude; false when the power-norm limit estimate was used.
    bool exact = true;
};

/// Spectral radius. Exact (max |eigenvalue|) for Hermitian inputs, equal
/// to the operator norm for normal inputs, and otherwise approximated by
/// the norm-root limit |a^64|^(1/64) and flagged as such.
SpectralRadiusEstimate spectral_radius_info(const Matrix& a);
double spectral_radius(const Matrix& a);

}  // namespace gruss
