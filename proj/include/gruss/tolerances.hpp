#pragma once

namespace gruss::tol {

// Library-wide tolerance constants. Functions that depend on one take it
// as a defaulted parameter, so callers with special needs can override
// per call without any global state.

/// Hermiticity deviation allowed relative to 1 + |a|_F.
inline constexpr double kHerm = 1e-10;

/// Eigenvalue negativity allowed relative to 1 + |a|_op.
inline constexpr double kPos = 1e-10;

/// Off-diagonal sweep target of the Jacobi eigensolver, relative to |a|_F.
inline constexpr double kEigSweep = 1e-13;

/// Singularity guard on |sin(omega*m)| for the closed-form phase sum.
inline constexpr double kSing = 1e-12;

/// Default multiplier of the scale-aware additive slack used by every
/// inequality certificate: slack = scale * (1 + max(|lhs|, |rhs links|)).
inline constexpr double kSlackScale = 1e-9;

/// Unit-norm tolerance for sharpness witness directions.
inline constexpr double kUnit = 1e-12;

/// Probability vectors must sum to one within this.
inline constexpr double kProbSum = 1e-12;

// Hard size caps; desk-scale linear algebra only.
inline constexpr int kMaxAlgebraDim = 32;
inline constexpr int kMaxModuleRank = 16;
inline constexpr int kMaxTupleLength = 64;

}  // namespace gruss::tol
