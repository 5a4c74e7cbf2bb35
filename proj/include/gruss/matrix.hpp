#pragma once

#include <complex>
#include <vector>

#include "gruss/errors.hpp"

namespace gruss {

using Complex = std::complex<double>;

/// Square complex matrix, the element type of the matrix *-algebra this
/// library computes in. Value semantics throughout; row-major storage.
///
/// Entries are expected to stay finite. Factories and file loaders
/// validate; arithmetic on finite inputs at desk scales stays finite.
class Matrix {
  public:
    Matrix() = default;  // dim 0 placeholder, only valid as a target of assignment
    explicit Matrix(int dim);

    static Matrix identity(int dim);
    static Matrix zero(int dim);
    /// Builds from row-major entries; validates squareness and finiteness.
    static Matrix from_rows(int dim, std::vector<Complex> entries);

    [[nodiscard]] int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i) * dim_ + j];
    }

    [[nodiscard]] const std::vector<Complex>& entries() const { return entries_; }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex scalar);
    Matrix& operator*=(double scalar);

    [[nodiscard]] Matrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double frobenius_norm() const;
    [[nodiscard]] double max_abs() const;
    [[nodiscard]] bool all_finite() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

  private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(const Matrix& m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(Complex scalar, Matrix m);
Matrix operator*(Matrix m, Complex scalar);
Matrix operator*(double scalar, Matrix m);
Matrix operator*(Matrix m, double scalar);

/// Adjoint as a free function, matching the algebra vocabulary.
inline Matrix adjoint(const Matrix& a) { return a.adjoint(); }
inline Complex trace(const Matrix& a) { return a.trace(); }
inline double frobenius_norm(const Matrix& a) { return a.frobenius_norm(); }

void require_same_dim(const Matrix& a, const Matrix& b, const char* where);

}  // namespace gruss
