#include "gruss/matrix.hpp"

#include <cmath>
#include <utility>

namespace gruss {

Matrix::Matrix(int dim) : dim_(dim) {
    if (dim < 1) throw ShapeMismatch("matrix dimension must be >= 1");
    entries_.assign(static_cast<size_t>(dim) * dim, Complex{0.0, 0.0});
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

Matrix Matrix::zero(int dim) { return Matrix(dim); }

Matrix Matrix::from_rows(int dim, std::vector<Complex> entries) {
    Matrix m(dim);
    if (entries.size() != static_cast<size_t>(dim) * dim)
        throw ShapeMismatch("entry count does not match a square matrix");
    m.entries_ = std::move(entries);
    if (!m.all_finite()) throw Error("non-finite matrix entry");
    return m;
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* where) {
    if (a.dim() != b.dim()) throw ShapeMismatch(std::string(where) + ": dimension mismatch");
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_dim(*this, rhs, "matrix add");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_dim(*this, rhs, "matrix sub");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

Matrix& Matrix::operator*=(double scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex Matrix::trace() const {
    Complex t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool Matrix::all_finite() const {
    for (const auto& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

Matrix operator-(const Matrix& m) {
    Matrix out = m;
    return out *= Complex{-1.0, 0.0};
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    require_same_dim(lhs, rhs, "matrix mult");
    const int k = lhs.dim();
    Matrix out(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            Complex acc{0.0, 0.0};
            for (int t = 0; t < k; ++t) acc += lhs(i, t) * rhs(t, j);
            out(i, j) = acc;
        }
    }
    return out;
}

Matrix operator*(Complex scalar, Matrix m) { return m *= scalar; }
Matrix operator*(Matrix m, Complex scalar) { return m *= scalar; }
Matrix operator*(double scalar, Matrix m) { return m *= scalar; }
Matrix operator*(Matrix m, double scalar) { return m *= scalar; }

}  // namespace gruss
