#pragma once

#include <vector>

#include "gruss/matrix.hpp"
#include "gruss/tolerances.hpp"

namespace gruss {

/// Element of the right module X = A^d over the matrix algebra A: a
/// rank-d tuple of k x k matrices with the pairing <x,y> = sum x_i* y_i.
class ModuleVector {
  public:
    ModuleVector() = default;
    ModuleVector(int rank, int dim);  // zero vector
    explicit ModuleVector(std::vector<Matrix> parts);

    [[nodiscard]] int rank() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int dim() const { return parts_.empty() ? 0 : parts_.front().dim(); }

    Matrix& part(int i) { return parts_[static_cast<size_t>(i)]; }
    [[nodiscard]] const Matrix& part(int i) const { return parts_[static_cast<size_t>(i)]; }
    [[nodiscard]] const std::vector<Matrix>& parts() const { return parts_; }

    ModuleVector& operator+=(const ModuleVector& rhs);
    ModuleVector& operator-=(const ModuleVector& rhs);
    ModuleVector& operator*=(Complex scalar);
    ModuleVector& operator*=(double scalar);

    friend bool operator==(const ModuleVector& a, const ModuleVector& b) = default;

  private:
    std::vector<Matrix> parts_;
};

ModuleVector operator+(ModuleVector lhs, const ModuleVector& rhs);
ModuleVector operator-(ModuleVector lhs, const ModuleVector& rhs);
ModuleVector operator*(Complex scalar, ModuleVector v);
ModuleVector operator*(double scalar, ModuleVector v);
/// Right action of the algebra: (x * a)_i = x_i * a.
ModuleVector operator*(const ModuleVector& v, const Matrix& a);

/// n-tuple of module vectors of a common shape (d, k).
class VectorTuple {
  public:
    VectorTuple() = default;
    explicit VectorTuple(std::vector<ModuleVector> items);

    [[nodiscard]] int length() const { return static_cast<int>(items_.size()); }
    [[nodiscard]] int rank() const { return items_.empty() ? 0 : items_.front().rank(); }
    [[nodiscard]] int dim() const { return items_.empty() ? 0 : items_.front().dim(); }

    [[nodiscard]] const ModuleVector& item(int i) const { return items_[static_cast<size_t>(i)]; }
    [[nodiscard]] const std::vector<ModuleVector>& items() const { return items_; }

    friend bool operator==(const VectorTuple& a, const VectorTuple& b) = default;

  private:
    std::vector<ModuleVector> items_;
};

/// Nonnegative weights summing to one (within tol::kProbSum).
class ProbabilityVector {
  public:
    ProbabilityVector() = default;
    explicit ProbabilityVector(std::vector<double> weights);

    static ProbabilityVector uniform(int n);

    [[nodiscard]] int size() const { return static_cast<int>(weights_.size()); }
    [[nodiscard]] double weight(int i) const { return weights_[static_cast<size_t>(i)]; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }

    friend bool operator==(const ProbabilityVector& a, const ProbabilityVector& b) = default;

  private:
    std::vector<double> weights_;
};

using ScalarWeights = std::vector<Complex>;

/// <x,y> = sum_i x_i* y_i, the algebra-valued pairing of the module.
Matrix inner_product(const ModuleVector& x, const ModuleVector& y);

/// |<x,x>|_op^(1/2), the operator-norm-induced seminorm.
double module_norm(const ModuleVector& x);

/// (Re tr<x,x>)^(1/2), the trace seminorm written |x| with bars doubled.
double hs_seminorm(const ModuleVector& x);

ModuleVector weighted_combination(const ProbabilityVector& p, const VectorTuple& xs);
ModuleVector weighted_combination(const ScalarWeights& w, const VectorTuple& xs);

/// Subtracts `a` from every item.
VectorTuple translate(const VectorTuple& xs, const ModuleVector& a);

void require_same_shape(const ModuleVector& x, const ModuleVector& y, const char* where);
void require_same_shape(const VectorTuple& xs, const VectorTuple& ys, const char* where);
void require_tuple_weights(int weights, const VectorTuple& xs, const char* where);

}  // namespace gruss
