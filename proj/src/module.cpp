#include "gruss/module.hpp"

#include <cmath>
#include <utility>

#include "gruss/algebra.hpp"

namespace gruss {

ModuleVector::ModuleVector(int rank, int dim) {
    if (rank < 1) throw ShapeMismatch("module vector rank must be >= 1");
    parts_.assign(static_cast<size_t>(rank), Matrix::zero(dim));
}

ModuleVector::ModuleVector(std::vector<Matrix> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ShapeMismatch("module vector rank must be >= 1");
    for (const auto& p : parts_)
        if (p.dim() != parts_.front().dim())
            throw ShapeMismatch("module vector parts must share one algebra dimension");
}

void require_same_shape(const ModuleVector& x, const ModuleVector& y, const char* where) {
    if (x.rank() != y.rank() || x.dim() != y.dim())
        throw ShapeMismatch(std::string(where) + ": module vector shape mismatch");
}

void require_same_shape(const VectorTuple& xs, const VectorTuple& ys, const char* where) {
    if (xs.length() != ys.length() || xs.rank() != ys.rank() || xs.dim() != ys.dim())
        throw ShapeMismatch(std::string(where) + ": tuple shape mismatch");
}

void require_tuple_weights(int weights, const VectorTuple& xs, const char* where) {
    if (weights != xs.length())
        throw ShapeMismatch(std::string(where) + ": weight count does not match tuple length");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
    require_same_shape(*this, rhs, "module add");
    for (int i = 0; i < rank(); ++i) parts_[static_cast<size_t>(i)] += rhs.part(i);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
    require_same_shape(*this, rhs, "module sub");
    for (int i = 0; i < rank(); ++i) parts_[static_cast<size_t>(i)] -= rhs.part(i);
    return *this;
}

ModuleVector& ModuleVector::operator*=(Complex scalar) {
    for (auto& p : parts_) p *= scalar;
    return *this;
}

ModuleVector& ModuleVector::operator*=(double scalar) {
    for (auto& p : parts_) p *= scalar;
    return *this;
}

ModuleVector operator+(ModuleVector lhs, const ModuleVector& rhs) { return lhs += rhs; }
ModuleVector operator-(ModuleVector lhs, const ModuleVector& rhs) { return lhs -= rhs; }
ModuleVector operator*(Complex scalar, ModuleVector v) { return v *= scalar; }
ModuleVector operator*(double scalar, ModuleVector v) { return v *= scalar; }

ModuleVector operator*(const ModuleVector& v, const Matrix& a) {
    std::vector<Matrix> parts;
    parts.reserve(static_cast<size_t>(v.rank()));
    for (const auto& p : v.parts()) parts.push_back(p * a);
    return ModuleVector(std::move(parts));
}

VectorTuple::VectorTuple(std::vector<ModuleVector> items) : items_(std::move(items)) {
    if (items_.empty()) throw ShapeMismatch("vector tuple must be nonempty");
    for (const auto& v : items_)
        if (v.rank() != items_.front().rank() || v.dim() != items_.front().dim())
            throw ShapeMismatch("vector tuple items must share one shape");
}

ProbabilityVector::ProbabilityVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw ShapeMismatch("probability vector must be nonempty");
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) throw Error("probability weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > tol::kProbSum) throw Error("probability weights must sum to one");
}

ProbabilityVector ProbabilityVector::uniform(int n) {
    if (n < 1) throw ShapeMismatch("probability vector must be nonempty");
    return ProbabilityVector(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

Matrix inner_product(const ModuleVector& x, const ModuleVector& y) {
    require_same_shape(x, y, "inner_product");
    Matrix acc = Matrix::zero(x.dim());
    for (int i = 0; i < x.rank(); ++i) acc += x.part(i).adjoint() * y.part(i);
    return acc;
}

double module_norm(const ModuleVector& x) {
    return std::sqrt(operator_norm(inner_product(x, x)));
}

double hs_seminorm(const ModuleVector& x) {
    return std::sqrt(std::max(inner_product(x, x).trace().real(), 0.0));
}

ModuleVector weighted_combination(const ProbabilityVector& p, const VectorTuple& xs) {
    require_tuple_weights(p.size(), xs, "weighted_combination");
    ModuleVector acc(xs.rank(), xs.dim());
    for (int i = 0; i < xs.length(); ++i) acc += p.weight(i) * xs.item(i);
    return acc;
}

ModuleVector weighted_combination(const ScalarWeights& w, const VectorTuple& xs) {
    require_tuple_weights(static_cast<int>(w.size()), xs, "weighted_combination");
    ModuleVector acc(xs.rank(), xs.dim());
    for (int i = 0; i < xs.length(); ++i) acc += w[static_cast<size_t>(i)] * xs.item(i);
    return acc;
}

VectorTuple translate(const VectorTuple& xs, const ModuleVector& a) {
    if (xs.rank() != a.rank() || xs.dim() != a.dim())
        throw ShapeMismatch("translate: center shape mismatch");
    std::vector<ModuleVector> items;
    items.reserve(static_cast<size_t>(xs.length()));
    for (const auto& v : xs.items()) items.push_back(v - a);
    return VectorTuple(std::move(items));
}

}  // namespace gruss
