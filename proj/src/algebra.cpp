#include "gruss/algebra.hpp"

#include <cmath>

namespace gruss {

double operator_norm(const Matrix& a) {
    const auto eig = hermitian_eig(a.adjoint() * a);
    return std::sqrt(std::max(eig.values.back(), 0.0));
}

bool is_positive(const Matrix& a, double tol_herm, double tol_pos) {
    if (a.dim() < 1) throw ShapeMismatch("is_positive: empty matrix");
    if (!is_hermitian(a, tol_herm)) return false;
    const auto eig = hermitian_eig(a, tol_herm);
    const double lo = eig.values.front();
    const double hi = eig.values.back();
    const double op = std::max(std::abs(lo), std::abs(hi));
    return lo >= -tol_pos * (1.0 + op);
}

Matrix positive_sqrt(const Matrix& a, double tol_herm, double tol_pos) {
    if (!is_positive(a, tol_herm, tol_pos)) throw NotPositive("positive_sqrt: input is not positive");
    auto eig = hermitian_eig(a, tol_herm);
    const int k = a.dim();
    Matrix scaled = eig.vectors;
    for (int j = 0; j < k; ++j) {
        // is_positive admitted at worst -tol_pos*(1+|a|_op); clamp that to zero.
        const double lam = std::max(eig.values[static_cast<size_t>(j)], 0.0);
        const double root = std::sqrt(lam);
        for (int i = 0; i < k; ++i) scaled(i, j) *= root;
    }
    return scaled * eig.vectors.adjoint();
}

Matrix abs_value(const Matrix& a) { return positive_sqrt(a.adjoint() * a); }

double trace_norm(const Matrix& a) {
    const auto eig = hermitian_eig(a.adjoint() * a);
    double sum = 0.0;
    for (double lam : eig.values) sum += std::sqrt(std::max(lam, 0.0));
    return sum;
}

bool is_normal(const Matrix& a, double tol) {
    const Matrix ad = a.adjoint();
    const double dev = (a * ad - ad * a).frobenius_norm();
    const double f = a.frobenius_norm();
    return dev <= tol * (1.0 + f * f);
}

SpectralRadiusEstimate spectral_radius_info(const Matrix& a) {
    if (a.dim() < 1) throw ShapeMismatch("spectral_radius: empty matrix");
    if (is_hermitian(a)) {
        const auto eig = hermitian_eig(a);
        return {std::max(std::abs(eig.values.front()), std::abs(eig.values.back())), true};
    }
    if (is_normal(a)) return {operator_norm(a), true};

    // Norm-root limit at m = 64 via six squarings, renormalizing each step
    // so powers of strongly contracting matrices do not underflow.
    const double scale = a.frobenius_norm();
    if (scale == 0.0) return {0.0, true};
    Matrix b = a * (1.0 / scale);
    double log_acc = 0.0;
    for (int step = 0; step < 6; ++step) {
        b = b * b;
        const double f = b.frobenius_norm();
        if (f == 0.0) return {0.0, false};  // nilpotent within machine range
        b *= 1.0 / f;
        log_acc = 2.0 * log_acc + std::log(f);
    }
    const double op = operator_norm(b);
    const double value = scale * std::exp((log_acc + std::log(std::max(op, 1e-300))) / 64.0);
    return {value, false};
}

double spectral_radius(const Matrix& a) { return spectral_radius_info(a).value; }

}  // namespace gruss
