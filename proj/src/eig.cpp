#include "gruss/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gruss {

Matrix EigenDecomposition::reconstruct() const {
    const int k = vectors.dim();
    Matrix scaled = vectors;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) scaled(i, j) *= values[static_cast<size_t>(j)];
    return scaled * vectors.adjoint();
}

bool is_hermitian(const Matrix& a, double tol) {
    const double dev = (a - a.adjoint()).frobenius_norm();
    return dev <= tol * (1.0 + a.frobenius_norm());
}

namespace {

double off_diagonal_norm(const Matrix& h) {
    const int k = h.dim();
    double s = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) s += std::norm(h(i, j));
    return std::sqrt(2.0 * s);
}

}  // namespace

EigenDecomposition hermitian_eig(const Matrix& a, double tol_herm) {
    const int k = a.dim();
    if (k < 1) throw ShapeMismatch("hermitian_eig: empty matrix");
    if (!is_hermitian(a, tol_herm)) throw NotHermitian("hermitian_eig: input is not Hermitian");

    // Average out the admissible asymmetry noise; the result is Hermitian
    // to the last bit because (a_ij + conj(a_ji))/2 conjugate-transposes to
    // itself entrywise.
    Matrix h = 0.5 * (a + a.adjoint());
    Matrix v = Matrix::identity(k);
    std::vector<double> d(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) d[static_cast<size_t>(i)] = h(i, i).real();

    const double sweep_tol = tol::kEigSweep * a.frobenius_norm();
    const double skip_tol = sweep_tol / (static_cast<double>(k) * k + 1.0);
    constexpr int kMaxSweeps = 64;

    int sweep = 0;
    while (off_diagonal_norm(h) > sweep_tol) {
        if (++sweep > kMaxSweeps) throw Error("hermitian_eig: Jacobi sweep limit exceeded");
        for (int p = 0; p < k - 1; ++p) {
            for (int q = p + 1; q < k; ++q) {
                const Complex hpq = h(p, q);
                const double mag = std::abs(hpq);
                if (mag <= skip_tol) continue;

                // Unitary plane rotation J (identity outside rows/cols p,q):
                //   J(p,p) = c, J(p,q) = -s*u, J(q,p) = s*conj(u), J(q,q) = c
                // with u the phase of h(p,q). Zeroing h'(p,q) reduces to the
                // real Jacobi equation t^2 - 2*tau*t - 1 = 0; the smaller
                // root keeps the rotation angle below pi/4.
                const Complex u = hpq / mag;
                const double tau = (d[static_cast<size_t>(q)] - d[static_cast<size_t>(p)]) / (2.0 * mag);
                const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
                const double t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns p,q of h <- h*J.
                for (int i = 0; i < k; ++i) {
                    const Complex hip = h(i, p);
                    const Complex hiq = h(i, q);
                    h(i, p) = c * hip + s * std::conj(u) * hiq;
                    h(i, q) = -s * u * hip + c * hiq;
                }
                // Rows p,q of h <- J^* h.
                for (int j = 0; j < k; ++j) {
                    const Complex hpj = h(p, j);
                    const Complex hqj = h(q, j);
                    h(p, j) = c * hpj + s * u * hqj;
                    h(q, j) = -s * std::conj(u) * hpj + c * hqj;
                }
                // Rotation formulas give the new diagonal exactly real.
                d[static_cast<size_t>(p)] += mag * t;
                d[static_cast<size_t>(q)] -= mag * t;
                h(p, p) = Complex{d[static_cast<size_t>(p)], 0.0};
                h(q, q) = Complex{d[static_cast<size_t>(q)], 0.0};
                h(p, q) = Complex{0.0, 0.0};
                h(q, p) = Complex{0.0, 0.0};

                // Accumulate v <- v*J.
                for (int i = 0; i < k; ++i) {
                    const Complex vip = v(i, p);
                    const Complex viq = v(i, q);
                    v(i, p) = c * vip + s * std::conj(u) * viq;
                    v(i, q) = -s * u * vip + c * viq;
                }
            }
        }
    }

    for (int i = 0; i < k; ++i) d[static_cast<size_t>(i)] = h(i, i).real();

    std::vector<int> order(static_cast<size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return d[static_cast<size_t>(i)] < d[static_cast<size_t>(j)]; });

    EigenDecomposition out;
    out.values.resize(static_cast<size_t>(k));
    out.vectors = Matrix(k);
    for (int j = 0; j < k; ++j) {
        const int src = order[static_cast<size_t>(j)];
        out.values[static_cast<size_t>(j)] = d[static_cast<size_t>(src)];
        for (int i = 0; i < k; ++i) out.vectors(i, j) = v(i, src);
    }
    return out;
}

}  // namespace gruss
