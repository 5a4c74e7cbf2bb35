// Test-only oracles, kept independent of the library code paths they
// check: characteristic-polynomial root finding for eigenvalues, power
// iteration for the operator norm, long-double direct summation for the
// transforms, and closed-form power sums.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "gruss/instance.hpp"
#include "gruss/matrix.hpp"
#include "gruss/module.hpp"
#include "gruss/rng.hpp"

namespace oracle {

using gruss::Complex;
using gruss::Matrix;
using gruss::ModuleVector;
using gruss::VectorTuple;
using ComplexLD = std::complex<long double>;

/// Monic characteristic polynomial coefficients by the trace recursion:
/// returns c with c[0] = 1 and c[j] the coefficient of lambda^(k-j).
inline std::vector<Complex> char_poly_coeffs(const Matrix& a) {
    const int k = a.dim();
    std::vector<Complex> c(static_cast<size_t>(k) + 1);
    c[0] = Complex{1.0, 0.0};
    Matrix m = a;
    Complex cj = -m.trace();
    c[1] = cj;
    for (int j = 2; j <= k; ++j) {
        Matrix shifted = m;
        for (int i = 0; i < k; ++i) shifted(i, i) += cj;
        m = a * shifted;
        cj = -m.trace() * (1.0 / j);
        c[static_cast<size_t>(j)] = cj;
    }
    return c;
}

/// Durand-Kerner iteration for all roots of a monic polynomial.
inline std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    const auto eval = [&](Complex z) {
        Complex r{0.0, 0.0};
        for (const auto& c : coeffs) r = r * z + c;
        return r;
    };
    double radius = 0.0;
    for (size_t j = 1; j < coeffs.size(); ++j) radius = std::max(radius, std::abs(coeffs[j]));
    radius += 1.0;

    std::vector<Complex> roots(static_cast<size_t>(deg));
    const Complex seed{0.4, 0.9};
    Complex z{1.0, 0.0};
    for (auto& r : roots) {
        z *= seed;
        r = radius * z;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < deg; ++i) {
            Complex denom{1.0, 0.0};
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
            const Complex delta = eval(roots[static_cast<size_t>(i)]) / denom;
            roots[static_cast<size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14 * radius) break;
    }
    return roots;
}

/// Real eigenvalues of a Hermitian matrix via the two oracles above.
inline std::vector<double> hermitian_eigenvalues(const Matrix& a) {
    const auto roots = poly_roots(char_poly_coeffs(a));
    std::vector<double> values;
    values.reserve(roots.size());
    for (const auto& r : roots) values.push_back(r.real());
    std::sort(values.begin(), values.end());
    return values;
}

/// Largest singular value by plain power iteration on a*a.
inline double operator_norm_power(const Matrix& a, int iters = 20000) {
    const Matrix ata = a.adjoint() * a;
    const int k = a.dim();
    std::vector<Complex> v(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = Complex{1.0 + 0.13 * i, 0.31 - 0.07 * i};
    double lambda = 0.0;
    for (int it = 0; it < iters; ++it) {
        std::vector<Complex> w(static_cast<size_t>(k), Complex{0.0, 0.0});
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) w[static_cast<size_t>(i)] += ata(i, j) * v[static_cast<size_t>(j)];
        double norm = 0.0;
        for (const auto& c : w) norm += std::norm(c);
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        lambda = norm;
        for (auto& c : w) c *= 1.0 / norm;
        v = std::move(w);
    }
    return std::sqrt(lambda);
}

/// Direct Fourier summation with long-double phase accumulation.
inline ModuleVector fourier_direct(const VectorTuple& xs, double omega, int m) {
    const int d = xs.rank();
    const int k = xs.dim();
    const int n = xs.length();
    std::vector<Matrix> parts;
    parts.reserve(static_cast<size_t>(d));
    for (int pi = 0; pi < d; ++pi) {
        Matrix out(k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                ComplexLD acc{0.0L, 0.0L};
                for (int t = 1; t <= n; ++t) {
                    const long double theta =
                        2.0L * static_cast<long double>(omega) * m * t;
                    const ComplexLD phase{std::cos(theta), std::sin(theta)};
                    const Complex e = xs.item(t - 1).part(pi)(i, j);
                    acc += phase * ComplexLD(e.real(), e.imag());
                }
                out(i, j) = Complex{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
            }
        }
        parts.push_back(out);
    }
    return ModuleVector(parts);
}

/// Direct geometric phase sum with long-double accumulation.
inline Complex phase_sum_direct(double omega, int m, int n) {
    ComplexLD acc{0.0L, 0.0L};
    for (int k = 1; k <= n; ++k) {
        const long double theta = 2.0L * static_cast<long double>(omega) * m * k;
        acc += ComplexLD{std::cos(theta), std::sin(theta)};
    }
    return Complex{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// Mellin summation with long-double weights.
inline ModuleVector mellin_direct(const VectorTuple& xs, int m) {
    const int d = xs.rank();
    const int k = xs.dim();
    const int n = xs.length();
    std::vector<Matrix> parts;
    parts.reserve(static_cast<size_t>(d));
    for (int pi = 0; pi < d; ++pi) {
        Matrix out(k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                ComplexLD acc{0.0L, 0.0L};
                for (int t = 1; t <= n; ++t) {
                    const long double w = std::pow(static_cast<long double>(t), m - 1);
                    const Complex e = xs.item(t - 1).part(pi)(i, j);
                    acc += w * ComplexLD(e.real(), e.imag());
                }
                out(i, j) = Complex{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
            }
        }
        parts.push_back(out);
    }
    return ModuleVector(parts);
}

// Closed-form power sums, exact in 128-bit arithmetic for n <= 1e6.
inline __int128 faulhaber_s1(long long n) { return static_cast<__int128>(n) * (n + 1) / 2; }
inline __int128 faulhaber_s2(long long n) {
    return static_cast<__int128>(n) * (n + 1) * (2 * n + 1) / 6;
}
inline __int128 faulhaber_s3(long long n) {
    const __int128 t = faulhaber_s1(n);
    return t * t;
}
inline __int128 faulhaber_s4(long long n) {
    const __int128 nn = n;
    return nn * (n + 1) * (2 * n + 1) * (3 * nn * n + 3 * n - 1) / 30;
}

// Small construction helpers shared by the test files.

inline Matrix mat1(Complex a) { return Matrix::from_rows(1, {a}); }

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    return Matrix::from_rows(2, {a, b, c, d});
}

inline Matrix diag(const std::vector<double>& values) {
    Matrix m(static_cast<int>(values.size()));
    for (size_t i = 0; i < values.size(); ++i)
        m(static_cast<int>(i), static_cast<int>(i)) = Complex{values[i], 0.0};
    return m;
}

inline Matrix random_hermitian(gruss::Rng& rng, int k) {
    const Matrix g = gruss::random_matrix(rng, k);
    return 0.5 * (g + g.adjoint());
}

inline Matrix random_positive(gruss::Rng& rng, int k) {
    const Matrix g = gruss::random_matrix(rng, k);
    return g.adjoint() * g;
}

}  // namespace oracle
