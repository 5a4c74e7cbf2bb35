#pragma once

#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "gruss/certificate.hpp"
#include "gruss/module.hpp"

namespace gruss {

using WideInt = boost::multiprecision::cpp_int;

/// F_w(x)(m) = sum_{k=1..n} exp(2*w*i*m*k) x_k.
ModuleVector fourier(const VectorTuple& xs, double omega, int m);

/// Transform of the pairing sequence: sum_k exp(2*w*i*m*k) <x_k, y_k>.
Matrix fourier_pair(const VectorTuple& xs, const VectorTuple& ys, double omega, int m);

/// M(x)(m) = sum_{k=1..n} k^(m-1) x_k.
ModuleVector mellin(const VectorTuple& xs, int m);
Matrix mellin_pair(const VectorTuple& xs, const VectorTuple& ys, int m);

/// S_p(n) = sum_{k=1..n} k^p, exactly (0 for n <= 0).
WideInt power_sum_exact(int p, long long n);
double power_sum(int p, long long n);

/// Closed form of sum_{k=1..n} exp(2*w*i*m*k):
///   sin(w*m*n)/sin(w*m) * exp(i*w*(n+1)*m).
/// Throws Singular when |sin(w*m)| <= tol::kSing (w*m a multiple of pi).
Complex geometric_phase_sum(double omega, int m, int n);

/// |F_w(x,y)(m) - <mean(x), F_w(y)(m)>| <= n*r*s under radius conditions
/// on x_k and on the phased y_k. Id "4.4". With strict_radius, the phased
/// condition is enforced over every index m' in 1..n instead of m alone.
BoundCertificate check_fourier_pair_bound(const VectorTuple& xs, const VectorTuple& ys,
                                          double omega, int m, const ModuleVector& a,
                                          const ModuleVector& b,
                                          std::optional<double> r = std::nullopt,
                                          std::optional<double> s = std::nullopt,
                                          bool strict_radius = false,
                                          double slack_scale = tol::kSlackScale);

/// Mellin analog with weights k^(m-1). Id "4.8".
BoundCertificate check_mellin_pair_bound(const VectorTuple& xs, const VectorTuple& ys, int m,
                                         const ModuleVector& a, const ModuleVector& b,
                                         std::optional<double> r = std::nullopt,
                                         std::optional<double> s = std::nullopt,
                                         bool strict_radius = false,
                                         double slack_scale = tol::kSlackScale);

/// Cross-parameter bound
/// |F_{w2-w1}(x,y)(m)/n - <F_{w1}(x)(m)/n, F_{w2}(y)(m)/n>| <= r*s. Id "4.10".
BoundCertificate check_fourier_cross_bound(const VectorTuple& xs, const VectorTuple& ys,
                                           double omega1, double omega2, int m,
                                           const ModuleVector& a, const ModuleVector& b,
                                           std::optional<double> r = std::nullopt,
                                           std::optional<double> s = std::nullopt,
                                           bool strict_radius = false,
                                           double slack_scale = tol::kSlackScale);

/// Rank-one approximation of the Fourier transform by the phased tuple
/// mean, with certified error at most r*sqrt(n^2 - sin^2 ratio). Id "4.12".
TransformCertificate fourier_mean_approx(const VectorTuple& xs, double omega, int m,
                                         const ModuleVector& a,
                                         std::optional<double> r = std::nullopt,
                                         double slack_scale = tol::kSlackScale);

/// Mellin analog: approximation S_{m-1}(n)*mean with error bounded by
/// r*sqrt(n*S_{2m-2}(n) - S_{m-1}(n)^2). Id "4.15".
TransformCertificate mellin_mean_approx(const VectorTuple& xs, int m, const ModuleVector& a,
                                        std::optional<double> r = std::nullopt,
                                        double slack_scale = tol::kSlackScale);

/// First and second moment sums mu_1 = sum k x_k, mu_2 = sum k^2 x_k
/// against their closed-form mean approximations. Ids "4.16"/"4.17"; the
/// bounds agree with mellin_mean_approx at m = 2, 3 by a power-sum identity.
std::pair<BoundCertificate, BoundCertificate> moment_certificates(
    const VectorTuple& xs, const ModuleVector& a, std::optional<double> r = std::nullopt,
    double slack_scale = tol::kSlackScale);

}  // namespace gruss
