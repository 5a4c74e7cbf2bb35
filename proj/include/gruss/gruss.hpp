#pragma once

#include <optional>

#include "gruss/certificate.hpp"
#include "gruss/module.hpp"

namespace gruss {

/// Which seminorm family the module carries: the operator-norm-induced
/// one (cstar) or the trace one (hstar). Radius conditions and the bound
/// catalog split along this choice.
enum class Flavor { CStar, HStar };

double flavor_seminorm(Flavor flavor, const ModuleVector& x);

/// The weighted Chebyshev difference
///   G_p(xs, ys) = sum_i p_i <x_i, y_i> - <sum_i p_i x_i, sum_i p_i y_i>,
/// an algebra element; positive when ys == xs.
Matrix gruss(const ProbabilityVector& p, const VectorTuple& xs, const VectorTuple& ys);
Matrix gruss(const ProbabilityVector& p, const VectorTuple& xs);

/// Residual of an identity that holds exactly in real arithmetic.
/// Contract: value <= 1e-11 * scale on every admissible input.
struct IdentityResidual {
    double value = 0.0;
    double scale = 1.0;

    [[nodiscard]] bool within(double mult = 1e-11) const { return value <= mult * scale; }
};

/// sum p_i a_i x_i - (sum p_i a_i)(sum p_i x_i) recentred around any a:
/// both routes agree for every choice of a. Id "2.7".
IdentityResidual weight_deviation_identity_residual(const ProbabilityVector& p,
                                                    const ScalarWeights& alphas,
                                                    const VectorTuple& xs, const ModuleVector& a);

/// G is invariant under translating xs by a and ys by b. Id "2.8".
IdentityResidual translation_identity_residual(const ProbabilityVector& p, const VectorTuple& xs,
                                               const VectorTuple& ys, const ModuleVector& a,
                                               const ModuleVector& b);

/// G equals half the weighted double sum of <x_i - x_j, y_i - y_j>. Id "3.2".
IdentityResidual pairwise_identity_residual(const ProbabilityVector& p, const VectorTuple& xs,
                                            const VectorTuple& ys);

/// |G|^2 <= |G(xs)| * |G(ys)| <= (sum p_i |x_i-a|^2)(sum p_i |y_i-b|^2). Id "3.1".
BoundCertificate check_variance_product_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                              const VectorTuple& ys, const ModuleVector& a,
                                              const ModuleVector& b,
                                              double slack_scale = tol::kSlackScale);

/// |G| <= r*s when every x_i is within r of a and every y_i within s of b
/// (operator-norm seminorm). Radii default to the tight suprema. Id "3.8".
BoundCertificate check_radius_product_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                            const VectorTuple& ys, const ModuleVector& a,
                                            const ModuleVector& b,
                                            std::optional<double> r = std::nullopt,
                                            std::optional<double> s = std::nullopt,
                                            double slack_scale = tol::kSlackScale);

/// Two-point family attaining equality in the radius product bounds:
/// p = (1/2, 1/2), x = a -+ r e, y = b -+ s e with e a unit direction in
/// the flavor's seminorm. Throws NotUnit when e is not normalized.
struct WitnessInstance {
    ProbabilityVector p;
    VectorTuple xs;
    VectorTuple ys;
};
WitnessInstance sharpness_witness(const ModuleVector& a, const ModuleVector& b, double r, double s,
                                  const ModuleVector& e, Flavor flavor);

/// Deviation of a scalar-weighted combination from its mean-weighted
/// counterpart, bounded by r times two weight spreads. Id "3.10".
BoundCertificate check_scalar_weight_bound(const ProbabilityVector& p, const ScalarWeights& alphas,
                                           const VectorTuple& xs, const ModuleVector& a,
                                           std::optional<double> r = std::nullopt,
                                           double slack_scale = tol::kSlackScale);

/// Adjoint-free product form over the algebra itself (rank-1 tuples):
/// |sum p_i a_i b_i - (sum p_i a_i)(sum p_i b_i)| <= r*s. Id "3.8-alg".
BoundCertificate check_algebra_product_bound(const ProbabilityVector& p, const VectorTuple& as,
                                             const VectorTuple& bs, const Matrix& center_a,
                                             const Matrix& center_b,
                                             std::optional<double> r = std::nullopt,
                                             std::optional<double> s = std::nullopt,
                                             double slack_scale = tol::kSlackScale);

/// Trace-norm radius bound tau(G) <= r*s under the trace seminorm radius
/// conditions. Id "5.2".
BoundCertificate check_trace_radius_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                          const VectorTuple& ys, const ModuleVector& a,
                                          const ModuleVector& b,
                                          std::optional<double> r = std::nullopt,
                                          std::optional<double> s = std::nullopt,
                                          double slack_scale = tol::kSlackScale);

/// Companion chain tau(G) <= sqrt(tr G(xs) tr G(ys))
///   <= sqrt((r^2-m^2)(s^2-q^2)) <= r*s - m*q <= r*s, where m, q are the
/// trace seminorms of the weighted mean deviations. Id "5.7".
BoundCertificate check_trace_companion_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                             const VectorTuple& ys, const ModuleVector& a,
                                             const ModuleVector& b,
                                             std::optional<double> r = std::nullopt,
                                             std::optional<double> s = std::nullopt,
                                             double slack_scale = tol::kSlackScale);

/// One-sided bound tau(G) <= r * spread(ys) needing a radius only on xs;
/// the ys spread is evaluated at center zero. Id "5.13".
BoundCertificate check_trace_onesided_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                            const VectorTuple& ys, const ModuleVector& a,
                                            std::optional<double> r = std::nullopt,
                                            double slack_scale = tol::kSlackScale);

/// Translated spread factor [sum p_i |y_i-b|_tr^2 - |sum p_i (y_i-b)|_tr^2]^(1/2);
/// valid as a one-sided bound factor for every center b.
double trace_spread_factor(const ProbabilityVector& p, const VectorTuple& ys,
                           const ModuleVector& b);

/// Largest flavor seminorm of x_i - a over the tuple: the tightest
/// admissible radius.
double tight_radius(const VectorTuple& xs, const ModuleVector& a, Flavor flavor);

/// Throws RadiusViolated unless every x_i lies within r + slack of a.
void require_radius(const VectorTuple& xs, const ModuleVector& a, double r, Flavor flavor,
                    double slack_scale, const char* which);

}  // namespace gruss
