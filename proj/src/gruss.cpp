#include "gruss/gruss.hpp"

#include <cmath>

#include "gruss/algebra.hpp"

namespace gruss {

double flavor_seminorm(Flavor flavor, const ModuleVector& x) {
    return flavor == Flavor::CStar ? module_norm(x) : hs_seminorm(x);
}

Matrix gruss(const ProbabilityVector& p, const VectorTuple& xs, const VectorTuple& ys) {
    require_same_shape(xs, ys, "gruss");
    require_tuple_weights(p.size(), xs, "gruss");
    Matrix acc = Matrix::zero(xs.dim());
    for (int i = 0; i < xs.length(); ++i)
        acc += p.weight(i) * inner_product(xs.item(i), ys.item(i));
    const ModuleVector mean_x = weighted_combination(p, xs);
    const ModuleVector mean_y = weighted_combination(p, ys);
    return acc - inner_product(mean_x, mean_y);
}

Matrix gruss(const ProbabilityVector& p, const VectorTuple& xs) { return gruss(p, xs, xs); }

double tight_radius(const VectorTuple& xs, const ModuleVector& a, Flavor flavor) {
    double r = 0.0;
    for (const auto& x : xs.items()) r = std::max(r, flavor_seminorm(flavor, x - a));
    return r;
}

void require_radius(const VectorTuple& xs, const ModuleVector& a, double r, Flavor flavor,
                    double slack_scale, const char* which) {
    if (!(r >= 0.0)) throw RadiusViolated(std::string(which) + ": radius must be nonnegative");
    const double limit = r + slack_scale * (1.0 + r);
    for (const auto& x : xs.items())
        if (flavor_seminorm(flavor, x - a) > limit)
            throw RadiusViolated(std::string(which) + ": tuple item outside the stated radius");
}

namespace {

double max_seminorm(const VectorTuple& xs) {
    double m = 0.0;
    for (const auto& x : xs.items()) m = std::max(m, hs_seminorm(x));
    return m;
}

double max_abs_weight(const ScalarWeights& w) {
    double m = 0.0;
    for (const auto& a : w) m = std::max(m, std::abs(a));
    return m;
}

Complex mean_weight(const ProbabilityVector& p, const ScalarWeights& alphas) {
    Complex mu{0.0, 0.0};
    for (int i = 0; i < p.size(); ++i) mu += p.weight(i) * alphas[static_cast<size_t>(i)];
    return mu;
}

/// sum p_i alpha_i x_i - (sum p_i alpha_i)(sum p_i x_i), the left side
/// shared by the recentering identity and the weight-spread bound.
ModuleVector weighted_deviation(const ProbabilityVector& p, const ScalarWeights& alphas,
                                const VectorTuple& xs) {
    ScalarWeights scaled(alphas.size());
    for (int i = 0; i < p.size(); ++i)
        scaled[static_cast<size_t>(i)] = p.weight(i) * alphas[static_cast<size_t>(i)];
    const ModuleVector lhs = weighted_combination(scaled, xs);
    const ModuleVector mean = weighted_combination(p, xs);
    return lhs - mean_weight(p, alphas) * mean;
}

}  // namespace

IdentityResidual weight_deviation_identity_residual(const ProbabilityVector& p,
                                                    const ScalarWeights& alphas,
                                                    const VectorTuple& xs, const ModuleVector& a) {
    require_tuple_weights(p.size(), xs, "weight_deviation_identity_residual");
    require_tuple_weights(static_cast<int>(alphas.size()), xs,
                          "weight_deviation_identity_residual");
    const ModuleVector lhs = weighted_deviation(p, alphas, xs);

    const Complex mu = mean_weight(p, alphas);
    ScalarWeights centered(alphas.size());
    for (int i = 0; i < p.size(); ++i)
        centered[static_cast<size_t>(i)] = p.weight(i) * (alphas[static_cast<size_t>(i)] - mu);
    const ModuleVector rhs = weighted_combination(centered, translate(xs, a));

    IdentityResidual res;
    res.value = hs_seminorm(lhs - rhs);
    res.scale = 1.0 + 2.0 * max_abs_weight(alphas) * (max_seminorm(xs) + hs_seminorm(a));
    return res;
}

IdentityResidual translation_identity_residual(const ProbabilityVector& p, const VectorTuple& xs,
                                               const VectorTuple& ys, const ModuleVector& a,
                                               const ModuleVector& b) {
    const Matrix direct = gruss(p, xs, ys);
    const Matrix translated = gruss(p, translate(xs, a), translate(ys, b));

    IdentityResidual res;
    res.value = (direct - translated).frobenius_norm();
    res.scale = 1.0 + (max_seminorm(xs) + hs_seminorm(a)) * (max_seminorm(ys) + hs_seminorm(b));
    return res;
}

IdentityResidual pairwise_identity_residual(const ProbabilityVector& p, const VectorTuple& xs,
                                            const VectorTuple& ys) {
    const Matrix direct = gruss(p, xs, ys);
    Matrix double_sum = Matrix::zero(xs.dim());
    for (int i = 0; i < xs.length(); ++i) {
        for (int j = 0; j < xs.length(); ++j) {
            if (i == j) continue;
            const double w = p.weight(i) * p.weight(j);
            double_sum += w * inner_product(xs.item(i) - xs.item(j), ys.item(i) - ys.item(j));
        }
    }
    double_sum *= 0.5;

    IdentityResidual res;
    res.value = (direct - double_sum).frobenius_norm();
    res.scale = 1.0 + 4.0 * max_seminorm(xs) * max_seminorm(ys);
    return res;
}

BoundCertificate check_variance_product_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                              const VectorTuple& ys, const ModuleVector& a,
                                              const ModuleVector& b, double slack_scale) {
    const double g_norm = operator_norm(gruss(p, xs, ys));
    const VectorTuple tx = translate(xs, a);
    const VectorTuple ty = translate(ys, b);
    const double link1 = operator_norm(gruss(p, tx, tx)) * operator_norm(gruss(p, ty, ty));

    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < xs.length(); ++i) {
        const double nx = module_norm(tx.item(i));
        const double ny = module_norm(ty.item(i));
        sx += p.weight(i) * nx * nx;
        sy += p.weight(i) * ny * ny;
    }
    return make_certificate("3.1", g_norm * g_norm, {link1, sx * sy}, slack_scale);
}

BoundCertificate check_radius_product_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                            const VectorTuple& ys, const ModuleVector& a,
                                            const ModuleVector& b, std::optional<double> r,
                                            std::optional<double> s, double slack_scale) {
    const double rr = r.value_or(tight_radius(xs, a, Flavor::CStar));
    const double ss = s.value_or(tight_radius(ys, b, Flavor::CStar));
    require_radius(xs, a, rr, Flavor::CStar, slack_scale, "3.8 x-side");
    require_radius(ys, b, ss, Flavor::CStar, slack_scale, "3.8 y-side");
    const double lhs = operator_norm(gruss(p, xs, ys));
    return make_certificate("3.8", lhs, {rr * ss}, slack_scale, rr, ss);
}

WitnessInstance sharpness_witness(const ModuleVector& a, const ModuleVector& b, double r, double s,
                                  const ModuleVector& e, Flavor flavor) {
    require_same_shape(a, e, "sharpness_witness");
    require_same_shape(b, e, "sharpness_witness");
    if (!(r >= 0.0) || !(s >= 0.0)) throw Error("sharpness_witness: radii must be nonnegative");
    const double unit = flavor_seminorm(flavor, e);
    if (std::abs(unit - 1.0) > tol::kUnit)
        throw NotUnit("sharpness_witness: direction is not unit-normalized");

    WitnessInstance w;
    w.p = ProbabilityVector({0.5, 0.5});
    w.xs = VectorTuple({a + r * e, a - r * e});
    w.ys = VectorTuple({b + s * e, b - s * e});
    return w;
}

BoundCertificate check_scalar_weight_bound(const ProbabilityVector& p, const ScalarWeights& alphas,
                                           const VectorTuple& xs, const ModuleVector& a,
                                           std::optional<double> r, double slack_scale) {
    require_tuple_weights(p.size(), xs, "check_scalar_weight_bound");
    require_tuple_weights(static_cast<int>(alphas.size()), xs, "check_scalar_weight_bound");
    const double rr = r.value_or(tight_radius(xs, a, Flavor::CStar));
    require_radius(xs, a, rr, Flavor::CStar, slack_scale, "3.10");

    const double lhs = module_norm(weighted_deviation(p, alphas, xs));

    const Complex mu = mean_weight(p, alphas);
    double abs_dev = 0.0, sq = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        abs_dev += p.weight(i) * std::abs(alphas[static_cast<size_t>(i)] - mu);
        sq += p.weight(i) * std::norm(alphas[static_cast<size_t>(i)]);
    }
    const double spread = std::sqrt(std::max(sq - std::norm(mu), 0.0));
    return make_certificate("3.10", lhs, {rr * abs_dev, rr * spread}, slack_scale, rr, 0.0);
}

BoundCertificate check_algebra_product_bound(const ProbabilityVector& p, const VectorTuple& as,
                                             const VectorTuple& bs, const Matrix& center_a,
                                             const Matrix& center_b, std::optional<double> r,
                                             std::optional<double> s, double slack_scale) {
    if (as.rank() != 1 || bs.rank() != 1)
        throw ShapeMismatch("check_algebra_product_bound: rank-1 tuples required");
    require_same_shape(as, bs, "check_algebra_product_bound");
    require_tuple_weights(p.size(), as, "check_algebra_product_bound");

    const ModuleVector ca(std::vector<Matrix>{center_a});
    const ModuleVector cb(std::vector<Matrix>{center_b});
    const double rr = r.value_or(tight_radius(as, ca, Flavor::CStar));
    const double ss = s.value_or(tight_radius(bs, cb, Flavor::CStar));
    require_radius(as, ca, rr, Flavor::CStar, slack_scale, "3.8-alg a-side");
    require_radius(bs, cb, ss, Flavor::CStar, slack_scale, "3.8-alg b-side");

    const int k = as.dim();
    Matrix prod_sum = Matrix::zero(k);
    Matrix mean_a = Matrix::zero(k);
    Matrix mean_b = Matrix::zero(k);
    for (int i = 0; i < as.length(); ++i) {
        const Matrix& ai = as.item(i).part(0);
        const Matrix& bi = bs.item(i).part(0);
        prod_sum += p.weight(i) * (ai * bi);
        mean_a += p.weight(i) * ai;
        mean_b += p.weight(i) * bi;
    }
    const double lhs = operator_norm(prod_sum - mean_a * mean_b);
    return make_certificate("3.8-alg", lhs, {rr * ss}, slack_scale, rr, ss);
}

BoundCertificate check_trace_radius_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                          const VectorTuple& ys, const ModuleVector& a,
                                          const ModuleVector& b, std::optional<double> r,
                                          std::optional<double> s, double slack_scale) {
    const double rr = r.value_or(tight_radius(xs, a, Flavor::HStar));
    const double ss = s.value_or(tight_radius(ys, b, Flavor::HStar));
    require_radius(xs, a, rr, Flavor::HStar, slack_scale, "5.2 x-side");
    require_radius(ys, b, ss, Flavor::HStar, slack_scale, "5.2 y-side");
    const double lhs = trace_norm(gruss(p, xs, ys));
    return make_certificate("5.2", lhs, {rr * ss}, slack_scale, rr, ss);
}

BoundCertificate check_trace_companion_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                             const VectorTuple& ys, const ModuleVector& a,
                                             const ModuleVector& b, std::optional<double> r,
                                             std::optional<double> s, double slack_scale) {
    const double rr = r.value_or(tight_radius(xs, a, Flavor::HStar));
    const double ss = s.value_or(tight_radius(ys, b, Flavor::HStar));
    require_radius(xs, a, rr, Flavor::HStar, slack_scale, "5.7 x-side");
    require_radius(ys, b, ss, Flavor::HStar, slack_scale, "5.7 y-side");

    const VectorTuple tx = translate(xs, a);
    const VectorTuple ty = translate(ys, b);
    const double mx = hs_seminorm(weighted_combination(p, tx));
    const double my = hs_seminorm(weighted_combination(p, ty));

    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < xs.length(); ++i) {
        const double nx = hs_seminorm(tx.item(i));
        const double ny = hs_seminorm(ty.item(i));
        sx += p.weight(i) * nx * nx;
        sy += p.weight(i) * ny * ny;
    }

    const double lhs = trace_norm(gruss(p, xs, ys));
    const double spread = std::sqrt(std::max(sx - mx * mx, 0.0) * std::max(sy - my * my, 0.0));
    const double clipped =
        std::sqrt(std::max(rr * rr - mx * mx, 0.0) * std::max(ss * ss - my * my, 0.0));
    // (m^2-n^2)(p^2-q^2) <= (mp-nq)^2 turns the clipped product into rr*ss - mx*my.
    return make_certificate("5.7", lhs, {spread, clipped, rr * ss - mx * my, rr * ss}, slack_scale,
                            rr, ss);
}

double trace_spread_factor(const ProbabilityVector& p, const VectorTuple& ys,
                           const ModuleVector& b) {
    require_tuple_weights(p.size(), ys, "trace_spread_factor");
    const VectorTuple ty = translate(ys, b);
    double sum = 0.0;
    for (int i = 0; i < ys.length(); ++i) {
        const double n = hs_seminorm(ty.item(i));
        sum += p.weight(i) * n * n;
    }
    const double mean = hs_seminorm(weighted_combination(p, ty));
    return std::sqrt(std::max(sum - mean * mean, 0.0));
}

BoundCertificate check_trace_onesided_bound(const ProbabilityVector& p, const VectorTuple& xs,
                                            const VectorTuple& ys, const ModuleVector& a,
                                            std::optional<double> r, double slack_scale) {
    require_same_shape(xs, ys, "check_trace_onesided_bound");
    const double rr = r.value_or(tight_radius(xs, a, Flavor::HStar));
    require_radius(xs, a, rr, Flavor::HStar, slack_scale, "5.13");

    const double lhs = trace_norm(gruss(p, xs, ys));
    const double factor = trace_spread_factor(p, ys, ModuleVector(ys.rank(), ys.dim()));
    return make_certificate("5.13", lhs, {rr * factor}, slack_scale, rr, 0.0);
}

}  // namespace gruss
