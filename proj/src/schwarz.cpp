#include "gruss/schwarz.hpp"

#include <cmath>

#include "gruss/algebra.hpp"

namespace gruss {

BoundCertificate check_schwarz_operator(const ModuleVector& x, const ModuleVector& y,
                                        double slack_scale) {
    const double cross = operator_norm(inner_product(x, y));
    const double xx = operator_norm(inner_product(x, x));
    const double yy = operator_norm(inner_product(y, y));
    return make_certificate("2.1", cross * cross, {xx * yy}, slack_scale);
}

BoundCertificate check_schwarz_weak(const ModuleVector& x, const ModuleVector& y,
                                    double slack_scale) {
    const double cross = inner_product(x, y).trace().real();
    const double xx = inner_product(x, x).trace().real();
    const double yy = inner_product(y, y).trace().real();
    return make_certificate("2.2", cross * cross, {xx * yy}, slack_scale);
}

BoundCertificate check_schwarz_strong(const ModuleVector& x, const ModuleVector& y,
                                      double slack_scale) {
    const double cross = trace_norm(inner_product(x, y));
    const double xx = inner_product(x, x).trace().real();
    const double yy = inner_product(y, y).trace().real();
    return make_certificate("2.3", cross * cross, {xx * yy}, slack_scale);
}

BoundCertificate check_schwarz_functional(const ModuleVector& x, const ModuleVector& y,
                                          double slack_scale) {
    const double cross = std::abs(inner_product(x, y).trace());
    const double xx = inner_product(x, x).trace().real();
    const double yy = inner_product(y, y).trace().real();
    return make_certificate("2.4", cross * cross, {xx * yy}, slack_scale);
}

BoundCertificate check_schwarz_radius(const ModuleVector& x, const ModuleVector& y,
                                      double slack_scale) {
    const Matrix xy = inner_product(x, y);
    const Matrix yx = inner_product(y, x);
    const double lhs = (xy * yx).trace().real();
    const double xx = inner_product(x, x).trace().real();
    const double rad = spectral_radius(inner_product(y, y));
    return make_certificate("2.5", lhs, {xx * rad}, slack_scale);
}

BoundCertificate check_schwarz_seminorm(const ModuleVector& x, const ModuleVector& y,
                                        double slack_scale) {
    BoundCertificate cert = check_schwarz_operator(x, y, slack_scale);
    cert.inequality = "2.6";
    return cert;
}

std::vector<BoundCertificate> check_schwarz_all(const ModuleVector& x, const ModuleVector& y,
                                                double slack_scale) {
    return {check_schwarz_operator(x, y, slack_scale), check_schwarz_weak(x, y, slack_scale),
            check_schwarz_strong(x, y, slack_scale), check_schwarz_functional(x, y, slack_scale),
            check_schwarz_radius(x, y, slack_scale), check_schwarz_seminorm(x, y, slack_scale)};
}

}  // namespace gruss
