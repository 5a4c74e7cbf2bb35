#include "gruss/certificate.hpp"

#include <cmath>
#include <utility>

namespace gruss {

namespace {

double chain_slack(double lhs, const std::vector<double>& chain, double slack_scale) {
    double m = std::abs(lhs);
    for (double link : chain) m = std::max(m, std::abs(link));
    return slack_scale * (1.0 + m);
}

double tightness_of(double lhs, double final_rhs, double slack) {
    if (final_rhs > slack) return lhs / final_rhs;
    // Degenerate bound: both sides must vanish.
    return (lhs <= slack) ? 0.0 : lhs / slack;
}

}  // namespace

BoundCertificate make_certificate(std::string inequality, double lhs, std::vector<double> rhs_chain,
                                  double slack_scale, double r, double s) {
    BoundCertificate cert;
    cert.inequality = std::move(inequality);
    cert.lhs = lhs;
    cert.rhs_chain = std::move(rhs_chain);
    cert.slack = chain_slack(lhs, cert.rhs_chain, slack_scale);
    cert.r = r;
    cert.s = s;

    bool ok = !cert.rhs_chain.empty() && std::isfinite(lhs);
    double prev = lhs;
    for (double link : cert.rhs_chain) {
        if (!std::isfinite(link) || prev > link + cert.slack) ok = false;
        prev = link;
    }
    cert.pass = ok;
    cert.tightness = cert.rhs_chain.empty()
                         ? 0.0
                         : tightness_of(lhs, cert.rhs_chain.back(), cert.slack);
    if (!std::isfinite(cert.tightness)) cert.tightness = 0.0;
    return cert;
}

TransformCertificate make_transform_certificate(std::string inequality, ModuleVector exact,
                                                ModuleVector approx, double error, double bound,
                                                double slack_scale, double r) {
    TransformCertificate cert;
    cert.inequality = std::move(inequality);
    cert.exact = std::move(exact);
    cert.approx = std::move(approx);
    cert.error = error;
    cert.bound = bound;
    cert.slack = slack_scale * (1.0 + std::max(std::abs(error), std::abs(bound)));
    cert.pass = std::isfinite(error) && std::isfinite(bound) && error <= bound + cert.slack;
    cert.tightness = (bound > cert.slack) ? error / bound : (error <= cert.slack ? 0.0 : error / cert.slack);
    cert.r = r;
    return cert;
}

}  // namespace gruss
