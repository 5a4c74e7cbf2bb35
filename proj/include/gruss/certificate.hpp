#pragma once

#include <string>
#include <vector>

#include "gruss/module.hpp"
#include "gruss/tolerances.hpp"

namespace gruss {

/// Outcome of evaluating one inequality: the left-hand side, every link
/// of the right-hand chain, and whether each adjacent pair is ordered
/// within a scale-aware additive slack.
///
/// tightness = lhs / final link; 0 when both sides vanish within slack.
struct BoundCertificate {
    std::string inequality;
    double lhs = 0.0;
    std::vector<double> rhs_chain;
    double slack = 0.0;
    bool pass = false;
    double tightness = 0.0;
    double r = 0.0;  // radii recorded when the inequality uses them
    double s = 0.0;
};

/// Builds a certificate under the uniform slack policy
///   slack = slack_scale * (1 + max(|lhs|, |links|)).
BoundCertificate make_certificate(std::string inequality, double lhs, std::vector<double> rhs_chain,
                                  double slack_scale = tol::kSlackScale, double r = 0.0,
                                  double s = 0.0);

/// Certificate of a transform-vs-mean approximation: the transform value,
/// its rank-one approximation, the achieved error and the proved bound.
struct TransformCertificate {
    std::string inequality;
    ModuleVector exact;
    ModuleVector approx;
    double error = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool pass = false;
    double tightness = 0.0;
    double r = 0.0;
};

TransformCertificate make_transform_certificate(std::string inequality, ModuleVector exact,
                                                ModuleVector approx, double error, double bound,
                                                double slack_scale = tol::kSlackScale,
                                                double r = 0.0);

}  // namespace gruss
