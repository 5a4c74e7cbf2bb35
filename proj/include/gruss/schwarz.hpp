#pragma once

#include <vector>

#include "gruss/certificate.hpp"
#include "gruss/module.hpp"

namespace gruss {

// The six Schwarz-type inequalities of the pairing, instantiated with
// trace as the positive linear functional and the operator norm as the
// C*-seminorm. Each returns a one-link certificate.

/// |<x,y>|_op^2 <= |<x,x>|_op |<y,y>|_op. Id "2.1".
BoundCertificate check_schwarz_operator(const ModuleVector& x, const ModuleVector& y,
                                        double slack_scale = tol::kSlackScale);

/// (Re tr<x,y>)^2 <= tr<x,x> tr<y,y>. Id "2.2".
BoundCertificate check_schwarz_weak(const ModuleVector& x, const ModuleVector& y,
                                    double slack_scale = tol::kSlackScale);

/// |<x,y>|_tr^2 <= tr<x,x> tr<y,y>. Id "2.3".
BoundCertificate check_schwarz_strong(const ModuleVector& x, const ModuleVector& y,
                                      double slack_scale = tol::kSlackScale);

/// |tr<x,y>|^2 <= tr<x,x> tr<y,y>. Id "2.4".
BoundCertificate check_schwarz_functional(const ModuleVector& x, const ModuleVector& y,
                                          double slack_scale = tol::kSlackScale);

/// tr(<x,y><y,x>) <= tr<x,x> * spectral_radius(<y,y>). Id "2.5".
BoundCertificate check_schwarz_radius(const ModuleVector& x, const ModuleVector& y,
                                      double slack_scale = tol::kSlackScale);

/// Seminorm form of "2.1" with gamma = operator norm. Id "2.6".
BoundCertificate check_schwarz_seminorm(const ModuleVector& x, const ModuleVector& y,
                                        double slack_scale = tol::kSlackScale);

std::vector<BoundCertificate> check_schwarz_all(const ModuleVector& x, const ModuleVector& y,
                                                double slack_scale = tol::kSlackScale);

}  // namespace gruss
