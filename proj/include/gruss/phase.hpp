#pragma once

#include "gruss/matrix.hpp"

namespace gruss {

/// (a * b) mod 2*pi, evaluated so the result tracks the exact real
/// product of the two doubles to a few ulp even when a*b is large.
/// The product is split with an fma and reduced against a two-word
/// representation of 2*pi.
double product_angle(double a, double b);

/// sin(a*b) through product_angle.
double sin_product(double a, double b);

/// exp(i*a*b) through product_angle.
Complex unit_phase(double a, double b);

}  // namespace gruss
