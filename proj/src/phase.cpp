#include "gruss/phase.hpp"

#include <cmath>

namespace gruss {

namespace {

// 2*pi = kTwoPiHi + kTwoPiLo + O(1e-32).
constexpr double kTwoPiHi = 6.283185307179586476925286766559;  // rounds to 0x1.921fb54442d18p+2
constexpr double kTwoPiLo = 2.4492935982947063545443076545955e-16;

}  // namespace

double product_angle(double a, double b) {
    const double hi = a * b;
    const double lo = std::fma(a, b, -hi);  // exact residue of the product
    const double q = std::round(hi / kTwoPiHi);
    double r = std::fma(-q, kTwoPiHi, hi);  // cancellation done in one rounding
    r -= q * kTwoPiLo;
    r += lo;
    return r;
}

double sin_product(double a, double b) { return std::sin(product_angle(a, b)); }

Complex unit_phase(double a, double b) {
    const double t = product_angle(a, b);
    return Complex{std::cos(t), std::sin(t)};
}

}  // namespace gruss
