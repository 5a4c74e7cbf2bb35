#include "gruss/transforms.hpp"

#include <cmath>

#include "gruss/algebra.hpp"
#include "gruss/gruss.hpp"
#include "gruss/phase.hpp"

namespace gruss {

namespace {

void require_index(int m, int n, const char* where) {
    if (m < 1 || m > n) throw BadIndex(std::string(where) + ": index m outside 1..n");
}

double ipow(double base, int e) {
    double r = 1.0;
    double b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

VectorTuple fourier_phased(const VectorTuple& ys, double omega, int m) {
    std::vector<ModuleVector> items;
    items.reserve(static_cast<size_t>(ys.length()));
    for (int k = 1; k <= ys.length(); ++k)
        items.push_back(unit_phase(2.0 * omega, static_cast<double>(m) * k) * ys.item(k - 1));
    return VectorTuple(std::move(items));
}

VectorTuple mellin_phased(const VectorTuple& ys, int m) {
    std::vector<ModuleVector> items;
    items.reserve(static_cast<size_t>(ys.length()));
    for (int k = 1; k <= ys.length(); ++k)
        items.push_back(ipow(static_cast<double>(k), m - 1) * ys.item(k - 1));
    return VectorTuple(std::move(items));
}

ModuleVector tuple_mean(const VectorTuple& xs) {
    ModuleVector acc(xs.rank(), xs.dim());
    for (const auto& x : xs.items()) acc += x;
    return (1.0 / xs.length()) * acc;
}

}  // namespace

ModuleVector fourier(const VectorTuple& xs, double omega, int m) {
    require_index(m, xs.length(), "fourier");
    ModuleVector acc(xs.rank(), xs.dim());
    for (int k = 1; k <= xs.length(); ++k)
        acc += unit_phase(2.0 * omega, static_cast<double>(m) * k) * xs.item(k - 1);
    return acc;
}

Matrix fourier_pair(const VectorTuple& xs, const VectorTuple& ys, double omega, int m) {
    require_same_shape(xs, ys, "fourier_pair");
    require_index(m, xs.length(), "fourier_pair");
    Matrix acc = Matrix::zero(xs.dim());
    for (int k = 1; k <= xs.length(); ++k)
        acc += unit_phase(2.0 * omega, static_cast<double>(m) * k) *
               inner_product(xs.item(k - 1), ys.item(k - 1));
    return acc;
}

ModuleVector mellin(const VectorTuple& xs, int m) {
    require_index(m, xs.length(), "mellin");
    ModuleVector acc(xs.rank(), xs.dim());
    for (int k = 1; k <= xs.length(); ++k)
        acc += ipow(static_cast<double>(k), m - 1) * xs.item(k - 1);
    return acc;
}

Matrix mellin_pair(const VectorTuple& xs, const VectorTuple& ys, int m) {
    require_same_shape(xs, ys, "mellin_pair");
    require_index(m, xs.length(), "mellin_pair");
    Matrix acc = Matrix::zero(xs.dim());
    for (int k = 1; k <= xs.length(); ++k)
        acc += ipow(static_cast<double>(k), m - 1) * inner_product(xs.item(k - 1), ys.item(k - 1));
    return acc;
}

WideInt power_sum_exact(int p, long long n) {
    if (p < 0) throw BadIndex("power_sum: power must be nonnegative");
    WideInt acc = 0;
    for (long long k = 1; k <= n; ++k)
        acc += boost::multiprecision::pow(WideInt(k), static_cast<unsigned>(p));
    return acc;
}

double power_sum(int p, long long n) { return power_sum_exact(p, n).convert_to<double>(); }

Complex geometric_phase_sum(double omega, int m, int n) {
    if (m < 1 || n < 1) throw BadIndex("geometric_phase_sum: m and n must be >= 1");
    const double sin_m = sin_product(omega, static_cast<double>(m));
    if (std::abs(sin_m) <= tol::kSing)
        throw Singular("geometric_phase_sum: omega*m is a multiple of pi");
    const double ratio = sin_product(omega, static_cast<double>(m) * n) / sin_m;
    return ratio * unit_phase(omega, static_cast<double>(m) * (n + 1));
}

BoundCertificate check_fourier_pair_bound(const VectorTuple& xs, const VectorTuple& ys,
                                          double omega, int m, const ModuleVector& a,
                                          const ModuleVector& b, std::optional<double> r,
                                          std::optional<double> s, bool strict_radius,
                                          double slack_scale) {
    require_same_shape(xs, ys, "check_fourier_pair_bound");
    const int n = xs.length();
    require_index(m, n, "check_fourier_pair_bound");

    const double rr = r.value_or(tight_radius(xs, a, Flavor::CStar));
    require_radius(xs, a, rr, Flavor::CStar, slack_scale, "4.4 x-side");

    double ss;
    if (s.has_value()) {
        ss = *s;
    } else if (strict_radius) {
        ss = 0.0;
        for (int mm = 1; mm <= n; ++mm)
            ss = std::max(ss, tight_radius(fourier_phased(ys, omega, mm), b, Flavor::CStar));
    } else {
        ss = tight_radius(fourier_phased(ys, omega, m), b, Flavor::CStar);
    }
    if (strict_radius) {
        for (int mm = 1; mm <= n; ++mm)
            require_radius(fourier_phased(ys, omega, mm), b, ss, Flavor::CStar, slack_scale,
                           "4.4 y-side");
    } else {
        require_radius(fourier_phased(ys, omega, m), b, ss, Flavor::CStar, slack_scale,
                       "4.4 y-side");
    }

    const double lhs = operator_norm(fourier_pair(xs, ys, omega, m) -
                                     inner_product(tuple_mean(xs), fourier(ys, omega, m)));
    return make_certificate("4.4", lhs, {n * rr * ss}, slack_scale, rr, ss);
}

BoundCertificate check_mellin_pair_bound(const VectorTuple& xs, const VectorTuple& ys, int m,
                                         const ModuleVector& a, const ModuleVector& b,
                                         std::optional<double> r, std::optional<double> s,
                                         bool strict_radius, double slack_scale) {
    require_same_shape(xs, ys, "check_mellin_pair_bound");
    const int n = xs.length();
    require_index(m, n, "check_mellin_pair_bound");

    const double rr = r.value_or(tight_radius(xs, a, Flavor::CStar));
    require_radius(xs, a, rr, Flavor::CStar, slack_scale, "4.8 x-side");

    double ss;
    if (s.has_value()) {
        ss = *s;
    } else if (strict_radius) {
        ss = 0.0;
        for (int mm = 1; mm <= n; ++mm)
            ss = std::max(ss, tight_radius(mellin_phased(ys, mm), b, Flavor::CStar));
    } else {
        ss = tight_radius(mellin_phased(ys, m), b, Flavor::CStar);
    }
    if (strict_radius) {
        for (int mm = 1; mm <= n; ++mm)
            require_radius(mellin_phased(ys, mm), b, ss, Flavor::CStar, slack_scale, "4.8 y-side");
    } else {
        require_radius(mellin_phased(ys, m), b, ss, Flavor::CStar, slack_scale, "4.8 y-side");
    }

    const double lhs = operator_norm(mellin_pair(xs, ys, m) -
                                     inner_product(tuple_mean(xs), mellin(ys, m)));
    return make_certificate("4.8", lhs, {n * rr * ss}, slack_scale, rr, ss);
}

BoundCertificate check_fourier_cross_bound(const VectorTuple& xs, const VectorTuple& ys,
                                           double omega1, double omega2, int m,
                                           const ModuleVector& a, const ModuleVector& b,
                                           std::optional<double> r, std::optional<double> s,
                                           bool strict_radius, double slack_scale) {
    require_same_shape(xs, ys, "check_fourier_cross_bound");
    const int n = xs.length();
    require_index(m, n, "check_fourier_cross_bound");

    auto phased_radius = [&](const VectorTuple& t, const ModuleVector& center, double omega,
                             std::optional<double> given, const char* which) {
        double radius;
        if (given.has_value()) {
            radius = *given;
        } else if (strict_radius) {
            radius = 0.0;
            for (int mm = 1; mm <= n; ++mm)
                radius = std::max(radius,
                                  tight_radius(fourier_phased(t, omega, mm), center, Flavor::CStar));
        } else {
            radius = tight_radius(fourier_phased(t, omega, m), center, Flavor::CStar);
        }
        if (strict_radius) {
            for (int mm = 1; mm <= n; ++mm)
                require_radius(fourier_phased(t, omega, mm), center, radius, Flavor::CStar,
                               slack_scale, which);
        } else {
            require_radius(fourier_phased(t, omega, m), center, radius, Flavor::CStar, slack_scale,
                           which);
        }
        return radius;
    };
    const double rr = phased_radius(xs, a, omega1, r, "4.10 x-side");
    const double ss = phased_radius(ys, b, omega2, s, "4.10 y-side");

    const double inv_n = 1.0 / n;
    const Matrix lhs_matrix =
        inv_n * fourier_pair(xs, ys, omega2 - omega1, m) -
        inner_product(inv_n * fourier(xs, omega1, m), inv_n * fourier(ys, omega2, m));
    return make_certificate("4.10", operator_norm(lhs_matrix), {rr * ss}, slack_scale, rr, ss);
}

TransformCertificate fourier_mean_approx(const VectorTuple& xs, double omega, int m,
                                         const ModuleVector& a, std::optional<double> r,
                                         double slack_scale) {
    const int n = xs.length();
    require_index(m, n, "fourier_mean_approx");
    const double sin_m = sin_product(omega, static_cast<double>(m));
    if (std::abs(sin_m) <= tol::kSing)
        throw Singular("fourier_mean_approx: omega*m is a multiple of pi");

    const double rr = r.value_or(tight_radius(xs, a, Flavor::CStar));
    require_radius(xs, a, rr, Flavor::CStar, slack_scale, "4.12");

    const Complex factor = geometric_phase_sum(omega, m, n);
    ModuleVector exact = fourier(xs, omega, m);
    ModuleVector approx = factor * tuple_mean(xs);
    const double error = module_norm(exact - approx);

    const double ratio = sin_product(omega, static_cast<double>(m) * n) / sin_m;
    const double bound =
        rr * std::sqrt(std::max(static_cast<double>(n) * n - ratio * ratio, 0.0));
    return make_transform_certificate("4.12", std::move(exact), std::move(approx), error, bound,
                                      slack_scale, rr);
}

TransformCertificate mellin_mean_approx(const VectorTuple& xs, int m, const ModuleVector& a,
                                        std::optional<double> r, double slack_scale) {
    const int n = xs.length();
    require_index(m, n, "mellin_mean_approx");

    const double rr = r.value_or(tight_radius(xs, a, Flavor::CStar));
    require_radius(xs, a, rr, Flavor::CStar, slack_scale, "4.15");

    ModuleVector exact = mellin(xs, m);
    ModuleVector approx = power_sum(m - 1, n) * tuple_mean(xs);
    const double error = module_norm(exact - approx);

    // n*S_{2m-2}(n) - S_{m-1}(n)^2 >= 0, kept exact until the final root.
    const WideInt s_low = power_sum_exact(m - 1, n);
    const WideInt spread = WideInt(n) * power_sum_exact(2 * m - 2, n) - s_low * s_low;
    const double bound = rr * std::sqrt(std::max(spread.convert_to<double>(), 0.0));
    return make_transform_certificate("4.15", std::move(exact), std::move(approx), error, bound,
                                      slack_scale, rr);
}

std::pair<BoundCertificate, BoundCertificate> moment_certificates(const VectorTuple& xs,
                                                                  const ModuleVector& a,
                                                                  std::optional<double> r,
                                                                  double slack_scale) {
    const int n = xs.length();
    const double rr = r.value_or(tight_radius(xs, a, Flavor::CStar));
    require_radius(xs, a, rr, Flavor::CStar, slack_scale, "4.16/4.17");

    ModuleVector sum(xs.rank(), xs.dim());
    ModuleVector mu1(xs.rank(), xs.dim());
    ModuleVector mu2(xs.rank(), xs.dim());
    for (int k = 1; k <= n; ++k) {
        sum += xs.item(k - 1);
        mu1 += static_cast<double>(k) * xs.item(k - 1);
        mu2 += static_cast<double>(k) * k * xs.item(k - 1);
    }

    const double nd = n;
    const double lhs1 = module_norm(mu1 - ((nd + 1.0) / 2.0) * sum);
    const double bound1 = rr * nd / 2.0 * std::sqrt((nd - 1.0) * (nd + 1.0) / 3.0);

    const double lhs2 = module_norm(mu2 - ((nd + 1.0) * (2.0 * nd + 1.0) / 6.0) * sum);
    const double bound2 = rr * nd / (6.0 * std::sqrt(5.0)) *
                          std::sqrt((nd - 1.0) * (nd + 1.0) * (2.0 * nd + 1.0) * (8.0 * nd + 11.0));

    return {make_certificate("4.16", lhs1, {bound1}, slack_scale, rr, 0.0),
            make_certificate("4.17", lhs2, {bound2}, slack_scale, rr, 0.0)};
}

}  // namespace gruss
