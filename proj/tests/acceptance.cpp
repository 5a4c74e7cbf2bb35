// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Criterion 7 drives the installed CLI binary when
// its path is passed as argv[1], and falls back to the in-process
// reporting path otherwise.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gruss/algebra.hpp"
#include "gruss/gruss.hpp"
#include "gruss/instance.hpp"
#include "gruss/phase.hpp"
#include "gruss/suite.hpp"
#include "gruss/transforms.hpp"

namespace {

using gruss::Complex;
using gruss::Flavor;
using gruss::Matrix;
using gruss::ModuleVector;
using gruss::ProbabilityVector;
using gruss::VectorTuple;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++g_failures;
}

const gruss::LineStat& line_of(const gruss::SuiteReport& report, const std::string& id) {
    for (const auto& line : report.lines)
        if (line.inequality == id) return line;
    throw std::runtime_error("missing report line " + id);
}

// ---- criteria 1-3 share one default-config suite run ----------------------

void criteria_identities_schwarz_bounds(const gruss::SuiteReport& rep) {
    // 1: identity residuals within 1e-11 * scale over the seeded run
    {
        bool ok = rep.wall_seconds <= 60.0;
        std::ostringstream detail;
        detail << "identity residuals over " << rep.config.trials << " trials:";
        for (const char* id : {"2.7", "2.8", "3.2"}) {
            const auto& line = line_of(rep, id);
            ok = ok && line.passes == line.trials && line.max_residual <= 1e-11;
            detail << " " << id << " max " << line.max_residual << ";";
        }
        detail << " wall " << rep.wall_seconds << " s (limit 60)";
        report(1, ok, detail.str());
    }

    // 2: Schwarz family holds with zero violations
    {
        bool ok = true;
        uint64_t checked = 0;
        for (const char* id : {"2.1", "2.2", "2.3", "2.4", "2.5", "2.6"}) {
            const auto& line = line_of(rep, id);
            ok = ok && line.passes == line.trials && line.trials > 0;
            checked += line.trials;
        }
        std::ostringstream detail;
        detail << "schwarz inequalities: " << checked << " certificates, zero violations: "
               << (ok ? "yes" : "no");
        report(2, ok, detail.str());
    }

    // 3: bound certificates with tight auto-radii, monotone chains
    {
        bool ok = true;
        std::ostringstream detail;
        detail << "bound certificates:";
        for (const char* id : {"3.1", "3.8", "3.10", "5.2", "5.7", "5.13"}) {
            const auto& line = line_of(rep, id);
            ok = ok && line.passes == line.trials && line.trials > 0;
            detail << " " << id << " " << line.passes << "/" << line.trials << ";";
        }
        report(3, ok, detail.str());
    }
}

// ---- criterion 4: witness sharpness across radii and dimensions ------------

void criterion_sharpness() {
    gruss::Rng rng(20240810);
    bool ok = true;
    double worst_c = 0.0, worst_h = 0.0;
    for (const double r : {1e-3, 1.0, 1e3}) {
        for (const double s : {1e-3, 1.0, 1e3}) {
            for (const int k : {1, 2, 4}) {
                const int d = rng.uniform_int(1, 3);
                {
                    const ModuleVector e = gruss::random_unit_vector(rng, d, k, Flavor::CStar);
                    const ModuleVector a = r * gruss::random_module_vector(rng, d, k);
                    const ModuleVector b = s * gruss::random_module_vector(rng, d, k);
                    const auto w = gruss::sharpness_witness(a, b, r, s, e, Flavor::CStar);
                    const auto cert =
                        gruss::check_radius_product_bound(w.p, w.xs, w.ys, a, b, r, s);
                    const double dev = std::abs(cert.tightness - 1.0);
                    worst_c = std::max(worst_c, dev);
                    ok = ok && cert.pass && dev <= 1e-10;
                }
                {
                    const ModuleVector e = gruss::random_unit_vector(rng, d, k, Flavor::HStar);
                    const ModuleVector a = r * gruss::random_module_vector(rng, d, k);
                    const ModuleVector b = s * gruss::random_module_vector(rng, d, k);
                    const auto w = gruss::sharpness_witness(a, b, r, s, e, Flavor::HStar);
                    const auto cert = gruss::check_trace_radius_bound(w.p, w.xs, w.ys, a, b, r, s);
                    const double dev = std::abs(cert.tightness - 1.0);
                    worst_h = std::max(worst_h, dev);
                    ok = ok && cert.pass && dev <= 1e-9;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << "witness tightness: |1-t| <= " << worst_c << " (operator, limit 1e-10), <= "
           << worst_h << " (trace, limit 1e-9)";
    report(4, ok, detail.str());
}

// ---- criterion 5: scalar regression to the quarter-spread constant ---------

void criterion_scalar_regression() {
    gruss::Rng rng(5150);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const double a_lo = rng.uniform(-4.0, 0.0);
        const double a_hi = a_lo + rng.uniform(0.5, 4.0);
        const double b_lo = rng.uniform(-4.0, 0.0);
        const double b_hi = b_lo + rng.uniform(0.5, 4.0);
        const int n = rng.uniform_int(1, 12);

        std::vector<ModuleVector> xs, ys;
        for (int i = 0; i < n; ++i) {
            xs.emplace_back(std::vector<Matrix>{
                Matrix::from_rows(1, {Complex{rng.uniform(a_lo, a_hi), 0.0}})});
            ys.emplace_back(std::vector<Matrix>{
                Matrix::from_rows(1, {Complex{rng.uniform(b_lo, b_hi), 0.0}})});
        }
        const ModuleVector mid_a(std::vector<Matrix>{
            Matrix::from_rows(1, {Complex{(a_lo + a_hi) / 2.0, 0.0}})});
        const ModuleVector mid_b(std::vector<Matrix>{
            Matrix::from_rows(1, {Complex{(b_lo + b_hi) / 2.0, 0.0}})});

        const auto cert = gruss::check_radius_product_bound(
            ProbabilityVector::uniform(n), VectorTuple(xs), VectorTuple(ys), mid_a, mid_b,
            (a_hi - a_lo) / 2.0, (b_hi - b_lo) / 2.0);
        const double classical = 0.25 * (a_hi - a_lo) * (b_hi - b_lo);
        const double ratio = cert.rhs_chain[0] / classical;
        worst = std::max(worst, std::abs(ratio - 1.0));
        ok = ok && cert.pass && std::abs(ratio - 1.0) <= 1e-12;
    }
    std::ostringstream detail;
    detail << "scalar quarter-spread bound: |ratio-1| <= " << worst << " (limit 1e-12)";
    report(5, ok, detail.str());
}

// ---- criterion 6: transform suite ------------------------------------------

void criterion_transforms() {
    bool ok = true;
    std::ostringstream detail;

    // closed-form phase sum vs direct summation on a 1000-point grid
    {
        gruss::Rng rng(6001);
        int points = 0;
        double worst = 0.0;
        while (points < 1000) {
            const int n = rng.uniform_int(1, 64);
            const int m = rng.uniform_int(1, n);
            const double omega = rng.uniform(0.01, 3.13);
            if (std::abs(gruss::sin_product(omega, m)) < 1e-3) continue;  // singular set
            const Complex closed = gruss::geometric_phase_sum(omega, m, n);
            std::complex<long double> direct{0.0L, 0.0L};
            for (int k = 1; k <= n; ++k) {
                const long double theta = 2.0L * static_cast<long double>(omega) * m * k;
                direct += std::complex<long double>{std::cos(theta), std::sin(theta)};
            }
            const double err = std::abs(closed - Complex{static_cast<double>(direct.real()),
                                                         static_cast<double>(direct.imag())});
            worst = std::max(worst, err / n);
            ok = ok && err <= 1e-12 * n;
            ++points;
        }
        detail << "phase-sum grid max err/n " << worst << ";";
    }

    // 500 random instances through every transform certificate
    {
        gruss::Rng rng(6002);
        int passes = 0;
        for (int trial = 0; trial < 500; ++trial) {
            const int k = rng.uniform_int(1, 4);
            const int d = rng.uniform_int(1, 4);
            const int n = rng.uniform_int(1, 8);
            const auto inst = gruss::random_instance(rng, k, d, n, Flavor::CStar);
            const int m = rng.uniform_int(1, n);
            const double omega = rng.uniform(0.05, 3.1);
            const double omega2 = rng.uniform(0.05, 3.1);
            double omega_reg = rng.uniform(0.05, 3.1);
            while (std::abs(gruss::sin_product(omega_reg, m)) < 1e-3)
                omega_reg = rng.uniform(0.05, 3.1);

            bool all = true;
            all = all && gruss::check_fourier_pair_bound(inst.xs, inst.ys, omega, m, inst.a, inst.b).pass;
            all = all && gruss::check_mellin_pair_bound(inst.xs, inst.ys, m, inst.a, inst.b).pass;
            all = all && gruss::check_fourier_cross_bound(inst.xs, inst.ys, omega, omega2, m, inst.a, inst.b).pass;
            all = all && gruss::fourier_mean_approx(inst.xs, omega_reg, m, inst.a).pass;
            all = all && gruss::mellin_mean_approx(inst.xs, m, inst.a).pass;
            passes += all ? 1 : 0;
            ok = ok && all;
        }
        detail << " transform certificates " << passes << "/500;";
    }

    // moment bounds equal the generic power-sum bounds up to 1e-12
    {
        double worst = 0.0;
        for (long long n = 1; n <= 1000; ++n) {
            const double nd = static_cast<double>(n);
            const double closed1 = nd / 2.0 * std::sqrt((nd - 1.0) * (nd + 1.0) / 3.0);
            const gruss::WideInt spread1 = gruss::WideInt(n) * gruss::power_sum_exact(2, n) -
                                           gruss::power_sum_exact(1, n) * gruss::power_sum_exact(1, n);
            const double generic1 = std::sqrt(spread1.convert_to<double>());
            const double closed2 =
                nd / (6.0 * std::sqrt(5.0)) *
                std::sqrt((nd - 1.0) * (nd + 1.0) * (2.0 * nd + 1.0) * (8.0 * nd + 11.0));
            const gruss::WideInt spread2 = gruss::WideInt(n) * gruss::power_sum_exact(4, n) -
                                           gruss::power_sum_exact(2, n) * gruss::power_sum_exact(2, n);
            const double generic2 = std::sqrt(spread2.convert_to<double>());
            const double dev = std::max(std::abs(closed1 - generic1) / (1.0 + generic1),
                                        std::abs(closed2 - generic2) / (1.0 + generic2));
            worst = std::max(worst, dev);
            ok = ok && dev <= 1e-12;
        }
        detail << " moment identity max rel dev " << worst << ";";
    }

    // the hand-built tight case attains the bound to 1e-12
    {
        gruss::Rng rng(6003);
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const double center = rng.uniform(-1.0, 1.0);
            const double r = rng.uniform(0.1, 2.0);
            const VectorTuple xs(
                {ModuleVector(std::vector<Matrix>{Matrix::from_rows(1, {Complex{center - r, 0.0}})}),
                 ModuleVector(std::vector<Matrix>{Matrix::from_rows(1, {Complex{center + r, 0.0}})})});
            const ModuleVector a(std::vector<Matrix>{Matrix::from_rows(1, {Complex{center, 0.0}})});
            const auto cert = gruss::mellin_mean_approx(xs, 2, a, r);
            worst = std::max(worst, std::abs(cert.tightness - 1.0));
            ok = ok && cert.pass && std::abs(cert.tightness - 1.0) <= 1e-12;
        }
        detail << " tight mellin case |1-t| <= " << worst;
    }

    report(6, ok, detail.str());
}

// ---- criterion 7: byte-identical reports ------------------------------------

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void criterion_determinism(const char* cli_path) {
    bool ok = false;
    std::string detail;
    if (cli_path != nullptr) {
        const auto dir = std::filesystem::temp_directory_path();
        const auto out1 = dir / "gruss_accept_run1.json";
        const auto out2 = dir / "gruss_accept_run2.json";
        const std::string base = std::string("\"") + cli_path +
                                 "\" verify --seed 42 --trials 1000 --json > ";
        const int rc1 = std::system((base + out1.string()).c_str());
        const int rc2 = std::system((base + out2.string()).c_str());
        const std::string body1 = read_file(out1);
        const std::string body2 = read_file(out2);
        ok = rc1 == 0 && rc2 == 0 && !body1.empty() && body1 == body2;
        detail = "two CLI runs of `verify --seed 42 --trials 1000 --json`: " +
                 std::string(ok ? "byte-identical, exit 0" : "MISMATCH");
        std::filesystem::remove(out1);
        std::filesystem::remove(out2);
    } else {
        gruss::SuiteConfig cfg;  // defaults: seed 42, 1000 trials
        const std::string r1 = gruss::emit_report(gruss::run_suite(cfg), gruss::ReportFormat::Json);
        const std::string r2 = gruss::emit_report(gruss::run_suite(cfg), gruss::ReportFormat::Json);
        ok = !r1.empty() && r1 == r2;
        detail = std::string("two in-process reports: ") + (ok ? "byte-identical" : "MISMATCH");
    }
    report(7, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::printf("acceptance suite\n");

    gruss::SuiteConfig cfg;  // defaults: seed 42, trials 1000, k<=4, d<=4, n<=8, both flavors
    const gruss::SuiteReport rep = gruss::run_suite(cfg);

    criteria_identities_schwarz_bounds(rep);
    criterion_sharpness();
    criterion_scalar_regression();
    criterion_transforms();
    criterion_determinism(argc > 1 ? argv[1] : nullptr);

    std::printf("%d criterion failure(s)\n", g_failures);
    return g_failures;
}
