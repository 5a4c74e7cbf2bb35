// Command-line front end: randomized verification suites, tightness
// scans, sharpness witnesses, and transform evaluation over instance
// files. Exit codes: 0 all checks pass, 1 a violation was found,
// 2 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gruss/algebra.hpp"
#include "gruss/gruss.hpp"
#include "gruss/instance.hpp"
#include "gruss/suite.hpp"
#include "gruss/transforms.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> trials;
    std::optional<std::string> flavor;
    bool as_json = false;
};

gruss::SuiteConfig resolve_config(const CommonOptions& opts) {
    gruss::SuiteConfig cfg;
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw gruss::IoError("cannot open config file: " + opts.config_path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        cfg = gruss::config_from_json(buffer.str());
    }
    if (const char* env = std::getenv("GRUSS_SLACK_SCALE")) {
        char* end = nullptr;
        const double value = std::strtod(env, &end);
        if (end == env || !(value > 0.0))
            throw gruss::Error("GRUSS_SLACK_SCALE must be a positive number");
        cfg.slack_scale = value;
    }
    if (opts.seed) cfg.seed = *opts.seed;
    if (opts.trials) cfg.trials = *opts.trials;
    if (opts.flavor) cfg.flavor = gruss::flavor_mode_from_string(*opts.flavor);
    return cfg;
}

int emit_and_grade(const gruss::SuiteReport& report, bool as_json) {
    std::cout << gruss::emit_report(report,
                                    as_json ? gruss::ReportFormat::Json : gruss::ReportFormat::Text);
    return gruss::all_pass(report) ? 0 : 1;
}

json certificate_to_json(const gruss::BoundCertificate& cert) {
    json j;
    j["inequality"] = cert.inequality;
    j["lhs"] = cert.lhs;
    j["rhs_chain"] = cert.rhs_chain;
    j["slack"] = cert.slack;
    j["pass"] = cert.pass;
    j["tightness"] = cert.tightness;
    j["r"] = cert.r;
    j["s"] = cert.s;
    return j;
}

void print_certificate(const gruss::BoundCertificate& cert, bool as_json) {
    if (as_json) {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
        return;
    }
    std::cout << "inequality " << cert.inequality << ": lhs=" << cert.lhs << " rhs=[";
    for (size_t i = 0; i < cert.rhs_chain.size(); ++i)
        std::cout << (i ? ", " : "") << cert.rhs_chain[i];
    std::cout << "] tightness=" << cert.tightness << " r=" << cert.r << " s=" << cert.s << " "
              << (cert.pass ? "PASS" : "FAIL") << "\n";
}

json module_vector_to_json(const gruss::ModuleVector& v) {
    json parts = json::array();
    for (const auto& p : v.parts()) {
        json rows = json::array();
        for (int i = 0; i < p.dim(); ++i)
            for (int j = 0; j < p.dim(); ++j)
                rows.push_back(json::array({p(i, j).real(), p(i, j).imag()}));
        parts.push_back(rows);
    }
    return parts;
}

int run_witness(const std::string& ineq, int k, int d, double r, double s, uint64_t seed,
                bool as_json) {
    if (ineq != "3.8" && ineq != "5.2")
        throw gruss::UnknownInequality("witness supports inequalities 3.8 and 5.2");
    const gruss::Flavor flavor = ineq == "3.8" ? gruss::Flavor::CStar : gruss::Flavor::HStar;

    gruss::Rng rng(seed);
    const gruss::ModuleVector e = gruss::random_unit_vector(rng, d, k, flavor);
    const gruss::ModuleVector a = r * gruss::random_module_vector(rng, d, k);
    const gruss::ModuleVector b = s * gruss::random_module_vector(rng, d, k);
    const gruss::WitnessInstance w = gruss::sharpness_witness(a, b, r, s, e, flavor);

    const gruss::BoundCertificate cert =
        flavor == gruss::Flavor::CStar
            ? gruss::check_radius_product_bound(w.p, w.xs, w.ys, a, b, r, s)
            : gruss::check_trace_radius_bound(w.p, w.xs, w.ys, a, b, r, s);
    print_certificate(cert, as_json);
    return cert.pass ? 0 : 1;
}

int run_transform(const std::string& kind, const std::string& input, double omega, int m,
                  bool certify, bool as_json) {
    const gruss::ModuleInstance inst = gruss::load_instance(input);

    if (certify) {
        const gruss::TransformCertificate cert =
            kind == "fourier" ? gruss::fourier_mean_approx(inst.xs, omega, m, inst.a)
                              : gruss::mellin_mean_approx(inst.xs, m, inst.a);
        if (as_json) {
            json j;
            j["inequality"] = cert.inequality;
            j["error"] = cert.error;
            j["bound"] = cert.bound;
            j["pass"] = cert.pass;
            j["tightness"] = cert.tightness;
            j["r"] = cert.r;
            j["approx"] = module_vector_to_json(cert.approx);
            j["exact"] = module_vector_to_json(cert.exact);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "certificate " << cert.inequality << ": error=" << cert.error
                      << " bound=" << cert.bound << " tightness=" << cert.tightness << " "
                      << (cert.pass ? "PASS" : "FAIL") << "\n";
        }
        return cert.pass ? 0 : 1;
    }

    const gruss::ModuleVector out = kind == "fourier" ? gruss::fourier(inst.xs, omega, m)
                                                      : gruss::mellin(inst.xs, m);
    json j;
    j["kind"] = kind;
    j["m"] = m;
    if (kind == "fourier") j["omega"] = omega;
    j["value"] = module_vector_to_json(out);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-inner product module inequality verifier"};
    app.require_subcommand(1);

    CommonOptions opts;
    uint64_t seed_arg = 0;
    uint64_t trials_arg = 0;
    std::string flavor_arg;

    auto add_common = [&](CLI::App* cmd, bool with_flavor) {
        cmd->add_option("--config", opts.config_path, "JSON config file");
        cmd->add_option("--seed", seed_arg, "RNG seed");
        cmd->add_option("--trials", trials_arg, "number of trials");
        if (with_flavor)
            cmd->add_option("--flavor", flavor_arg, "cstar|hstar|both")
                ->check(CLI::IsMember({"cstar", "hstar", "both"}));
        cmd->add_flag("--json", opts.as_json, "machine-readable output");
    };

    auto* verify = app.add_subcommand("verify", "run the full randomized verification suite");
    add_common(verify, true);

    auto* scan = app.add_subcommand("scan", "search for the largest tightness of one inequality");
    std::string scan_ineq;
    scan->add_option("--ineq", scan_ineq, "inequality id, e.g. 3.8")->required();
    add_common(scan, false);

    auto* witness = app.add_subcommand("witness", "evaluate a constructive sharpness witness");
    std::string witness_ineq;
    int witness_k = 2, witness_d = 1;
    double witness_r = 1.0, witness_s = 1.0;
    uint64_t witness_seed = 42;
    bool witness_json = false;
    witness->add_option("--ineq", witness_ineq, "3.8 or 5.2")->required();
    witness->add_option("--k", witness_k, "algebra dimension");
    witness->add_option("--d", witness_d, "module rank");
    witness->add_option("--r", witness_r, "x-side radius");
    witness->add_option("--s", witness_s, "y-side radius");
    witness->add_option("--seed", witness_seed, "RNG seed");
    witness->add_flag("--json", witness_json, "machine-readable output");

    auto* transform = app.add_subcommand("transform", "apply a transform to an instance file");
    std::string kind, input;
    double omega = 0.0;
    int m = 1;
    bool certify = false;
    bool transform_json = false;
    transform->add_option("--kind", kind, "fourier|mellin")
        ->required()
        ->check(CLI::IsMember({"fourier", "mellin"}));
    transform->add_option("--input", input, "instance file")->required();
    transform->add_option("--omega", omega, "frequency parameter (fourier)");
    transform->add_option("--m", m, "transform index")->required();
    transform->add_flag("--certify", certify, "emit a mean-approximation certificate");
    transform->add_flag("--json", transform_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (CLI::App* active = verify->parsed() ? verify : (scan->parsed() ? scan : nullptr)) {
        if (active->count("--seed") > 0) opts.seed = seed_arg;
        if (active->count("--trials") > 0) opts.trials = trials_arg;
        if (active->get_option_no_throw("--flavor") && active->count("--flavor") > 0)
            opts.flavor = flavor_arg;
    }

    try {
        if (verify->parsed()) {
            return emit_and_grade(gruss::run_suite(resolve_config(opts)), opts.as_json);
        }
        if (scan->parsed()) {
            return emit_and_grade(gruss::tightness_scan(resolve_config(opts), scan_ineq),
                                  opts.as_json);
        }
        if (witness->parsed()) {
            return run_witness(witness_ineq, witness_k, witness_d, witness_r, witness_s,
                               witness_seed, witness_json);
        }
        if (transform->parsed()) {
            return run_transform(kind, input, omega, m, certify, transform_json);
        }
    } catch (const gruss::RadiusViolated& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const gruss::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
