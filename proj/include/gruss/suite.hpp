#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gruss/instance.hpp"

namespace gruss {

enum class FlavorMode { CStar, HStar, Both };

std::string to_string(FlavorMode mode);
FlavorMode flavor_mode_from_string(const std::string& name);

struct SuiteConfig {
    uint64_t seed = 42;
    uint64_t trials = 1000;
    int k_max = 4;
    int d_max = 4;
    int n_max = 8;
    FlavorMode flavor = FlavorMode::Both;
    double slack_scale = tol::kSlackScale;
    bool strict_radius_mode = false;

    /// Throws CapExceeded beyond the desk-scale caps.
    void validate() const;
};

/// One verification line: an inequality or identity id with its pass
/// count, the extremal tightness or normalized residual seen, and a
/// digest of the instance that attained it.
struct LineStat {
    std::string inequality;
    uint64_t trials = 0;
    uint64_t passes = 0;
    double max_tightness = 0.0;
    double max_residual = 0.0;
    std::string argmax_digest;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<LineStat> lines;
    /// Reported in the text format only; the json format must be
    /// byte-identical across runs of one config.
    double wall_seconds = 0.0;
};

/// Runs every identity, Schwarz, bound, and witness check over
/// config.trials seeded instances. Checker errors are recorded as
/// failures; the suite never aborts mid-run.
SuiteReport run_suite(const SuiteConfig& config);

/// Random-restart search for the largest tightness of one inequality.
/// The constructive witness families are folded into the sampling for
/// the ids that have one. Throws UnknownInequality for ids outside the
/// catalog.
SuiteReport tightness_scan(const SuiteConfig& config, const std::string& inequality_id);

enum class ReportFormat { Text, Json };

std::string emit_report(const SuiteReport& report, ReportFormat format);

/// Exit-code contract: true iff passes == trials on every line.
bool all_pass(const SuiteReport& report);

SuiteConfig config_from_json(const std::string& text);

}  // namespace gruss
