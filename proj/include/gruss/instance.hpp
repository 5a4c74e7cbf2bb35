#pragma once

#include <filesystem>
#include <string>

#include "gruss/gruss.hpp"
#include "gruss/module.hpp"
#include "gruss/rng.hpp"

namespace gruss {

std::string to_string(Flavor flavor);
Flavor flavor_from_string(const std::string& name);

/// A complete sampled problem: the module shape, tuples, centers, the
/// tight radii for the instance's flavor, and the weights.
struct ModuleInstance {
    Flavor flavor = Flavor::CStar;
    int k = 1;  // algebra dimension
    int d = 1;  // module rank
    int n = 1;  // tuple length
    ProbabilityVector p;
    VectorTuple xs;
    VectorTuple ys;
    ModuleVector a;
    ModuleVector b;
    double r = 0.0;
    double s = 0.0;
};

Matrix random_matrix(Rng& rng, int k);
ModuleVector random_module_vector(Rng& rng, int d, int k);
/// Unit direction in the flavor seminorm, for witness construction.
ModuleVector random_unit_vector(Rng& rng, int d, int k, Flavor flavor);
/// Dirichlet(1) weights via normalized unit exponentials.
ProbabilityVector random_probability_vector(Rng& rng, int n);

/// Standard-normal entries throughout; a and b sampled the same way;
/// r and s set to the tight suprema in the flavor's seminorm.
/// Throws CapExceeded beyond the desk-scale caps (k<=32, d<=16, n<=64).
ModuleInstance random_instance(Rng& rng, int k, int d, int n, Flavor flavor);

// Versioned UTF-8 JSON with matrices as row-major [re, im] pairs; doubles
// round-trip exactly. Current version: 1.
std::string instance_to_json(const ModuleInstance& instance);
ModuleInstance instance_from_json(const std::string& text);
void save_instance(const ModuleInstance& instance, const std::filesystem::path& path);
ModuleInstance load_instance(const std::filesystem::path& path);

/// FNV-1a hash of the canonical JSON form, as 16 hex digits.
std::string instance_digest(const ModuleInstance& instance);

}  // namespace gruss
