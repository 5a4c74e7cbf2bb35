#include "gruss/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gruss/tolerances.hpp"

namespace gruss {

using nlohmann::json;

std::string to_string(Flavor flavor) { return flavor == Flavor::CStar ? "cstar" : "hstar"; }

Flavor flavor_from_string(const std::string& name) {
    if (name == "cstar") return Flavor::CStar;
    if (name == "hstar") return Flavor::HStar;
    throw ParseError("unknown flavor: " + name, 0, 0);
}

Matrix random_matrix(Rng& rng, int k) {
    Matrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = rng.complex_normal();
    return m;
}

ModuleVector random_module_vector(Rng& rng, int d, int k) {
    std::vector<Matrix> parts;
    parts.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) parts.push_back(random_matrix(rng, k));
    return ModuleVector(std::move(parts));
}

ModuleVector random_unit_vector(Rng& rng, int d, int k, Flavor flavor) {
    ModuleVector v = random_module_vector(rng, d, k);
    const double norm = flavor_seminorm(flavor, v);
    // A standard-normal draw has vanishing probability of a degenerate norm.
    return (1.0 / norm) * v;
}

ProbabilityVector random_probability_vector(Rng& rng, int n) {
    std::vector<double> w(static_cast<size_t>(n));
    double total = 0.0;
    for (auto& x : w) {
        x = rng.exponential();
        total += x;
    }
    for (auto& x : w) x /= total;
    return ProbabilityVector(std::move(w));
}

ModuleInstance random_instance(Rng& rng, int k, int d, int n, Flavor flavor) {
    if (k < 1 || k > tol::kMaxAlgebraDim || d < 1 || d > tol::kMaxModuleRank || n < 1 ||
        n > tol::kMaxTupleLength)
        throw CapExceeded("random_instance: shape outside the desk-scale caps");

    ModuleInstance inst;
    inst.flavor = flavor;
    inst.k = k;
    inst.d = d;
    inst.n = n;
    inst.p = random_probability_vector(rng, n);

    std::vector<ModuleVector> xs, ys;
    xs.reserve(static_cast<size_t>(n));
    ys.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) xs.push_back(random_module_vector(rng, d, k));
    for (int i = 0; i < n; ++i) ys.push_back(random_module_vector(rng, d, k));
    inst.xs = VectorTuple(std::move(xs));
    inst.ys = VectorTuple(std::move(ys));
    inst.a = random_module_vector(rng, d, k);
    inst.b = random_module_vector(rng, d, k);
    inst.r = tight_radius(inst.xs, inst.a, flavor);
    inst.s = tight_radius(inst.ys, inst.b, flavor);
    return inst;
}

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            rows.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    return rows;
}

Matrix matrix_from_json(const json& j, int k) {
    if (!j.is_array() || j.size() != static_cast<size_t>(k) * k)
        throw ParseError("matrix entry count mismatch", 0, 0);
    std::vector<Complex> entries;
    entries.reserve(j.size());
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError("matrix entries must be [re, im] pairs", 0, 0);
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return Matrix::from_rows(k, std::move(entries));
}

json vector_to_json(const ModuleVector& v) {
    json parts = json::array();
    for (const auto& p : v.parts()) parts.push_back(matrix_to_json(p));
    return parts;
}

ModuleVector vector_from_json(const json& j, int d, int k) {
    if (!j.is_array() || j.size() != static_cast<size_t>(d))
        throw ParseError("module vector rank mismatch", 0, 0);
    std::vector<Matrix> parts;
    parts.reserve(j.size());
    for (const auto& part : j) parts.push_back(matrix_from_json(part, k));
    return ModuleVector(std::move(parts));
}

json tuple_to_json(const VectorTuple& t) {
    json items = json::array();
    for (const auto& v : t.items()) items.push_back(vector_to_json(v));
    return items;
}

VectorTuple tuple_from_json(const json& j, int n, int d, int k) {
    if (!j.is_array() || j.size() != static_cast<size_t>(n))
        throw ParseError("tuple length mismatch", 0, 0);
    std::vector<ModuleVector> items;
    items.reserve(j.size());
    for (const auto& v : j) items.push_back(vector_from_json(v, d, k));
    return VectorTuple(std::move(items));
}

/// 1-based line/column of a byte offset, for parser diagnostics.
std::pair<int, int> position_of(const std::string& text, size_t byte) {
    int line = 1, column = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

std::string instance_to_json(const ModuleInstance& instance) {
    json j;
    j["version"] = 1;
    j["flavor"] = to_string(instance.flavor);
    j["k"] = instance.k;
    j["d"] = instance.d;
    j["n"] = instance.n;
    j["p"] = instance.p.weights();
    j["r"] = instance.r;
    j["s"] = instance.s;
    j["a"] = vector_to_json(instance.a);
    j["b"] = vector_to_json(instance.b);
    j["xs"] = tuple_to_json(instance.xs);
    j["ys"] = tuple_to_json(instance.ys);
    return j.dump();
}

ModuleInstance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(e.what(), line, column);
    }
    if (!j.is_object()) throw ParseError("instance file must hold a JSON object", 1, 1);
    if (!j.contains("version") || !j["version"].is_number_integer())
        throw ParseError("missing integer field: version", 0, 0);
    if (j["version"].get<int>() != 1)
        throw VersionMismatch("unsupported instance version " + j["version"].dump());

    try {
        ModuleInstance inst;
        inst.flavor = flavor_from_string(j.at("flavor").get<std::string>());
        inst.k = j.at("k").get<int>();
        inst.d = j.at("d").get<int>();
        inst.n = j.at("n").get<int>();
        if (inst.k < 1 || inst.d < 1 || inst.n < 1)
            throw ParseError("shape fields must be positive", 0, 0);
        inst.p = ProbabilityVector(j.at("p").get<std::vector<double>>());
        if (inst.p.size() != inst.n) throw ParseError("weight count mismatch", 0, 0);
        inst.r = j.at("r").get<double>();
        inst.s = j.at("s").get<double>();
        if (!std::isfinite(inst.r) || !std::isfinite(inst.s))
            throw ParseError("radii must be finite", 0, 0);
        inst.a = vector_from_json(j.at("a"), inst.d, inst.k);
        inst.b = vector_from_json(j.at("b"), inst.d, inst.k);
        inst.xs = tuple_from_json(j.at("xs"), inst.n, inst.d, inst.k);
        inst.ys = tuple_from_json(j.at("ys"), inst.n, inst.d, inst.k);
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 0, 0);
    }
}

void save_instance(const ModuleInstance& instance, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << instance_to_json(instance) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

ModuleInstance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return instance_from_json(buffer.str());
}

std::string instance_digest(const ModuleInstance& instance) {
    const std::string text = instance_to_json(instance);
    uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(out);
}

}  // namespace gruss
