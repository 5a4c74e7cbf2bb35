#include <doctest.h>

#include "gruss/algebra.hpp"
#include "gruss/module.hpp"
#include "gruss/schwarz.hpp"
#include "oracles.hpp"

using gruss::Complex;
using gruss::Matrix;
using gruss::ModuleVector;
using gruss::ProbabilityVector;
using gruss::VectorTuple;

namespace {

ModuleVector unit_first_slot(int d, int k) {
    std::vector<Matrix> parts(static_cast<size_t>(d), Matrix::zero(k));
    parts[0] = Matrix::identity(k);
    return ModuleVector(std::move(parts));
}

}  // namespace

TEST_CASE("inner product basics") {
    const ModuleVector x(std::vector<Matrix>{Matrix::identity(2)});
    CHECK((gruss::inner_product(x, x) - Matrix::identity(2)).frobenius_norm() == 0.0);

    gruss::Rng rng(301);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = rng.uniform_int(1, 4);
        const int k = rng.uniform_int(1, 4);
        const ModuleVector a = gruss::random_module_vector(rng, d, k);
        const ModuleVector b = gruss::random_module_vector(rng, d, k);

        // adjoint symmetry, entrywise
        const Matrix ab = gruss::inner_product(a, b);
        const Matrix ba = gruss::inner_product(b, a);
        CHECK((ab.adjoint() - ba).max_abs() <= 1e-14);

        // positivity of the diagonal
        CHECK(gruss::is_positive(gruss::inner_product(a, a)));
    }

    const ModuleVector wrong = gruss::random_module_vector(rng, 2, 3);
    CHECK_THROWS_AS(gruss::inner_product(x, wrong), gruss::ShapeMismatch);
}

TEST_CASE("inner product linearity in the module actions") {
    gruss::Rng rng(302);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const int k = rng.uniform_int(1, 4);
        const ModuleVector x = gruss::random_module_vector(rng, d, k);
        const ModuleVector y = gruss::random_module_vector(rng, d, k);
        const ModuleVector z = gruss::random_module_vector(rng, d, k);
        const Matrix a = gruss::random_matrix(rng, k);
        const Matrix b = gruss::random_matrix(rng, k);

        // additivity
        const Matrix sum = gruss::inner_product(x, y + z);
        CHECK((sum - gruss::inner_product(x, y) - gruss::inner_product(x, z)).max_abs() <= 1e-12);

        // right algebra-linearity: <x, y a + z b> = <x,y> a + <x,z> b
        const Matrix left = gruss::inner_product(x, y * a + z * b);
        const Matrix right = gruss::inner_product(x, y) * a + gruss::inner_product(x, z) * b;
        const double scale = 1.0 + right.max_abs();
        CHECK((left - right).max_abs() <= 1e-12 * scale);
    }
}

TEST_CASE("module norm") {
    CHECK(gruss::module_norm(unit_first_slot(3, 2)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gruss::module_norm(ModuleVector(2, 3)) == 0.0);

    gruss::Rng rng(303);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = rng.uniform_int(1, 4);
        const int k = rng.uniform_int(1, 4);
        const ModuleVector a = gruss::random_module_vector(rng, d, k);
        const ModuleVector b = gruss::random_module_vector(rng, d, k);
        CHECK(gruss::module_norm(a + b) <=
              gruss::module_norm(a) + gruss::module_norm(b) + 1e-10);
    }
}

TEST_CASE("trace seminorm") {
    const ModuleVector v(std::vector<Matrix>{oracle::diag({3.0, 4.0})});
    CHECK(gruss::hs_seminorm(v) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(gruss::hs_seminorm(ModuleVector(2, 2)) == 0.0);

    gruss::Rng rng(304);
    for (int trial = 0; trial < 25; ++trial) {
        const ModuleVector x = gruss::random_module_vector(rng, rng.uniform_int(1, 4), rng.uniform_int(1, 4));
        // entrywise oracle
        double sum = 0.0;
        for (const auto& part : x.parts()) sum += part.frobenius_norm() * part.frobenius_norm();
        CHECK(gruss::hs_seminorm(x) == doctest::Approx(std::sqrt(sum)).epsilon(1e-12));
    }
}

TEST_CASE("weighted combinations") {
    gruss::Rng rng(305);
    const ModuleVector x = gruss::random_module_vector(rng, 2, 3);

    // uniform weights over identical copies reproduce the copy
    const VectorTuple copies({x, x, x, x});
    const ModuleVector mean = gruss::weighted_combination(ProbabilityVector::uniform(4), copies);
    CHECK(gruss::hs_seminorm(mean - x) <= 1e-15 * (1.0 + gruss::hs_seminorm(x)));

    // point mass picks out the first item exactly
    const VectorTuple pair({x, gruss::random_module_vector(rng, 2, 3)});
    const ModuleVector first =
        gruss::weighted_combination(ProbabilityVector({1.0, 0.0}), pair);
    CHECK(first == x);

    // linearity against a split-and-add oracle
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(2, 6);
        std::vector<ModuleVector> items;
        gruss::ScalarWeights w;
        for (int i = 0; i < n; ++i) {
            items.push_back(gruss::random_module_vector(rng, 2, 2));
            w.push_back(rng.complex_normal());
        }
        const VectorTuple xs(items);
        const ModuleVector all = gruss::weighted_combination(w, xs);
        ModuleVector two_pass(2, 2);
        for (int i = 0; i < n; ++i) two_pass += w[static_cast<size_t>(i)] * xs.item(i);
        CHECK(gruss::hs_seminorm(all - two_pass) <= 1e-12 * (1.0 + gruss::hs_seminorm(all)));
    }

    CHECK_THROWS_AS(gruss::weighted_combination(ProbabilityVector::uniform(3), pair),
                    gruss::ShapeMismatch);
}

TEST_CASE("translate") {
    gruss::Rng rng(306);
    const int d = 2, k = 3;
    std::vector<ModuleVector> items;
    for (int i = 0; i < 4; ++i) items.push_back(gruss::random_module_vector(rng, d, k));
    const VectorTuple xs(items);
    const ModuleVector a = gruss::random_module_vector(rng, d, k);

    CHECK(gruss::translate(xs, ModuleVector(d, k)) == xs);

    const VectorTuple back = gruss::translate(gruss::translate(xs, a), -1.0 * a);
    for (int i = 0; i < xs.length(); ++i)
        CHECK(gruss::hs_seminorm(back.item(i) - xs.item(i)) <=
              1e-14 * (1.0 + gruss::hs_seminorm(xs.item(i))));

    for (int i = 0; i < xs.length(); ++i)
        CHECK(gruss::module_norm(gruss::translate(xs, a).item(i)) ==
              doctest::Approx(gruss::module_norm(xs.item(i) - a)).epsilon(1e-14));

    CHECK_THROWS_AS(gruss::translate(xs, ModuleVector(d + 1, k)), gruss::ShapeMismatch);
}

TEST_CASE("probability vectors") {
    CHECK_THROWS_AS(ProbabilityVector({0.5, -0.1, 0.6}), gruss::Error);
    CHECK_THROWS_AS(ProbabilityVector({0.5, 0.4}), gruss::Error);
    CHECK_THROWS_AS(ProbabilityVector(std::vector<double>{}), gruss::ShapeMismatch);
    const ProbabilityVector u = ProbabilityVector::uniform(7);
    double sum = 0.0;
    for (double w : u.weights()) sum += w;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("schwarz inequality family") {
    gruss::Rng rng(307);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = rng.uniform_int(1, 4);
        const int k = rng.uniform_int(1, 4);
        const ModuleVector x = gruss::random_module_vector(rng, d, k);
        const ModuleVector y = gruss::random_module_vector(rng, d, k);
        for (const auto& cert : gruss::check_schwarz_all(x, y)) {
            CHECK(cert.pass);
            CHECK(cert.rhs_chain.size() == 1);
        }
    }
}
