#include "hodgelets/sparse.hpp"

#include "hodgelets/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

using namespace hodgelets;

namespace {

Dictionary matrix_dictionary(Eigen::MatrixXd atoms) {
    Dictionary dict;
    dict.kind = DictionaryKind::standard;
    dict.atoms = std::move(atoms);
    dict.labels.resize(static_cast<std::size_t>(dict.atoms.cols()));
    for (int j = 0; j < dict.atoms.cols(); ++j)
        dict.labels[static_cast<std::size_t>(j)] = AtomLabel{AtomPart::joint, 1, j + 1};
    return dict;
}

Dictionary random_orthonormal(Rng& rng, int n) {
    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return matrix_dictionary(qr.householderQ() * Eigen::MatrixXd::Identity(n, n));
}

// brute-force oracle on orthonormal dictionaries: keep the largest-magnitude
// analysis coefficients until the tail energy is within tolerance
std::vector<int> hard_threshold_support(const Dictionary& dict, const Eigen::VectorXd& f,
                                        double epsilon) {
    Eigen::VectorXd c = dict.atoms.transpose() * f;
    std::vector<int> order(static_cast<std::size_t>(c.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double da = std::abs(c[a]), db = std::abs(c[b]);
        return da != db ? da > db : a < b;
    });
    double tail = f.squaredNorm();
    std::vector<int> support;
    for (int k : order) {
        if (std::sqrt(std::max(0.0, tail)) <= epsilon) break;
        support.push_back(k);
        tail -= c[k] * c[k];
    }
    return support;
}

} // namespace

TEST_CASE("a scaled atom is recovered in a single step") {
    Rng rng(1);
    auto dict = random_orthonormal(rng, 8);
    Cochain f(1, 5.0 * dict.atoms.col(3));
    auto approx = omp(dict, f, 0.0);
    REQUIRE(approx.support.size() == 1);
    CHECK(approx.support[0] == 3);
    CHECK(approx.coefficients[0] == doctest::Approx(5.0));
    CHECK(approx.residual_norm <= 1e-12);
    CHECK(approx.converged);
}

TEST_CASE("a tolerance above the signal norm needs no atoms") {
    auto dict = standard_basis_dictionary(4);
    Eigen::VectorXd f(4);
    f << 1.0, 0.0, 0.0, 0.0;
    auto approx = omp(dict, Cochain(1, f), 2.0);
    CHECK(approx.support.empty());
    CHECK(approx.converged);
    CHECK(approx.residual_norm == doctest::Approx(1.0));
}

TEST_CASE("standard-basis signals are recovered exactly") {
    auto dict = standard_basis_dictionary(6);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(6);
    f[1] = 2.0;
    f[3] = -1.0;
    f[5] = 0.25;
    auto approx = omp(dict, Cochain(1, f), 1e-12);
    CHECK(approx.converged);
    std::vector<int> sorted = approx.support;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 3, 5});
    CHECK(approx.residual_norm <= 1e-12);
}

TEST_CASE("ties go to the lowest atom index") {
    Eigen::MatrixXd atoms(2, 3);
    atoms << 1.0, 0.0, 1.0,
             0.0, 1.0, 0.0;
    auto dict = matrix_dictionary(atoms); // atoms 0 and 2 identical
    Eigen::VectorXd f(2);
    f << 1.0, 0.0;
    auto approx = omp(dict, Cochain(1, f), 1e-12);
    REQUIRE(approx.support.size() == 1);
    CHECK(approx.support[0] == 0);
}

TEST_CASE("zero atoms are skipped and all-zero dictionaries rejected") {
    Eigen::MatrixXd atoms(2, 3);
    atoms << 0.0, 1.0, 0.3,
             0.0, 0.0, 0.9;
    auto dict = matrix_dictionary(atoms);
    Eigen::VectorXd f(2);
    f << 0.2, 1.0;
    auto approx = omp(dict, Cochain(1, f), 1e-10);
    for (int k : approx.support) CHECK(k != 0);
    CHECK(approx.converged);

    auto zero = matrix_dictionary(Eigen::MatrixXd::Zero(2, 2));
    CHECK_THROWS_AS(omp(zero, Cochain(1, f), 0.1), std::invalid_argument);
}

TEST_CASE("the atom cap reports partial results") {
    Rng rng(5);
    auto dict = random_orthonormal(rng, 12);
    Eigen::VectorXd f(12);
    for (int i = 0; i < 12; ++i) f[i] = rng.normal();
    auto approx = omp(dict, Cochain(1, f), 1e-10, 3);
    CHECK(approx.support.size() == 3);
    CHECK_FALSE(approx.converged);
    CHECK(approx.residual_norm > 1e-10);
}

TEST_CASE("omp matches hard thresholding on orthonormal dictionaries") {
    Rng rng(9);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 6 + 4 * trial;
        auto dict = random_orthonormal(rng, n);
        Eigen::VectorXd f(n);
        for (int i = 0; i < n; ++i) f[i] = rng.normal();
        for (double eps_rel : {0.7, 0.3, 0.05, 1e-6}) {
            double eps = eps_rel * f.norm();
            auto approx = omp(dict, Cochain(1, f), eps);
            auto oracle = hard_threshold_support(dict, f, eps);
            REQUIRE(approx.converged);
            CHECK(approx.support == oracle);
            // coefficients of an orthonormal fit are the analysis values
            for (std::size_t i = 0; i < approx.support.size(); ++i) {
                double expected = dict.atoms.col(approx.support[i]).dot(f);
                CHECK(approx.coefficients[static_cast<int>(i)] ==
                      doctest::Approx(expected).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("residuals decrease and stay orthogonal to the support") {
    Rng rng(13);
    int n = 20;
    Eigen::MatrixXd atoms(n, 3 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3 * n; ++j) atoms(i, j) = rng.normal();
    auto dict = matrix_dictionary(atoms);
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) f[i] = rng.normal();

    auto approx = omp(dict, Cochain(1, f), 0.05 * f.norm());
    REQUIRE(approx.converged);
    for (std::size_t k = 1; k < approx.residual_history.size(); ++k)
        CHECK(approx.residual_history[k] <
              approx.residual_history[k - 1] * (1.0 + 1e-12));

    Eigen::VectorXd residual = f;
    for (std::size_t i = 0; i < approx.support.size(); ++i)
        residual -= approx.coefficients[static_cast<int>(i)] * dict.atoms.col(approx.support[i]);
    CHECK(std::abs(residual.norm() - approx.residual_norm) <= 1e-9 * f.norm());
    for (int k : approx.support)
        CHECK(std::abs(dict.atoms.col(k).dot(residual)) <=
              1e-10 * std::max(1.0, dict.atoms.col(k).norm() * f.norm()));
}

TEST_CASE("sparsity_curve counts against the sorted-energy oracle") {
    auto dict = standard_basis_dictionary(8);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(8);
    f << 4.0, 0.0, 2.0, 0.0, 1.0, 0.0, 0.5, 0.0;
    std::vector<double> eps{1.0, 0.5, 0.25, 0.05, 1e-6};
    auto curve = sparsity_curve({&dict}, Cochain(1, f), eps);

    REQUIRE(curve.counts.size() == eps.size());
    CHECK(curve.counts[0][0] == 0); // epsilon_rel = 1 keeps the zero signal
    for (std::size_t row = 0; row < eps.size(); ++row) {
        auto oracle = hard_threshold_support(dict, f, eps[row] * f.norm());
        CHECK(curve.counts[row][0] == static_cast<int>(oracle.size()));
    }
    for (std::size_t row = 1; row < eps.size(); ++row)
        CHECK(curve.counts[row][0] >= curve.counts[row - 1][0]); // eps descending here
}

TEST_CASE("sparsity_curve validates tolerances") {
    auto dict = standard_basis_dictionary(3);
    Eigen::VectorXd f(3);
    f << 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(sparsity_curve({&dict}, Cochain(1, f), {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(sparsity_curve({&dict}, Cochain(1, f), {1.5}), std::invalid_argument);
    CHECK_THROWS_AS(sparsity_curve({&dict}, Cochain::zero(1, 3), {0.5}),
                    std::invalid_argument);
}
