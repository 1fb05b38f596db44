#include "hodgelets/clustering.hpp"

#include "hodgelets/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>

using namespace hodgelets;

namespace {

// two separated clouds in the first two dimensions, pure noise elsewhere
Eigen::MatrixXd two_cloud_features(int per_cluster, int noise_dims, Rng& rng) {
    int p = 2 * per_cluster;
    Eigen::MatrixXd x(p, 2 + noise_dims);
    for (int i = 0; i < p; ++i) {
        double cx = i < per_cluster ? -8.0 : 8.0;
        x(i, 0) = cx + 0.3 * rng.normal();
        x(i, 1) = cx + 0.3 * rng.normal();
        for (int d = 2; d < 2 + noise_dims; ++d) x(i, d) = rng.normal();
    }
    return x;
}

// exhaustive 2-cluster search minimizing within-cluster SS on weighted data
double best_two_cluster_wcss(const Eigen::MatrixXd& scaled) {
    int p = static_cast<int>(scaled.rows());
    double best = std::numeric_limits<double>::infinity();
    for (unsigned mask = 1; mask < (1u << (p - 1)); ++mask) {
        Eigen::RowVectorXd m0 = Eigen::RowVectorXd::Zero(scaled.cols());
        Eigen::RowVectorXd m1 = m0;
        int n0 = 0, n1 = 0;
        for (int i = 0; i < p; ++i) {
            if (mask & (1u << i)) { m1 += scaled.row(i); ++n1; }
            else { m0 += scaled.row(i); ++n0; }
        }
        if (n0 == 0 || n1 == 0) continue;
        m0 /= n0;
        m1 /= n1;
        double wcss = 0.0;
        for (int i = 0; i < p; ++i)
            wcss += (mask & (1u << i)) ? (scaled.row(i) - m1).squaredNorm()
                                       : (scaled.row(i) - m0).squaredNorm();
        best = std::min(best, wcss);
    }
    return best;
}

double weighted_wcss(const Eigen::MatrixXd& scaled, const std::vector<int>& labels, int k) {
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, scaled.cols());
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < scaled.rows(); ++i) {
        sums.row(labels[static_cast<std::size_t>(i)]) += scaled.row(i);
        ++sizes[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    }
    for (int j = 0; j < k; ++j)
        if (sizes[static_cast<std::size_t>(j)] > 0) sums.row(j) /= sizes[static_cast<std::size_t>(j)];
    double wcss = 0.0;
    for (int i = 0; i < scaled.rows(); ++i)
        wcss += (scaled.row(i) - sums.row(labels[static_cast<std::size_t>(i)])).squaredNorm();
    return wcss;
}

} // namespace

TEST_CASE("sparse k-means finds the informative dimensions") {
    Rng rng(2024);
    Eigen::MatrixXd x = two_cloud_features(16, 50, rng);
    auto model = sparse_kmeans(x, 2, 1.8, 99);

    // weight concentrates on the two separated coordinates
    double informative = model.weights[0] + model.weights[1];
    CHECK(informative >= 0.95 * model.weights.lpNorm<1>());

    // perfect class recovery
    std::set<int> first(model.assignments.begin(), model.assignments.begin() + 16);
    std::set<int> second(model.assignments.begin() + 16, model.assignments.end());
    CHECK(first.size() == 1);
    CHECK(second.size() == 1);
    CHECK(*first.begin() != *second.begin());

    // norm constraints
    CHECK(model.weights.minCoeff() >= 0.0);
    CHECK(model.weights.norm() <= 1.0 + 1e-10);
    CHECK(model.weights.lpNorm<1>() <= 1.8 + 1e-10);
}

TEST_CASE("the clustering step is globally optimal on a tiny instance") {
    Rng rng(4);
    Eigen::MatrixXd x = two_cloud_features(5, 6, rng); // P = 10
    auto model = sparse_kmeans(x, 2, 1.5, 7);

    Eigen::MatrixXd scaled = x * model.weights.cwiseSqrt().asDiagonal();
    double achieved = weighted_wcss(scaled, model.assignments, 2);
    double optimal = best_two_cluster_wcss(scaled);
    CHECK(achieved == doctest::Approx(optimal).epsilon(1e-9));
}

TEST_CASE("a full l1 budget keeps every useful feature") {
    Rng rng(6);
    Eigen::MatrixXd x = two_cloud_features(6, 10, rng);
    double s = std::sqrt(static_cast<double>(x.cols()));
    auto model = sparse_kmeans(x, 2, s, 11);
    CHECK(model.weights.lpNorm<1>() <= s + 1e-10);
    CHECK(model.weights.norm() == doctest::Approx(1.0));
    // the l1 constraint is inactive, so no dimension is thresholded away
    Eigen::VectorXd bcss = between_cluster_ss(x, model.assignments, 2);
    for (int d = 0; d < x.cols(); ++d)
        if (bcss[d] > 1e-12) CHECK(model.weights[d] > 0.0);
}

TEST_CASE("k equal to the point count gives zero dispersion") {
    Rng rng(8);
    Eigen::MatrixXd x(5, 3);
    for (int i = 0; i < 5; ++i)
        for (int d = 0; d < 3; ++d) x(i, d) = rng.normal() * 3.0;
    auto model = sparse_kmeans(x, 5, 1.7, 3);
    std::set<int> labels(model.assignments.begin(), model.assignments.end());
    CHECK(labels.size() == 5);
    Eigen::MatrixXd scaled = x * model.weights.cwiseSqrt().asDiagonal();
    CHECK(weighted_wcss(scaled, model.assignments, 5) <= 1e-20);
}

TEST_CASE("the weighted objective never decreases across alternations") {
    Rng rng(10);
    Eigen::MatrixXd x = two_cloud_features(10, 30, rng);
    double prev = -std::numeric_limits<double>::infinity();
    for (int iters = 1; iters <= 5; ++iters) {
        auto model = sparse_kmeans(x, 2, 2.5, 123, iters);
        Eigen::VectorXd bcss = between_cluster_ss(x, model.assignments, 2);
        double objective = bcss.dot(model.weights);
        CHECK(objective >= prev - 1e-9 * std::max(1.0, std::abs(prev)));
        prev = objective;
    }
}

TEST_CASE("centroids are the means of their members") {
    Rng rng(12);
    Eigen::MatrixXd x = two_cloud_features(7, 4, rng);
    auto model = sparse_kmeans(x, 2, 2.0, 17);
    Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(2, x.cols());
    Eigen::Vector2i counts{0, 0};
    for (int i = 0; i < x.rows(); ++i) {
        expect.row(model.assignments[static_cast<std::size_t>(i)]) += x.row(i);
        ++counts[model.assignments[static_cast<std::size_t>(i)]];
    }
    for (int j = 0; j < 2; ++j) expect.row(j) /= counts[j];
    CHECK((model.centroids - expect).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("sparse k-means is deterministic and validates input") {
    Rng rng(14);
    Eigen::MatrixXd x = two_cloud_features(5, 8, rng);
    auto a = sparse_kmeans(x, 2, 2.0, 5);
    auto b = sparse_kmeans(x, 2, 2.0, 5);
    CHECK(a.assignments == b.assignments);
    CHECK((a.weights - b.weights).norm() == 0.0);

    CHECK_THROWS_AS(sparse_kmeans(x, 1, 2.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(sparse_kmeans(x, 11, 2.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(sparse_kmeans(x, 2, 0.5, 5), std::invalid_argument);
    CHECK_THROWS_AS(sparse_kmeans(x, 2, 100.0, 5), std::invalid_argument);
}

TEST_CASE("alignment_score rewards matching centroids") {
    auto dict = standard_basis_dictionary(4);
    ClusterModel model;
    model.k = 2;
    model.weights = Eigen::VectorXd::Constant(4, 0.5);
    model.centroids = Eigen::MatrixXd::Zero(2, 4);
    model.centroids(0, 0) = 1.0;
    model.centroids(1, 2) = 2.0;

    // a flow equal (up to scale) to centroid 1 aligns perfectly
    Eigen::VectorXd f = Eigen::VectorXd::Zero(4);
    f[2] = 0.5;
    CHECK(alignment_score(model, {Cochain(1, f)}, dict) == doctest::Approx(1.0));

    // a flow orthogonal to both centroids contributes zero
    Eigen::VectorXd g = Eigen::VectorXd::Zero(4);
    g[1] = 1.0;
    CHECK(alignment_score(model, {Cochain(1, g)}, dict) == doctest::Approx(0.0));

    double both = alignment_score(model, {Cochain(1, f), Cochain(1, g)}, dict);
    CHECK(both == doctest::Approx(0.5));

    CHECK_THROWS_AS(alignment_score(model, {}, dict), std::invalid_argument);
}

TEST_CASE("alignment_score stays within [-1, 1]") {
    Rng rng(16);
    auto dict = standard_basis_dictionary(6);
    ClusterModel model;
    model.k = 2;
    model.weights = Eigen::VectorXd::Constant(6, 1.0 / std::sqrt(6.0));
    model.centroids = Eigen::MatrixXd(2, 6);
    for (int j = 0; j < 2; ++j)
        for (int d = 0; d < 6; ++d) model.centroids(j, d) = rng.normal();
    std::vector<Cochain> flows;
    for (int i = 0; i < 20; ++i) {
        Eigen::VectorXd f(6);
        for (int d = 0; d < 6; ++d) f[d] = rng.normal();
        flows.push_back(Cochain(1, f));
    }
    double score = alignment_score(model, flows, dict);
    CHECK(score >= -1.0 - 1e-12);
    CHECK(score <= 1.0 + 1e-12);
}

TEST_CASE("train_test_split honours the documented rounding") {
    auto [train, test] = train_test_split(334, 0.75, 42);
    CHECK(train.size() == 250);
    CHECK(test.size() == 84);

    auto [t2, s2] = train_test_split(2, 0.5, 1);
    CHECK(t2.size() == 1);
    CHECK(s2.size() == 1);

    auto again = train_test_split(334, 0.75, 42);
    CHECK(again.first == train);
    CHECK(again.second == test);

    std::set<int> all(train.begin(), train.end());
    all.insert(test.begin(), test.end());
    CHECK(all.size() == 334);
    CHECK(*all.begin() == 0);
    CHECK(*all.rbegin() == 333);

    CHECK_THROWS_AS(train_test_split(1, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(train_test_split(10, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(train_test_split(10, 1.0, 0), std::invalid_argument);
}
