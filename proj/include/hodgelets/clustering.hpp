#ifndef HODGELETS_CLUSTERING_HPP
#define HODGELETS_CLUSTERING_HPP

#include "hodgelets/dictionary.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

namespace hodgelets {

// Output of sparse k-means over dictionary coefficients: cluster centroids in
// coefficient space plus nonnegative feature-selection weights with
// ||w||_2 <= 1 and ||w||_1 <= s.
struct ClusterModel {
    int k = 0;
    double sparsity_budget = 0.0; // s, the l1 bound
    std::uint64_t seed = 0;
    Eigen::VectorXd weights;      // length D
    Eigen::MatrixXd centroids;    // K x D, per-cluster means of assigned rows
    std::vector<int> assignments; // training labels, length P
};

// Alternating sparse k-means: weighted Lloyd iterations (k-means++ seeding,
// empty clusters reseeded from the farthest point) alternate with the
// soft-threshold weight update w ~ (bcss - delta)_+ renormalized to unit l2,
// delta found by bisection so the l1 budget holds. Stops when the weight
// change drops below 1e-6 in l1 or after max_iters alternations.
// Deterministic given seed.
ClusterModel sparse_kmeans(const Eigen::MatrixXd& features, int k, double s,
                           std::uint64_t seed, int max_iters = 20);

// Between-cluster sum of squares per feature for a given labeling; the
// objective of the weight step (exposed for tests).
Eigen::VectorXd between_cluster_ss(const Eigen::MatrixXd& features,
                                   const std::vector<int>& assignments, int k);

// Mean over test flows of the best centroid alignment
//   max_k <c, c_k>_w / (||c||_w ||c_k||_w)
// with c the analysis coefficients of the flow and <.,.>_w the diagonal inner
// product weighted by the model's feature weights. Zero weighted norms
// contribute 0.
double alignment_score(const ClusterModel& model, const std::vector<Cochain>& test,
                       const Dictionary& dict);

// Seed-deterministic disjoint cover; the test side gets round-half-up of
// (1 - ratio) * p. Both lists come back sorted.
std::pair<std::vector<int>, std::vector<int>> train_test_split(int p, double ratio,
                                                               std::uint64_t seed);

} // namespace hodgelets

#endif
