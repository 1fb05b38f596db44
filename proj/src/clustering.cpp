#include "hodgelets/clustering.hpp"

#include "hodgelets/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hodgelets {

namespace {

// Squared distances of every row to one centroid.
Eigen::VectorXd sq_dist_to(const Eigen::MatrixXd& rows, const Eigen::RowVectorXd& centroid) {
    return (rows.rowwise() - centroid).rowwise().squaredNorm();
}

Eigen::MatrixXd centroids_of(const Eigen::MatrixXd& rows, const std::vector<int>& labels, int k) {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(k, rows.cols());
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < rows.rows(); ++i) {
        c.row(labels[static_cast<std::size_t>(i)]) += rows.row(i);
        ++sizes[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    }
    for (int j = 0; j < k; ++j)
        if (sizes[static_cast<std::size_t>(j)] > 0) c.row(j) /= sizes[static_cast<std::size_t>(j)];
    return c;
}

// Lloyd iterations on already-scaled rows. Centroids are passed in as a warm
// start; empty clusters are reseeded from the point farthest from its own
// centroid (ties to the lowest row), which keeps runs deterministic.
void lloyd(const Eigen::MatrixXd& rows, Eigen::MatrixXd& centroids, std::vector<int>& labels) {
    const int p = static_cast<int>(rows.rows());
    const int k = static_cast<int>(centroids.rows());
    labels.assign(static_cast<std::size_t>(p), 0);
    for (int iter = 0; iter < 100; ++iter) {
        bool changed = false;
        Eigen::VectorXd best_d = Eigen::VectorXd::Constant(p, std::numeric_limits<double>::infinity());
        for (int j = 0; j < k; ++j) {
            Eigen::VectorXd d = sq_dist_to(rows, centroids.row(j));
            for (int i = 0; i < p; ++i) {
                if (d[i] < best_d[i]) {
                    best_d[i] = d[i];
                    if (labels[static_cast<std::size_t>(i)] != j) {
                        labels[static_cast<std::size_t>(i)] = j;
                        changed = true;
                    }
                }
            }
        }

        std::vector<int> sizes(static_cast<std::size_t>(k), 0);
        for (int l : labels) ++sizes[static_cast<std::size_t>(l)];
        for (int j = 0; j < k; ++j) {
            if (sizes[static_cast<std::size_t>(j)] > 0) continue;
            int far = 0;
            double far_d = -1.0;
            for (int i = 0; i < p; ++i) {
                if (sizes[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])] <= 1) continue;
                if (best_d[i] > far_d) { far_d = best_d[i]; far = i; }
            }
            --sizes[static_cast<std::size_t>(labels[static_cast<std::size_t>(far)])];
            labels[static_cast<std::size_t>(far)] = j;
            sizes[static_cast<std::size_t>(j)] = 1;
            changed = true;
        }

        centroids = centroids_of(rows, labels, k);
        if (!changed && iter > 0) break;
    }
}

} // namespace

Eigen::VectorXd between_cluster_ss(const Eigen::MatrixXd& features,
                                   const std::vector<int>& assignments, int k) {
    const Eigen::RowVectorXd grand = features.colwise().mean();
    Eigen::VectorXd total = (features.rowwise() - grand).colwise().squaredNorm().transpose();
    Eigen::MatrixXd cents = centroids_of(features, assignments, k);
    Eigen::VectorXd within = Eigen::VectorXd::Zero(features.cols());
    for (int i = 0; i < features.rows(); ++i) {
        Eigen::RowVectorXd diff =
            features.row(i) - cents.row(assignments[static_cast<std::size_t>(i)]);
        within += diff.cwiseProduct(diff).transpose();
    }
    return (total - within).cwiseMax(0.0);
}

ClusterModel sparse_kmeans(const Eigen::MatrixXd& features, int k, double s,
                           std::uint64_t seed, int max_iters) {
    const int p = static_cast<int>(features.rows());
    const int d = static_cast<int>(features.cols());
    if (k <= 1 || k > p) throw std::invalid_argument("sparse_kmeans: need 1 < K <= P");
    const double sqrt_d = std::sqrt(static_cast<double>(d));
    if (s < 1.0 || s > sqrt_d + 1e-9)
        throw std::invalid_argument("sparse_kmeans: need 1 <= s <= sqrt(D)");

    Rng rng(seed);
    Eigen::VectorXd w = Eigen::VectorXd::Constant(d, 1.0 / sqrt_d);
    std::vector<int> labels;
    Eigen::MatrixXd scaled_centroids;

    for (int iter = 0; iter < max_iters; ++iter) {
        Eigen::MatrixXd scaled = features * w.cwiseSqrt().asDiagonal();

        if (iter == 0) {
            // k-means++ seeding on the scaled rows
            scaled_centroids.resize(k, d);
            int first = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(p)));
            scaled_centroids.row(0) = scaled.row(first);
            Eigen::VectorXd dist = sq_dist_to(scaled, scaled_centroids.row(0));
            for (int j = 1; j < k; ++j) {
                std::vector<double> weights(dist.data(), dist.data() + p);
                int pick = static_cast<int>(rng.weighted_index(weights));
                scaled_centroids.row(j) = scaled.row(pick);
                dist = dist.cwiseMin(sq_dist_to(scaled, scaled_centroids.row(j)));
            }
        } else {
            // warm start: carry assignments into the new scaling
            scaled_centroids = centroids_of(scaled, labels, k);
        }
        lloyd(scaled, scaled_centroids, labels);

        // weight step: maximize sum_d w_d * bcss_d under the norm constraints
        Eigen::VectorXd bcss = between_cluster_ss(features, labels, k);
        auto weights_for = [&](double delta) {
            Eigen::VectorXd v = (bcss.array() - delta).max(0.0).matrix();
            double n = v.norm();
            if (n > 0.0) v /= n;
            return v;
        };
        Eigen::VectorXd next = weights_for(0.0);
        if (next.lpNorm<1>() > s) {
            double lo = 0.0, hi = bcss.maxCoeff();
            for (int b = 0; b < 30; ++b) {
                double mid = 0.5 * (lo + hi);
                if (weights_for(mid).lpNorm<1>() > s) lo = mid;
                else hi = mid;
            }
            next = weights_for(hi);
        }
        if (next.norm() == 0.0) next = Eigen::VectorXd::Constant(d, 1.0 / sqrt_d);

        double change = (next - w).lpNorm<1>();
        w = next;
        if (change < 1e-6) break;
    }

    ClusterModel model;
    model.k = k;
    model.sparsity_budget = s;
    model.seed = seed;
    model.weights = w;
    model.centroids = centroids_of(features, labels, k);
    model.assignments = labels;
    return model;
}

double alignment_score(const ClusterModel& model, const std::vector<Cochain>& test,
                       const Dictionary& dict) {
    if (test.empty()) throw std::invalid_argument("alignment_score: empty test set");
    if (model.centroids.cols() != dict.size())
        throw std::invalid_argument("alignment_score: centroids do not match dictionary");

    const Eigen::VectorXd& w = model.weights;
    std::vector<double> centroid_norms(static_cast<std::size_t>(model.k));
    for (int j = 0; j < model.k; ++j) {
        Eigen::VectorXd c = model.centroids.row(j).transpose();
        centroid_norms[static_cast<std::size_t>(j)] =
            std::sqrt(c.cwiseProduct(c).dot(w));
    }

    double total = 0.0;
    for (const Cochain& flow : test) {
        Eigen::VectorXd c = analyze(dict, flow);
        double cn = std::sqrt(c.cwiseProduct(c).dot(w));
        double best = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < model.k; ++j) {
            double denom = cn * centroid_norms[static_cast<std::size_t>(j)];
            double cosine = 0.0; // zero weighted norms contribute nothing
            if (denom > 0.0)
                cosine = c.cwiseProduct(model.centroids.row(j).transpose()).dot(w) / denom;
            best = std::max(best, cosine);
        }
        total += best;
    }
    return total / static_cast<double>(test.size());
}

std::pair<std::vector<int>, std::vector<int>> train_test_split(int p, double ratio,
                                                               std::uint64_t seed) {
    if (p < 2) throw std::invalid_argument("train_test_split: need at least 2 items");
    if (ratio <= 0.0 || ratio >= 1.0)
        throw std::invalid_argument("train_test_split: ratio must be in (0, 1)");

    std::vector<int> idx(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) idx[static_cast<std::size_t>(i)] = i;
    Rng rng(seed);
    rng.shuffle(idx);

    int n_test = static_cast<int>(std::floor((1.0 - ratio) * p + 0.5));
    n_test = std::clamp(n_test, 1, p - 1);
    int n_train = p - n_test;

    std::vector<int> train(idx.begin(), idx.begin() + n_train);
    std::vector<int> test(idx.begin() + n_train, idx.end());
    std::sort(train.begin(), train.end());
    std::sort(test.begin(), test.end());
    return {train, test};
}

} // namespace hodgelets
