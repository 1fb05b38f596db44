#include "hodgelets/sparse.hpp"

#include "hodgelets/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hodgelets {

SparseApproximation omp(const Dictionary& dict, const Cochain& f, double epsilon,
                        int max_atoms) {
    if (epsilon < 0.0) throw std::invalid_argument("omp: negative tolerance");
    if (f.values.size() != dict.atoms.rows())
        throw std::invalid_argument("omp: flow length does not match dictionary");
    const int n1 = dict.n1();
    const int n_atoms = dict.size();
    if (max_atoms < 0) max_atoms = n1;

    Eigen::VectorXd norms(n_atoms);
    for (int k = 0; k < n_atoms; ++k) norms[k] = dict.atoms.col(k).norm();
    const double max_norm = n_atoms > 0 ? norms.maxCoeff() : 0.0;
    if (max_norm <= 0.0) throw std::invalid_argument("omp: all-zero dictionary");
    const double zero_atom = 1e-14 * max_norm;

    SparseApproximation out;
    out.epsilon = epsilon;

    Eigen::VectorXd residual = f.values;
    double rnorm = residual.norm();
    out.residual_history.push_back(rnorm);
    // residuals at relative machine noise count as met, also for epsilon = 0
    const double stop_at = std::max(epsilon, 1e-14 * rnorm);

    // incremental Gram-Schmidt basis of the support; R holds the triangular
    // factor, qtf the projections of f
    Eigen::MatrixXd q(n1, std::min(max_atoms, n_atoms));
    Eigen::MatrixXd r_factor = Eigen::MatrixXd::Zero(q.cols(), q.cols());
    std::vector<double> qtf;
    std::vector<bool> selected(static_cast<std::size_t>(n_atoms), false);

    while (rnorm > stop_at && out.atom_count() < max_atoms) {
        Eigen::VectorXd corr = dict.atoms.transpose() * residual;
        int best = -1;
        double best_score = 0.0;
        for (int k = 0; k < n_atoms; ++k) {
            if (selected[static_cast<std::size_t>(k)] || norms[k] <= zero_atom) continue;
            double score = std::abs(corr[k]) / norms[k];
            if (score > best_score) { best_score = score; best = k; }
        }
        if (best < 0 || best_score <= 1e-14 * rnorm) break; // nothing correlates

        const int k = out.atom_count();
        Eigen::VectorXd v = dict.atoms.col(best);
        for (int pass = 0; pass < 2; ++pass) { // reorthogonalize once
            for (int i = 0; i < k; ++i) {
                double proj = q.col(i).dot(v);
                r_factor(i, k) += proj;
                v -= proj * q.col(i);
            }
        }
        double diag = v.norm();
        if (diag <= 1e-12 * norms[best]) break; // linearly dependent atom
        r_factor(k, k) = diag;
        q.col(k) = v / diag;

        double proj = q.col(k).dot(residual);
        Eigen::VectorXd next_residual = residual - proj * q.col(k);
        double next_rnorm = next_residual.norm();
        if (rnorm - next_rnorm < 1e-12 * rnorm) break; // stagnation guard

        selected[static_cast<std::size_t>(best)] = true;
        out.support.push_back(best);
        qtf.push_back(q.col(k).dot(f.values));
        residual.swap(next_residual);
        rnorm = next_rnorm;
        out.residual_history.push_back(rnorm);
    }

    // back-substitute R c = Q^T f for the least-squares coefficients
    const int s = out.atom_count();
    out.coefficients.resize(s);
    for (int i = s - 1; i >= 0; --i) {
        double acc = qtf[static_cast<std::size_t>(i)];
        for (int jj = i + 1; jj < s; ++jj) acc -= r_factor(i, jj) * out.coefficients[jj];
        out.coefficients[i] = acc / r_factor(i, i);
    }
    out.residual_norm = rnorm;
    out.converged = rnorm <= stop_at;
    return out;
}

SparsityCurve sparsity_curve(const std::vector<const Dictionary*>& dictionaries,
                             const Cochain& f, const std::vector<double>& epsilons_rel) {
    if (dictionaries.empty()) throw std::invalid_argument("sparsity_curve: no dictionaries");
    if (epsilons_rel.empty()) throw std::invalid_argument("sparsity_curve: no tolerances");
    for (double e : epsilons_rel)
        if (e <= 0.0 || e > 1.0)
            throw std::invalid_argument("sparsity_curve: relative tolerances must be in (0, 1]");
    const double fnorm = f.values.norm();
    if (fnorm <= 0.0) throw std::invalid_argument("sparsity_curve: zero flow");

    double min_eps = *std::min_element(epsilons_rel.begin(), epsilons_rel.end());

    SparsityCurve curve;
    curve.epsilons_rel = epsilons_rel;
    std::vector<std::vector<double>> histories;
    for (const Dictionary* dict : dictionaries) {
        curve.dictionary_names.push_back(to_string(dict->kind));
        SparseApproximation approx = omp(*dict, f, min_eps * fnorm);
        if (!approx.converged)
            throw NumericalError("sparsity_curve: OMP could not reach tolerance " +
                                 std::to_string(min_eps) + " with dictionary " +
                                 to_string(dict->kind));
        histories.push_back(approx.residual_history);
    }

    for (double eps : epsilons_rel) {
        std::vector<int> row;
        for (const auto& hist : histories) {
            int count = 0;
            while (hist[static_cast<std::size_t>(count)] > eps * fnorm) ++count;
            row.push_back(count);
        }
        curve.counts.push_back(std::move(row));
    }
    return curve;
}

} // namespace hodgelets
