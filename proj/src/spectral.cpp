#include "hodgelets/spectral.hpp"

#include "hodgelets/errors.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace hodgelets {

int SpectralDecomposition::null_dim() const {
    int k = 0;
    while (k < size() && eigenvalues[k] <= tol) ++k;
    return k;
}

Eigen::VectorXd SpectralDecomposition::project_null(const Eigen::VectorXd& v) const {
    int k = null_dim();
    if (k == 0) return Eigen::VectorXd::Zero(v.size());
    auto basis = eigenvectors.leftCols(k);
    return basis * (basis.transpose() * v);
}

Eigen::VectorXd SpectralDecomposition::project_range(const Eigen::VectorXd& v) const {
    int k = null_dim();
    if (k == size()) return Eigen::VectorXd::Zero(v.size());
    auto basis = eigenvectors.rightCols(size() - k);
    return basis * (basis.transpose() * v);
}

HodgeOperators hodge_operators(const SimplicialComplex& x) {
    Eigen::SparseMatrix<int> b1 = boundary_1(x);
    Eigen::SparseMatrix<int> b2 = boundary_2(x);
    // integer products first, promoted afterwards
    Eigen::SparseMatrix<int> l1u = b2 * Eigen::SparseMatrix<int>(b2.transpose());
    Eigen::SparseMatrix<int> l1l = Eigen::SparseMatrix<int>(b1.transpose()) * b1;
    Eigen::SparseMatrix<int> l0 = b1 * Eigen::SparseMatrix<int>(b1.transpose());

    HodgeOperators ops;
    ops.l1u = Eigen::MatrixXd(l1u.cast<double>());
    ops.l1l = Eigen::MatrixXd(l1l.cast<double>());
    ops.l1 = ops.l1u + ops.l1l;
    ops.l0 = Eigen::MatrixXd(l0.cast<double>());
    return ops;
}

SpectralDecomposition eigendecompose(const Eigen::MatrixXd& a, double zero_tol_rel) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigendecompose: matrix not square");
    const double scale = std::max(1.0, a.norm());
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("eigendecompose: matrix not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (a + a.transpose()));
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigendecompose: solver did not converge");

    SpectralDecomposition spec;
    spec.eigenvalues = solver.eigenvalues();
    spec.eigenvectors = solver.eigenvectors();

    // sign convention: largest-magnitude entry positive, ties by lowest index
    for (int c = 0; c < spec.eigenvectors.cols(); ++c) {
        int arg = 0;
        double best = 0.0;
        for (int r = 0; r < spec.eigenvectors.rows(); ++r) {
            double m = std::abs(spec.eigenvectors(r, c));
            if (m > best) { best = m; arg = r; }
        }
        if (spec.eigenvectors(arg, c) < 0.0) spec.eigenvectors.col(c) = -spec.eigenvectors.col(c);
    }

    double lambda_max = spec.size() > 0 ? spec.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    spec.tol = zero_tol_rel * lambda_max;
    return spec;
}

HodgeSpectra hodge_spectra(const HodgeOperators& ops, double zero_tol_rel) {
    HodgeSpectra s;
    s.l1 = eigendecompose(ops.l1, zero_tol_rel);
    s.l1u = eigendecompose(ops.l1u, zero_tol_rel);
    s.l1l = eigendecompose(ops.l1l, zero_tol_rel);
    return s;
}

HodgeComponents hodge_decompose(const Cochain& f, const HodgeOperators& ops,
                                const HodgeSpectra& spectra) {
    if (f.degree != 1) throw std::invalid_argument("hodge_decompose: expected a 1-cochain");
    if (f.values.size() != ops.l1.rows())
        throw std::invalid_argument("hodge_decompose: flow length does not match N1");

    HodgeComponents out;
    out.curl = Cochain(1, spectra.l1u.project_range(f.values));
    out.gradient = Cochain(1, spectra.l1l.project_range(f.values));
    out.harmonic = Cochain(1, spectra.l1.project_null(f.values));
    return out;
}

Eigen::VectorXd sft(const Cochain& f, const SpectralDecomposition& spec) {
    if (f.values.size() != spec.eigenvectors.rows())
        throw std::invalid_argument("sft: dimension mismatch");
    return spec.eigenvectors.transpose() * f.values;
}

Eigen::MatrixXd linegraph_laplacian(const SimplicialComplex& x) {
    const int n1 = x.n1();
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n1, n1);
    // edges are adjacent iff they share a node; two distinct edges share at
    // most one
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(x.n0()));
    for (int c = 0; c < n1; ++c) {
        const Edge& e = x.edges[static_cast<std::size_t>(c)];
        incident[static_cast<std::size_t>(e[0] - 1)].push_back(c);
        incident[static_cast<std::size_t>(e[1] - 1)].push_back(c);
    }
    for (const auto& cols : incident) {
        for (std::size_t a = 0; a < cols.size(); ++a) {
            for (std::size_t b = a + 1; b < cols.size(); ++b) {
                lap(cols[a], cols[b]) -= 1.0;
                lap(cols[b], cols[a]) -= 1.0;
                lap(cols[a], cols[a]) += 1.0;
                lap(cols[b], cols[b]) += 1.0;
            }
        }
    }
    return lap;
}

} // namespace hodgelets
