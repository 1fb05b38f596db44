#include "hodgelets/dictionary.hpp"

#include "hodgelets/errors.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hodgelets {

std::string to_string(AtomPart part) {
    switch (part) {
        case AtomPart::joint: return "joint";
        case AtomPart::upper: return "upper";
        case AtomPart::lower: return "lower";
    }
    return "joint";
}

std::string to_string(DictionaryKind kind) {
    switch (kind) {
        case DictionaryKind::standard: return "standard";
        case DictionaryKind::fourier: return "fourier";
        case DictionaryKind::linegraph_fourier: return "linegraph_fourier";
        case DictionaryKind::linegraph_wavelet: return "linegraph_wavelet";
        case DictionaryKind::joint: return "joint";
        case DictionaryKind::separate: return "separate";
    }
    return "standard";
}

namespace {

// Kernel values across the spectrum, clamping the tiny negative eigenvalues a
// PSD eigensolve can produce. Row m-1 holds g_m at each eigenvalue.
Eigen::MatrixXd kernel_table(const KernelBank& bank, const Eigen::VectorXd& eigenvalues) {
    Eigen::MatrixXd table(bank.m_count, eigenvalues.size());
    for (int i = 0; i < eigenvalues.size(); ++i)
        table.col(i) = evaluate(bank, std::max(0.0, eigenvalues[i]));
    return table;
}

// Appends the M*N1 atoms g_m(L) e_j, m-major, to `dict`.
void append_filter_atoms(Dictionary& dict, int& col, const SpectralDecomposition& spec,
                         const KernelBank& bank, AtomPart part) {
    const Eigen::MatrixXd table = kernel_table(bank, spec.eigenvalues);
    const int n1 = static_cast<int>(spec.eigenvectors.rows());
    for (int m = 1; m <= bank.m_count; ++m) {
        // g_m(L) = V diag(g_m(lambda)) V^T; its columns are the atoms for all j
        Eigen::MatrixXd filter = spec.eigenvectors *
                                 table.row(m - 1).asDiagonal() *
                                 spec.eigenvectors.transpose();
        for (int j = 1; j <= n1; ++j) {
            dict.atoms.col(col) = filter.col(j - 1);
            dict.labels[static_cast<std::size_t>(col)] = AtomLabel{part, m, j};
            ++col;
        }
    }
}

} // namespace

Dictionary standard_basis_dictionary(int n1) {
    Dictionary dict;
    dict.kind = DictionaryKind::standard;
    dict.atoms = Eigen::MatrixXd::Identity(n1, n1);
    dict.labels.resize(static_cast<std::size_t>(n1));
    for (int j = 1; j <= n1; ++j)
        dict.labels[static_cast<std::size_t>(j - 1)] = AtomLabel{AtomPart::joint, 1, j};
    return dict;
}

Dictionary fourier_dictionary(const SpectralDecomposition& spec, DictionaryKind kind) {
    Dictionary dict;
    dict.kind = kind;
    dict.atoms = spec.eigenvectors;
    dict.labels.resize(static_cast<std::size_t>(dict.size()));
    for (int j = 1; j <= dict.size(); ++j)
        dict.labels[static_cast<std::size_t>(j - 1)] = AtomLabel{AtomPart::joint, 1, j};
    return dict;
}

Dictionary joint_dictionary(const SpectralDecomposition& spec, const KernelBank& bank,
                            DictionaryKind kind) {
    const int n1 = static_cast<int>(spec.eigenvectors.rows());
    Dictionary dict;
    dict.kind = kind;
    dict.atoms.resize(n1, static_cast<Eigen::Index>(bank.m_count) * n1);
    dict.labels.resize(static_cast<std::size_t>(bank.m_count) * static_cast<std::size_t>(n1));
    int col = 0;
    append_filter_atoms(dict, col, spec, bank, AtomPart::joint);
    return dict;
}

Dictionary separate_dictionary(const SpectralDecomposition& spec_u,
                               const SpectralDecomposition& spec_l,
                               const KernelBank& bank_u, const KernelBank& bank_l) {
    if (spec_u.eigenvectors.rows() != spec_l.eigenvectors.rows())
        throw std::invalid_argument("separate_dictionary: spectra dimension mismatch");
    const int n1 = static_cast<int>(spec_u.eigenvectors.rows());
    Dictionary dict;
    dict.kind = DictionaryKind::separate;
    const int total = (bank_u.m_count + bank_l.m_count) * n1;
    dict.atoms.resize(n1, total);
    dict.labels.resize(static_cast<std::size_t>(total));
    int col = 0;
    append_filter_atoms(dict, col, spec_u, bank_u, AtomPart::upper);
    append_filter_atoms(dict, col, spec_l, bank_l, AtomPart::lower);
    return dict;
}

Eigen::VectorXd analyze(const Dictionary& dict, const Cochain& f) {
    if (f.values.size() != dict.atoms.rows())
        throw std::invalid_argument("analyze: flow length does not match dictionary");
    return dict.atoms.transpose() * f.values;
}

Cochain dual_reconstruct(const Dictionary& dict, const Eigen::VectorXd& coefficients) {
    if (coefficients.size() != dict.size())
        throw std::invalid_argument("dual_reconstruct: coefficient count mismatch");
    Eigen::MatrixXd frame_op = dict.atoms * dict.atoms.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(frame_op);
    if (solver.info() != Eigen::Success)
        throw NumericalError("dual_reconstruct: eigensolver failed on the frame operator");
    const auto& evals = solver.eigenvalues();
    double lambda_max = evals[evals.size() - 1];
    if (lambda_max <= 0.0 || evals[0] <= 1e-12 * lambda_max)
        throw NumericalError("dual_reconstruct: degenerate frame (lower bound ~ 0)");
    Eigen::VectorXd synth = dict.atoms * coefficients;
    Eigen::VectorXd in_basis = solver.eigenvectors().transpose() * synth;
    in_basis.array() /= evals.array();
    return Cochain(1, solver.eigenvectors() * in_basis);
}

FrameBounds frame_bounds_joint(const KernelBank& bank, const Eigen::VectorXd& spectrum) {
    if (spectrum.size() == 0) throw std::invalid_argument("frame_bounds_joint: empty spectrum");
    FrameBounds fb;
    fb.a = std::numeric_limits<double>::infinity();
    fb.b = 0.0;
    for (int i = 0; i < spectrum.size(); ++i) {
        double g = g_sum(bank, std::max(0.0, spectrum[i]));
        fb.a = std::min(fb.a, g);
        fb.b = std::max(fb.b, g);
    }
    return fb;
}

FrameBounds frame_bounds_separate(const KernelBank& bank_u, const KernelBank& bank_l,
                                  const Eigen::VectorXd& spectrum_u,
                                  const Eigen::VectorXd& spectrum_l) {
    if (spectrum_u.size() == 0 || spectrum_l.size() == 0)
        throw std::invalid_argument("frame_bounds_separate: empty spectrum");
    const double dc_u = g_sum(bank_u, 0.0);
    const double dc_l = g_sum(bank_l, 0.0);
    FrameBounds fb;
    fb.a = std::numeric_limits<double>::infinity();
    fb.b = 0.0;
    for (int i = 0; i < spectrum_u.size(); ++i) {
        double g = g_sum(bank_u, std::max(0.0, spectrum_u[i])) + dc_l;
        fb.a = std::min(fb.a, g);
        fb.b = std::max(fb.b, g);
    }
    for (int i = 0; i < spectrum_l.size(); ++i) {
        double g = dc_u + g_sum(bank_l, std::max(0.0, spectrum_l[i]));
        fb.a = std::min(fb.a, g);
        fb.b = std::max(fb.b, g);
    }
    return fb;
}

FrameBounds frame_bounds_empirical(const Dictionary& dict) {
    if (dict.size() == 0) throw std::invalid_argument("frame_bounds_empirical: empty dictionary");
    Eigen::MatrixXd frame_op = dict.atoms * dict.atoms.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(frame_op, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("frame_bounds_empirical: eigensolver failed");
    const auto& evals = solver.eigenvalues();
    FrameBounds fb;
    fb.a = std::max(0.0, evals[0]);
    fb.b = std::max(0.0, evals[evals.size() - 1]);
    return fb;
}

double subspace_residual(const Atom& atom, const HodgeSpectra& spectra) {
    if (atom.label.part == AtomPart::joint)
        throw std::invalid_argument("subspace_residual: joint atoms have no target subspace");
    const SpectralDecomposition& spec =
        atom.label.part == AtomPart::upper ? spectra.l1u : spectra.l1l;
    if (atom.vector.size() != spec.eigenvectors.rows())
        throw std::invalid_argument("subspace_residual: dimension mismatch");
    return (atom.vector - spec.project_range(atom.vector)).norm();
}

} // namespace hodgelets
