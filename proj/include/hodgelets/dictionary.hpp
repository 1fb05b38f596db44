#ifndef HODGELETS_DICTIONARY_HPP
#define HODGELETS_DICTIONARY_HPP

#include "hodgelets/complex.hpp"
#include "hodgelets/kernels.hpp"
#include "hodgelets/spectral.hpp"

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace hodgelets {

enum class AtomPart { joint, upper, lower };
enum class DictionaryKind { standard, fourier, linegraph_fourier, linegraph_wavelet, joint, separate };

std::string to_string(AtomPart part);
std::string to_string(DictionaryKind kind);

struct AtomLabel {
    AtomPart part = AtomPart::joint;
    int m = 1; // kernel index (1-based)
    int j = 1; // localization center, an edge index (1-based)
};

struct Atom {
    Eigen::VectorXd vector;
    AtomLabel label;
};

// An indexed atom set over C^1(X). Atoms are materialized as dense columns in
// a fixed order: part (joint < upper < lower), then kernel index m, then
// center j. Zero atoms are kept so indices stay arithmetic.
struct Dictionary {
    DictionaryKind kind = DictionaryKind::standard;
    Eigen::MatrixXd atoms;         // N1 x size, one column per atom
    std::vector<AtomLabel> labels; // aligned with columns

    int n1() const { return static_cast<int>(atoms.rows()); }
    int size() const { return static_cast<int>(atoms.cols()); }
    Atom atom(int k) const { return Atom{atoms.col(k), labels[static_cast<std::size_t>(k)]}; }
};

// Frame bounds A <= B of a dictionary; A = 0 marks a degenerate frame.
struct FrameBounds {
    double a = 0.0;
    double b = 0.0;
    bool tight(double rel = 1e-9) const { return a > 0.0 && b / a - 1.0 <= rel; }
};

Dictionary standard_basis_dictionary(int n1);

// Atoms are the eigenvector columns themselves.
Dictionary fourier_dictionary(const SpectralDecomposition& spec,
                              DictionaryKind kind = DictionaryKind::fourier);

// psi_{j,m} = g_m(L) e_j through the eigenbasis of L; M*N1 atoms, m-major.
// Also used for the linegraph wavelet baseline via `kind`.
Dictionary joint_dictionary(const SpectralDecomposition& spec, const KernelBank& bank,
                            DictionaryKind kind = DictionaryKind::joint);

// Upper atoms from L1U and lower atoms from L1L; (M_U + M_L)*N1 atoms, upper
// block first.
Dictionary separate_dictionary(const SpectralDecomposition& spec_u,
                               const SpectralDecomposition& spec_l,
                               const KernelBank& bank_u, const KernelBank& bank_l);

// Analysis coefficients <psi_k, f> in dictionary order.
Eigen::VectorXd analyze(const Dictionary& dict, const Cochain& f);

// Canonical dual synthesis: S^{-1} * sum_k c_k psi_k with S the frame
// operator. Throws NumericalError when the frame is degenerate.
Cochain dual_reconstruct(const Dictionary& dict, const Eigen::VectorXd& coefficients);

// Frame bounds from the kernel sums over the spectrum (analytic route).
FrameBounds frame_bounds_joint(const KernelBank& bank, const Eigen::VectorXd& spectrum);
FrameBounds frame_bounds_separate(const KernelBank& bank_u, const KernelBank& bank_l,
                                  const Eigen::VectorXd& spectrum_u,
                                  const Eigen::VectorXd& spectrum_l);

// Frame bounds as the extreme eigenvalues of S = sum psi psi^T, computed from
// the materialized atoms (independent of the analytic route).
FrameBounds frame_bounds_empirical(const Dictionary& dict);

// Norm of an upper atom's component outside Im(b2), or a lower atom's outside
// Im(b1^T). Joint atoms are rejected.
double subspace_residual(const Atom& atom, const HodgeSpectra& spectra);

} // namespace hodgelets

#endif
