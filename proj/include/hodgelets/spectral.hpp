#ifndef HODGELETS_SPECTRAL_HPP
#define HODGELETS_SPECTRAL_HPP

#include "hodgelets/complex.hpp"

#include <Eigen/Dense>

namespace hodgelets {

// The four Laplace operators of a complex, assembled from exact integer
// incidence products and then promoted to double.
struct HodgeOperators {
    Eigen::MatrixXd l1;  // Hodge Laplacian  b2*b2^T + b1^T*b1
    Eigen::MatrixXd l1u; // upper part       b2*b2^T
    Eigen::MatrixXd l1l; // lower part       b1^T*b1
    Eigen::MatrixXd l0;  // graph Laplacian  b1*b1^T
};

// Full eigendecomposition of a symmetric operator. Eigenvalues ascending,
// eigenvector columns orthonormal, each sign-fixed so the largest-magnitude
// entry is positive (ties by lowest index). `tol` is the absolute threshold
// below which an eigenvalue counts as zero.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    double tol = 0.0;

    int size() const { return static_cast<int>(eigenvalues.size()); }
    int null_dim() const;
    int rank() const { return size() - null_dim(); }

    // Orthogonal projection of v onto the span of the zero (or nonzero)
    // eigenvectors.
    Eigen::VectorXd project_null(const Eigen::VectorXd& v) const;
    Eigen::VectorXd project_range(const Eigen::VectorXd& v) const;
};

// Orthogonal pieces of an edge flow: gradient in Im(b1^T), curl in Im(b2),
// harmonic in ker(L1). Components sum back to the input.
struct HodgeComponents {
    Cochain gradient;
    Cochain curl;
    Cochain harmonic;
};

// Decompositions of L1, L1U and L1L, computed once and shared by the
// dictionary, frame-bound and decomposition code paths.
struct HodgeSpectra {
    SpectralDecomposition l1;
    SpectralDecomposition l1u;
    SpectralDecomposition l1l;
};

HodgeOperators hodge_operators(const SimplicialComplex& x);

// Dense symmetric eigendecomposition. `zero_tol_rel` scales the largest
// eigenvalue magnitude to produce the stored zero threshold; 1e-8 keeps rank
// decisions identical across every consumer. Throws std::invalid_argument if
// the input is asymmetric beyond 1e-12 relative, NumericalError if the solver
// fails to converge.
SpectralDecomposition eigendecompose(const Eigen::MatrixXd& a, double zero_tol_rel = 1e-8);

HodgeSpectra hodge_spectra(const HodgeOperators& ops, double zero_tol_rel = 1e-8);

// Projects f onto the nonzero eigenspaces of L1L (gradient) and L1U (curl)
// and the null space of L1 (harmonic).
HodgeComponents hodge_decompose(const Cochain& f, const HodgeOperators& ops,
                                const HodgeSpectra& spectra);

// Simplicial Fourier transform: coefficients <v_i, f> against the given
// eigenvector basis.
Eigen::VectorXd sft(const Cochain& f, const SpectralDecomposition& spec);

// Graph Laplacian of the linegraph: vertices are the edges of x, adjacent
// whenever they share a node. Orientation-blind baseline operator.
Eigen::MatrixXd linegraph_laplacian(const SimplicialComplex& x);

} // namespace hodgelets

#endif
