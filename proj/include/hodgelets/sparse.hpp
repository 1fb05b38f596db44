#ifndef HODGELETS_SPARSE_HPP
#define HODGELETS_SPARSE_HPP

#include "hodgelets/dictionary.hpp"

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace hodgelets {

struct SparseApproximation {
    std::vector<int> support;     // atom indices in selection order
    Eigen::VectorXd coefficients; // least-squares fit on the support
    double residual_norm = 0.0;
    double epsilon = 0.0;
    bool converged = false; // residual_norm <= epsilon

    // ||r|| after fitting 0, 1, ..., |support| atoms
    std::vector<double> residual_history;

    int atom_count() const { return static_cast<int>(support.size()); }
};

// Orthogonal matching pursuit: greedily selects the atom maximizing
// |<psi, r>| / ||psi|| (ties to the lowest index, zero atoms skipped) and
// refits on the support each iteration. Stops at residual <= epsilon,
// max_atoms (default N1), or relative stagnation below 1e-12. A cap hit with
// residual above epsilon is reported through `converged`, not thrown.
SparseApproximation omp(const Dictionary& dict, const Cochain& f, double epsilon,
                        int max_atoms = -1);

struct SparsityCurve {
    std::vector<double> epsilons_rel;
    std::vector<std::string> dictionary_names;
    std::vector<std::vector<int>> counts; // counts[row][dictionary]
};

// Atom counts needed by each dictionary to reach every relative tolerance in
// `epsilons_rel` (each in (0,1], relative to ||f||). One OMP pass per
// dictionary; counts are read off the residual history.
SparsityCurve sparsity_curve(const std::vector<const Dictionary*>& dictionaries,
                             const Cochain& f, const std::vector<double>& epsilons_rel);

} // namespace hodgelets

#endif
