#ifndef HODGELETS_COMPLEX_HPP
#define HODGELETS_COMPLEX_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace hodgelets {

// Node indices are 1-based throughout; a simplex is stored in its reference
// orientation, i.e. strictly ascending vertex order.
using Edge = std::array<int, 2>;
using Triangle = std::array<int, 3>;

// Oriented simplicial complex up to dimension 2. Edges and triangles are kept
// lexicographically sorted so column indices are reproducible.
struct SimplicialComplex {
    int n_nodes = 0;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    std::map<Edge, int> edge_index;         // ascending pair -> column
    std::map<Triangle, int> triangle_index; // ascending triple -> column

    int n0() const { return n_nodes; }
    int n1() const { return static_cast<int>(edges.size()); }
    int n2() const { return static_cast<int>(triangles.size()); }

    bool has_edge(int i, int j) const;
    int edge_column(int i, int j) const; // -1 if absent

    // 1-skeleton adjacency; entry k lists the neighbours of node k+1.
    std::vector<std::vector<int>> adjacency() const;
};

// Real-valued function on the oriented k-simplices.
struct Cochain {
    int degree = 1;
    Eigen::VectorXd values;

    Cochain() = default;
    Cochain(int k, Eigen::VectorXd v) : degree(k), values(std::move(v)) {}
    static Cochain zero(int k, int n) { return Cochain(k, Eigen::VectorXd::Zero(n)); }
};

// Planar node positions, one per node, aligned with node ids.
struct Geometry {
    std::vector<std::array<double, 2>> positions;

    double x(int node) const { return positions[static_cast<std::size_t>(node - 1)][0]; }
    double y(int node) const { return positions[static_cast<std::size_t>(node - 1)][1]; }
};

// Builds a complex from vertex sets, canonicalising orientation and adding the
// missing faces of every triangle (closure under restriction). Simplices end
// up lexicographically sorted. Throws std::invalid_argument on out-of-range or
// degenerate input.
SimplicialComplex from_simplices(int n_nodes,
                                 const std::vector<std::vector<int>>& edges,
                                 const std::vector<std::vector<int>>& triangles);

// Node-edge incidence: the column of edge [i,j] is -1 at node i, +1 at node j.
Eigen::SparseMatrix<int> boundary_1(const SimplicialComplex& x);

// Edge-triangle incidence: the column of triangle [i,j,k] is +1 at [i,j] and
// [j,k], -1 at [i,k].
Eigen::SparseMatrix<int> boundary_2(const SimplicialComplex& x);

// Random complex for tests and fixtures: triangles sampled among node triples,
// plus extra edges; closure fills in the rest. Deterministic given seed.
SimplicialComplex random_complex(int n_nodes, int n_triangles, int n_extra_edges,
                                 std::uint64_t seed);

} // namespace hodgelets

#endif
