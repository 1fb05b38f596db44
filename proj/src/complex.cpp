#include "hodgelets/complex.hpp"

#include "hodgelets/rng.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace hodgelets {

bool SimplicialComplex::has_edge(int i, int j) const {
    return edge_column(i, j) >= 0;
}

int SimplicialComplex::edge_column(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = edge_index.find(Edge{i, j});
    return it == edge_index.end() ? -1 : it->second;
}

std::vector<std::vector<int>> SimplicialComplex::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_nodes));
    for (const Edge& e : edges) {
        adj[static_cast<std::size_t>(e[0] - 1)].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1] - 1)].push_back(e[0]);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

namespace {

void check_vertices(const std::vector<int>& verts, int n_nodes, std::size_t arity) {
    if (verts.size() != arity)
        throw std::invalid_argument("simplex has wrong number of vertices");
    for (int v : verts) {
        if (v < 1 || v > n_nodes)
            throw std::invalid_argument("vertex index " + std::to_string(v) +
                                        " out of range [1, " + std::to_string(n_nodes) + "]");
    }
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (verts[a] == verts[b])
                throw std::invalid_argument("degenerate simplex (repeated vertex " +
                                            std::to_string(verts[a]) + ")");
}

} // namespace

SimplicialComplex from_simplices(int n_nodes,
                                 const std::vector<std::vector<int>>& edges,
                                 const std::vector<std::vector<int>>& triangles) {
    if (n_nodes < 0) throw std::invalid_argument("negative node count");

    std::set<Edge> edge_set;
    std::set<Triangle> tri_set;

    for (const auto& e : edges) {
        check_vertices(e, n_nodes, 2);
        Edge s{e[0], e[1]};
        std::sort(s.begin(), s.end());
        edge_set.insert(s);
    }
    for (const auto& t : triangles) {
        check_vertices(t, n_nodes, 3);
        Triangle s{t[0], t[1], t[2]};
        std::sort(s.begin(), s.end());
        tri_set.insert(s);
        // closure under restriction
        edge_set.insert(Edge{s[0], s[1]});
        edge_set.insert(Edge{s[0], s[2]});
        edge_set.insert(Edge{s[1], s[2]});
    }

    SimplicialComplex x;
    x.n_nodes = n_nodes;
    x.edges.assign(edge_set.begin(), edge_set.end());
    x.triangles.assign(tri_set.begin(), tri_set.end());
    for (int c = 0; c < x.n1(); ++c) x.edge_index[x.edges[static_cast<std::size_t>(c)]] = c;
    for (int c = 0; c < x.n2(); ++c) x.triangle_index[x.triangles[static_cast<std::size_t>(c)]] = c;
    return x;
}

Eigen::SparseMatrix<int> boundary_1(const SimplicialComplex& x) {
    std::vector<Eigen::Triplet<int>> trip;
    trip.reserve(static_cast<std::size_t>(2 * x.n1()));
    for (int c = 0; c < x.n1(); ++c) {
        const Edge& e = x.edges[static_cast<std::size_t>(c)];
        trip.emplace_back(e[0] - 1, c, -1);
        trip.emplace_back(e[1] - 1, c, +1);
    }
    Eigen::SparseMatrix<int> b1(x.n0(), x.n1());
    b1.setFromTriplets(trip.begin(), trip.end());
    return b1;
}

Eigen::SparseMatrix<int> boundary_2(const SimplicialComplex& x) {
    std::vector<Eigen::Triplet<int>> trip;
    trip.reserve(static_cast<std::size_t>(3 * x.n2()));
    for (int c = 0; c < x.n2(); ++c) {
        const Triangle& t = x.triangles[static_cast<std::size_t>(c)];
        int eij = x.edge_column(t[0], t[1]);
        int ejk = x.edge_column(t[1], t[2]);
        int eik = x.edge_column(t[0], t[2]);
        if (eij < 0 || ejk < 0 || eik < 0)
            throw std::invalid_argument("triangle face missing from complex");
        trip.emplace_back(eij, c, +1);
        trip.emplace_back(ejk, c, +1);
        trip.emplace_back(eik, c, -1);
    }
    Eigen::SparseMatrix<int> b2(x.n1(), x.n2());
    b2.setFromTriplets(trip.begin(), trip.end());
    return b2;
}

SimplicialComplex random_complex(int n_nodes, int n_triangles, int n_extra_edges,
                                 std::uint64_t seed) {
    if (n_nodes < 3) throw std::invalid_argument("random_complex needs >= 3 nodes");
    Rng rng(seed);
    std::vector<std::vector<int>> tris;
    std::vector<std::vector<int>> edges;
    for (int t = 0; t < n_triangles; ++t) {
        int a = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n_nodes))) + 1;
        int b = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n_nodes))) + 1;
        int c = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n_nodes))) + 1;
        if (a == b || b == c || a == c) { --t; continue; }
        tris.push_back({a, b, c});
    }
    for (int e = 0; e < n_extra_edges; ++e) {
        int a = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n_nodes))) + 1;
        int b = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n_nodes))) + 1;
        if (a == b) { --e; continue; }
        edges.push_back({a, b});
    }
    return from_simplices(n_nodes, edges, tris);
}

} // namespace hodgelets
