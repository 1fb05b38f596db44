#ifndef HODGELETS_DELAUNAY_HPP
#define HODGELETS_DELAUNAY_HPP

#include "hodgelets/complex.hpp"

#include <array>
#include <vector>

namespace hodgelets {

struct DelaunayResult {
    SimplicialComplex complex;
    Geometry geometry;
};

// Bowyer-Watson triangulation of planar points. Node ids follow input order.
// Co-circular quads are canonicalised to the lexicographically smaller
// diagonal so the output is deterministic. Throws std::invalid_argument for
// fewer than 3 points or collinear input.
DelaunayResult delaunay(const std::vector<std::array<double, 2>>& points);

struct PunchResult {
    SimplicialComplex complex;
    Geometry geometry;
    std::vector<int> kept_nodes; // original 1-based ids, ascending
};

// Removes every triangle whose circumcenter lies within `radius` of `center`,
// drops interior edges left with no triangle, and drops nodes left isolated;
// boundary edges (at most one triangle originally) always survive. Nodes are
// renumbered compactly. Throws std::invalid_argument if the remaining edge
// set is disconnected.
PunchResult punch_hole(const SimplicialComplex& x, std::array<double, 2> center,
                       double radius, const Geometry& geom);

} // namespace hodgelets

#endif
