#ifndef HODGELETS_HEXGRID_HPP
#define HODGELETS_HEXGRID_HPP

#include "hodgelets/complex.hpp"

#include <array>

namespace hodgelets {

struct Rect {
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
};

// Per-edge data of a hexagonal dual complex: the shared side's midpoint and
// length, and the unit normal oriented from the lower-indexed to the
// higher-indexed hexagon. Aligned with the complex's edge order.
struct HexMeta {
    double circumradius = 0.0;
    std::vector<std::array<double, 2>> midpoints;
    std::vector<double> lengths;
    std::vector<std::array<double, 2>> normals;
};

struct HexComplex {
    SimplicialComplex complex;
    Geometry geometry;
    HexMeta meta;
};

// Hexagonal discretization of a rectangle: pointy-top hexagons on an axial
// lattice centered on the bounds. Nodes are hexagon centers strictly inside
// the bounds, edges join side-sharing hexagons, triangles are corner-sharing
// triples. Throws std::invalid_argument when fewer than two hexagons fit.
HexComplex hex_complex(const Rect& bounds, double circumradius);

// Picks the circumradius whose node count lands closest to `target_nodes`
// (deterministic scan, larger radius wins ties).
HexComplex hex_complex_target_nodes(const Rect& bounds, int target_nodes);

} // namespace hodgelets

#endif
