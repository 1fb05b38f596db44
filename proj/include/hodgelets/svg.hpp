#ifndef HODGELETS_SVG_HPP
#define HODGELETS_SVG_HPP

#include "hodgelets/complex.hpp"

#include <string>

namespace hodgelets {

// Renders an edge flow: triangles as light fills, edges as segments colored
// by |flow| with an arrowhead showing the traversal direction. Byte-stable
// output for identical inputs.
std::string render_flow_svg(const SimplicialComplex& x, const Geometry& geom,
                            const Cochain& flow, double canvas = 720.0);

} // namespace hodgelets

#endif
