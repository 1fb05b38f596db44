#ifndef HODGELETS_FLOWS_HPP
#define HODGELETS_FLOWS_HPP

#include "hodgelets/complex.hpp"
#include "hodgelets/hexgrid.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hodgelets {

// Planar vector field, evaluated pointwise.
struct VectorField {
    std::function<std::array<double, 2>(double, double)> eval;
};

// F(x,y) = [cos(x+y), sin(x-y)] inside two closed balls of radius 0.7
// centered at (pi/4, pi/4) and (-pi/4, -pi/4), zero outside.
VectorField two_ball_field();

// A buoy-style track: either raw time-stamped samples (planar after
// projection) or an explicit node path on a complex.
struct Trajectory {
    std::string id;
    std::vector<std::array<double, 3>> samples; // (time, x, y)
    std::vector<int> nodes;                     // pre-snapped node path
    int label = -1;                             // class id for synthetic sets
};

// Flux of the field through each shared hexagon side, one midpoint evaluation
// per edge: f_e = (F(midpoint) . normal) * side_length.
Cochain discretize_field(const VectorField& field, const SimplicialComplex& x,
                         const Geometry& geom, const HexMeta& meta);

struct TrajectoryParse {
    std::vector<Trajectory> trajectories; // sorted by id, samples time-sorted
    int skipped_rows = 0;
};

// CSV with header id,time,lat,lon; time is ISO-8601 or epoch seconds. Rows
// with missing fields are skipped and counted. Samples come back as
// (time, lat, lon); call project_equirectangular before lifting.
TrajectoryParse parse_trajectories(std::istream& in);

// Equirectangular projection about the centroid of all samples, in place:
// x = (lon - lon0) * cos(lat0), y = lat - lat0, in degrees. Returns
// (lat0, lon0).
std::array<double, 2> project_equirectangular(std::vector<Trajectory>& trajectories);

// Snaps samples to nearest nodes (ties to the lowest index), connects
// consecutive distinct nodes by BFS shortest paths (ties to the
// lexicographically smallest node sequence) and accumulates +-1 per traversed
// edge. A pre-snapped node path skips the snapping step.
Cochain lift_trajectory(const Trajectory& traj, const SimplicialComplex& x,
                        const Geometry& geom);

// Disc-shaped node region in geometry units.
struct Disc {
    double cx = 0.0, cy = 0.0, radius = 0.0;
};

// Random walks from a start region biased toward an end region: each step
// follows the BFS-distance descent with probability 1-noise, otherwise moves
// to a uniform neighbour. One class per (start, end) pair; labels index the
// class list. Deterministic given seed.
std::vector<Trajectory> synthetic_trajectories(
    const SimplicialComplex& x, const Geometry& geom,
    const std::vector<std::pair<Disc, Disc>>& classes, int count_per_class,
    double noise, std::uint64_t seed);

} // namespace hodgelets

#endif
