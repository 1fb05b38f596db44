#include "hodgelets/hexgrid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace hodgelets {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935274463415059;

struct Axial {
    int q = 0, r = 0;
    bool operator<(const Axial& o) const { return r != o.r ? r < o.r : q < o.q; }
};

// lattice anchored at the lower-left corner so clipped patches are not forced
// to be point-symmetric
std::array<double, 2> axial_center(const Rect& b, double R, const Axial& a) {
    return {b.xmin + kSqrt3 * R * (a.q + 0.5 * a.r), b.ymin + 1.5 * R * a.r};
}

std::vector<Axial> cells_inside(const Rect& b, double R) {
    const double w = b.xmax - b.xmin, h = b.ymax - b.ymin;
    const int qmax = static_cast<int>(std::ceil(w / (kSqrt3 * R))) + 2;
    const int rmax = static_cast<int>(std::ceil(h / (1.5 * R))) + 2;
    std::vector<Axial> cells;
    for (int r = -1; r <= rmax; ++r) {
        for (int q = -qmax - rmax; q <= qmax + rmax; ++q) {
            auto c = axial_center(b, R, Axial{q, r});
            if (c[0] > b.xmin && c[0] < b.xmax && c[1] > b.ymin && c[1] < b.ymax)
                cells.push_back(Axial{q, r});
        }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

} // namespace

HexComplex hex_complex(const Rect& bounds, double circumradius) {
    if (circumradius <= 0.0) throw std::invalid_argument("hex_complex: circumradius must be positive");
    if (bounds.xmax <= bounds.xmin || bounds.ymax <= bounds.ymin)
        throw std::invalid_argument("hex_complex: empty bounds");

    std::vector<Axial> cells = cells_inside(bounds, circumradius);
    if (cells.size() < 2) throw std::invalid_argument("hex_complex: no hexagons fit in bounds");

    std::map<Axial, int> id; // 1-based node id per lattice cell
    for (std::size_t i = 0; i < cells.size(); ++i) id[cells[i]] = static_cast<int>(i) + 1;

    std::vector<std::vector<int>> edges;
    std::vector<std::vector<int>> tris;
    const std::array<Axial, 3> half_dirs{Axial{1, 0}, Axial{0, 1}, Axial{-1, 1}};
    for (const Axial& c : cells) {
        for (const Axial& d : half_dirs) {
            auto it = id.find(Axial{c.q + d.q, c.r + d.r});
            if (it != id.end()) edges.push_back({id[c], it->second});
        }
        // both corner-sharing triples touching c from the right
        auto right = id.find(Axial{c.q + 1, c.r});
        auto up = id.find(Axial{c.q, c.r + 1});
        auto downright = id.find(Axial{c.q + 1, c.r - 1});
        if (right != id.end() && up != id.end())
            tris.push_back({id[c], right->second, up->second});
        if (right != id.end() && downright != id.end())
            tris.push_back({id[c], right->second, downright->second});
    }

    HexComplex out;
    out.complex = from_simplices(static_cast<int>(cells.size()), edges, tris);
    out.geometry.positions.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        out.geometry.positions[i] = axial_center(bounds, circumradius, cells[i]);

    out.meta.circumradius = circumradius;
    out.meta.midpoints.resize(static_cast<std::size_t>(out.complex.n1()));
    out.meta.lengths.resize(static_cast<std::size_t>(out.complex.n1()));
    out.meta.normals.resize(static_cast<std::size_t>(out.complex.n1()));
    for (int e = 0; e < out.complex.n1(); ++e) {
        const Edge& ed = out.complex.edges[static_cast<std::size_t>(e)];
        const auto& pi = out.geometry.positions[static_cast<std::size_t>(ed[0] - 1)];
        const auto& pj = out.geometry.positions[static_cast<std::size_t>(ed[1] - 1)];
        const double dx = pj[0] - pi[0], dy = pj[1] - pi[1];
        const double len = std::sqrt(dx * dx + dy * dy);
        out.meta.midpoints[static_cast<std::size_t>(e)] = {0.5 * (pi[0] + pj[0]),
                                                           0.5 * (pi[1] + pj[1])};
        // a regular hexagon's side equals its circumradius
        out.meta.lengths[static_cast<std::size_t>(e)] = circumradius;
        out.meta.normals[static_cast<std::size_t>(e)] = {dx / len, dy / len};
    }
    return out;
}

HexComplex hex_complex_target_nodes(const Rect& bounds, int target_nodes) {
    if (target_nodes < 2) throw std::invalid_argument("hex_complex: target below 2 nodes");
    const double area = (bounds.xmax - bounds.xmin) * (bounds.ymax - bounds.ymin);
    const double r_guess = std::sqrt(area / (1.5 * kSqrt3 * target_nodes));

    double best_r = 0.0;
    long best_err = -1;
    const int steps = 600;
    for (int k = 0; k <= steps; ++k) {
        // geometric sweep from 1.6x down to 0.5x of the areal estimate
        double r = 1.6 * r_guess * std::pow(0.5 / 1.6, static_cast<double>(k) / steps);
        long count = static_cast<long>(cells_inside(bounds, r).size());
        long err = std::labs(count - target_nodes);
        if (best_err < 0 || err < best_err) { best_err = err; best_r = r; }
    }
    return hex_complex(bounds, best_r);
}

} // namespace hodgelets
