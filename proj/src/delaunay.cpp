#include "hodgelets/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace hodgelets {

namespace {

using Point = std::array<double, 2>;

double orient2d(const Point& a, const Point& b, const Point& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// Positive when p lies strictly inside the circumcircle of the CCW triangle
// (a, b, c); scales as length^4.
double incircle(const Point& a, const Point& b, const Point& c, const Point& p) {
    const double ax = a[0] - p[0], ay = a[1] - p[1];
    const double bx = b[0] - p[0], by = b[1] - p[1];
    const double cx = c[0] - p[0], cy = c[1] - p[1];
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

struct Tri {
    std::array<int, 3> v; // indices into the working point list, CCW
};

using DirEdge = std::array<int, 2>;

Point circumcenter(const Point& a, const Point& b, const Point& c, bool& ok) {
    const double d = 2.0 * orient2d(a, b, c);
    if (std::abs(d) < 1e-30) { ok = false; return {0.0, 0.0}; }
    const double a2 = a[0] * a[0] + a[1] * a[1];
    const double b2 = b[0] * b[0] + b[1] * b[1];
    const double c2 = c[0] * c[0] + c[1] * c[1];
    ok = true;
    return {(a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d,
            (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d};
}

} // namespace

DelaunayResult delaunay(const std::vector<std::array<double, 2>>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw std::invalid_argument("delaunay: need at least 3 points");

    double xmin = points[0][0], xmax = xmin, ymin = points[0][1], ymax = ymin;
    for (const Point& p : points) {
        xmin = std::min(xmin, p[0]); xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]); ymax = std::max(ymax, p[1]);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1.0});
    const double area_tol = 1e-12 * span * span;

    bool collinear = true;
    for (int i = 2; i < n && collinear; ++i)
        if (std::abs(orient2d(points[0], points[1], points[static_cast<std::size_t>(i)])) > area_tol)
            collinear = false;
    // points[0], points[1] may coincide; fall back to an exhaustive probe
    if (collinear) {
        for (int i = 0; i < n && collinear; ++i)
            for (int j = i + 1; j < n && collinear; ++j)
                for (int k = j + 1; k < n && collinear; ++k)
                    if (std::abs(orient2d(points[static_cast<std::size_t>(i)],
                                          points[static_cast<std::size_t>(j)],
                                          points[static_cast<std::size_t>(k)])) > area_tol)
                        collinear = false;
        if (collinear) throw std::invalid_argument("delaunay: points are collinear");
    }

    // working point list: inputs plus a super-triangle
    std::vector<Point> pts(points.begin(), points.end());
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    pts.push_back({cx - 40.0 * span, cy - 20.0 * span});
    pts.push_back({cx + 40.0 * span, cy - 20.0 * span});
    pts.push_back({cx, cy + 40.0 * span});
    const int s0 = n, s1 = n + 1, s2 = n + 2;

    const double incircle_tol = 1e-12 * span * span * span * span;

    std::vector<Tri> tris;
    tris.push_back(Tri{{s0, s1, s2}});

    for (int ip = 0; ip < n; ++ip) {
        const Point& p = pts[static_cast<std::size_t>(ip)];
        std::vector<std::size_t> bad;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto& v = tris[t].v;
            if (incircle(pts[static_cast<std::size_t>(v[0])], pts[static_cast<std::size_t>(v[1])],
                         pts[static_cast<std::size_t>(v[2])], p) > incircle_tol)
                bad.push_back(t);
        }
        // boundary of the cavity: directed edges appearing exactly once
        std::map<DirEdge, int> edge_count;
        for (std::size_t t : bad) {
            const auto& v = tris[t].v;
            for (int e = 0; e < 3; ++e) {
                int a = v[static_cast<std::size_t>(e)], b = v[static_cast<std::size_t>((e + 1) % 3)];
                DirEdge key{std::min(a, b), std::max(a, b)};
                ++edge_count[key];
            }
        }
        std::vector<DirEdge> boundary;
        for (std::size_t t : bad) {
            const auto& v = tris[t].v;
            for (int e = 0; e < 3; ++e) {
                int a = v[static_cast<std::size_t>(e)], b = v[static_cast<std::size_t>((e + 1) % 3)];
                if (edge_count[DirEdge{std::min(a, b), std::max(a, b)}] == 1)
                    boundary.push_back(DirEdge{a, b}); // keep CCW direction
            }
        }
        for (auto it = bad.rbegin(); it != bad.rend(); ++it)
            tris.erase(tris.begin() + static_cast<std::ptrdiff_t>(*it));
        for (const DirEdge& e : boundary) {
            Tri t{{e[0], e[1], ip}};
            if (orient2d(pts[static_cast<std::size_t>(t.v[0])], pts[static_cast<std::size_t>(t.v[1])],
                         pts[static_cast<std::size_t>(t.v[2])]) < 0.0)
                std::swap(t.v[1], t.v[2]);
            tris.push_back(t);
        }
    }

    tris.erase(std::remove_if(tris.begin(), tris.end(),
                              [&](const Tri& t) {
                                  return t.v[0] >= n || t.v[1] >= n || t.v[2] >= n;
                              }),
               tris.end());
    if (tris.empty()) throw std::invalid_argument("delaunay: triangulation is empty");

    // canonicalise co-circular quads: flip to the lexicographically smaller
    // diagonal wherever both diagonals are Delaunay-valid
    bool flipped = true;
    int guard = 0;
    while (flipped && guard++ < 100) {
        flipped = false;
        std::map<Edge, std::vector<std::size_t>> by_edge;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto& v = tris[t].v;
            by_edge[Edge{std::min(v[0], v[1]), std::max(v[0], v[1])}].push_back(t);
            by_edge[Edge{std::min(v[1], v[2]), std::max(v[1], v[2])}].push_back(t);
            by_edge[Edge{std::min(v[0], v[2]), std::max(v[0], v[2])}].push_back(t);
        }
        for (const auto& [edge, owners] : by_edge) {
            if (owners.size() != 2) continue;
            Tri& t1 = tris[owners[0]];
            Tri& t2 = tris[owners[1]];
            auto opposite = [&](const Tri& t) {
                for (int vv : t.v)
                    if (vv != edge[0] && vv != edge[1]) return vv;
                return -1;
            };
            int a = opposite(t1), d = opposite(t2);
            if (a < 0 || d < 0) continue;
            double det = incircle(pts[static_cast<std::size_t>(t1.v[0])],
                                  pts[static_cast<std::size_t>(t1.v[1])],
                                  pts[static_cast<std::size_t>(t1.v[2])],
                                  pts[static_cast<std::size_t>(d)]);
            if (std::abs(det) > incircle_tol) continue; // not co-circular
            Edge alt{std::min(a, d), std::max(a, d)};
            if (alt >= edge) continue;
            const Point& pa = pts[static_cast<std::size_t>(a)];
            const Point& pd = pts[static_cast<std::size_t>(d)];
            const Point& pb = pts[static_cast<std::size_t>(edge[0])];
            const Point& pc = pts[static_cast<std::size_t>(edge[1])];
            double o1 = orient2d(pa, pb, pd), o2 = orient2d(pa, pd, pc);
            if (o1 * o2 <= 0.0 || std::abs(o1) < area_tol || std::abs(o2) < area_tol)
                continue; // quad not strictly convex
            t1.v = {a, edge[0], d};
            t2.v = {a, d, edge[1]};
            if (orient2d(pts[static_cast<std::size_t>(t1.v[0])], pts[static_cast<std::size_t>(t1.v[1])],
                         pts[static_cast<std::size_t>(t1.v[2])]) < 0.0)
                std::swap(t1.v[1], t1.v[2]);
            if (orient2d(pts[static_cast<std::size_t>(t2.v[0])], pts[static_cast<std::size_t>(t2.v[1])],
                         pts[static_cast<std::size_t>(t2.v[2])]) < 0.0)
                std::swap(t2.v[1], t2.v[2]);
            flipped = true;
            break; // edge map is stale after a flip
        }
    }

    std::vector<std::vector<int>> tri_list;
    for (const Tri& t : tris)
        tri_list.push_back({t.v[0] + 1, t.v[1] + 1, t.v[2] + 1});

    DelaunayResult out;
    out.complex = from_simplices(n, {}, tri_list);
    out.geometry.positions = points;
    return out;
}

PunchResult punch_hole(const SimplicialComplex& x, std::array<double, 2> center,
                       double radius, const Geometry& geom) {
    if (static_cast<int>(geom.positions.size()) != x.n0())
        throw std::invalid_argument("punch_hole: geometry does not match complex");

    std::vector<int> tri_count(static_cast<std::size_t>(x.n1()), 0);
    for (const Triangle& t : x.triangles) {
        ++tri_count[static_cast<std::size_t>(x.edge_column(t[0], t[1]))];
        ++tri_count[static_cast<std::size_t>(x.edge_column(t[1], t[2]))];
        ++tri_count[static_cast<std::size_t>(x.edge_column(t[0], t[2]))];
    }

    std::vector<bool> tri_kept(x.triangles.size(), true);
    std::vector<int> surviving(static_cast<std::size_t>(x.n1()), 0);
    for (std::size_t t = 0; t < x.triangles.size(); ++t) {
        const Triangle& tri = x.triangles[t];
        bool ok = false;
        Point cc = circumcenter({geom.x(tri[0]), geom.y(tri[0])},
                                {geom.x(tri[1]), geom.y(tri[1])},
                                {geom.x(tri[2]), geom.y(tri[2])}, ok);
        if (ok) {
            double dx = cc[0] - center[0], dy = cc[1] - center[1];
            if (std::sqrt(dx * dx + dy * dy) <= radius) tri_kept[t] = false;
        }
        if (tri_kept[t]) {
            ++surviving[static_cast<std::size_t>(x.edge_column(tri[0], tri[1]))];
            ++surviving[static_cast<std::size_t>(x.edge_column(tri[1], tri[2]))];
            ++surviving[static_cast<std::size_t>(x.edge_column(tri[0], tri[2]))];
        }
    }

    // interior edges (two triangles originally) vanish with their triangles;
    // boundary and free edges stay
    std::vector<bool> edge_kept(static_cast<std::size_t>(x.n1()));
    for (int e = 0; e < x.n1(); ++e)
        edge_kept[static_cast<std::size_t>(e)] =
            surviving[static_cast<std::size_t>(e)] > 0 || tri_count[static_cast<std::size_t>(e)] <= 1;

    std::vector<bool> node_kept(static_cast<std::size_t>(x.n0()), false);
    for (int e = 0; e < x.n1(); ++e) {
        if (!edge_kept[static_cast<std::size_t>(e)]) continue;
        node_kept[static_cast<std::size_t>(x.edges[static_cast<std::size_t>(e)][0] - 1)] = true;
        node_kept[static_cast<std::size_t>(x.edges[static_cast<std::size_t>(e)][1] - 1)] = true;
    }

    PunchResult out;
    std::vector<int> new_id(static_cast<std::size_t>(x.n0()), 0);
    for (int v = 1; v <= x.n0(); ++v) {
        if (!node_kept[static_cast<std::size_t>(v - 1)]) continue;
        out.kept_nodes.push_back(v);
        new_id[static_cast<std::size_t>(v - 1)] = static_cast<int>(out.kept_nodes.size());
        out.geometry.positions.push_back(geom.positions[static_cast<std::size_t>(v - 1)]);
    }

    std::vector<std::vector<int>> edges;
    for (int e = 0; e < x.n1(); ++e) {
        if (!edge_kept[static_cast<std::size_t>(e)]) continue;
        const Edge& ed = x.edges[static_cast<std::size_t>(e)];
        edges.push_back({new_id[static_cast<std::size_t>(ed[0] - 1)],
                         new_id[static_cast<std::size_t>(ed[1] - 1)]});
    }
    std::vector<std::vector<int>> tris;
    for (std::size_t t = 0; t < x.triangles.size(); ++t) {
        if (!tri_kept[t]) continue;
        const Triangle& tri = x.triangles[t];
        tris.push_back({new_id[static_cast<std::size_t>(tri[0] - 1)],
                        new_id[static_cast<std::size_t>(tri[1] - 1)],
                        new_id[static_cast<std::size_t>(tri[2] - 1)]});
    }
    out.complex = from_simplices(static_cast<int>(out.kept_nodes.size()), edges, tris);

    // the hole must not sever the 1-skeleton
    if (out.complex.n0() > 0) {
        auto adj = out.complex.adjacency();
        std::vector<bool> seen(static_cast<std::size_t>(out.complex.n0()), false);
        std::deque<int> queue{1};
        seen[0] = true;
        int reached = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : adj[static_cast<std::size_t>(v - 1)]) {
                if (!seen[static_cast<std::size_t>(u - 1)]) {
                    seen[static_cast<std::size_t>(u - 1)] = true;
                    ++reached;
                    queue.push_back(u);
                }
            }
        }
        if (reached != out.complex.n0())
            throw std::invalid_argument("punch_hole: removal disconnects the edge set");
    }
    return out;
}

} // namespace hodgelets
