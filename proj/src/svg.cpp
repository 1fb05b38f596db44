#include "hodgelets/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hodgelets {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// white-blue-red ramp over t in [0, 1]
std::string color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    int r = static_cast<int>(40 + 182 * t);
    int g = static_cast<int>(90 - 60 * t);
    int b = static_cast<int>(180 - 140 * t);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

} // namespace

std::string render_flow_svg(const SimplicialComplex& x, const Geometry& geom,
                            const Cochain& flow, double canvas) {
    if (static_cast<int>(geom.positions.size()) != x.n0())
        throw std::invalid_argument("render_flow_svg: geometry does not match complex");
    if (flow.values.size() != x.n1())
        throw std::invalid_argument("render_flow_svg: flow does not match complex");

    double xmin = geom.positions[0][0], xmax = xmin;
    double ymin = geom.positions[0][1], ymax = ymin;
    for (const auto& p : geom.positions) {
        xmin = std::min(xmin, p[0]); xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]); ymax = std::max(ymax, p[1]);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double margin = 0.05 * span;
    const double scale = canvas / (span + 2.0 * margin);
    auto px = [&](double wx) { return (wx - xmin + margin) * scale; };
    auto py = [&](double wy) { return canvas - (wy - ymin + margin) * scale; }; // y up

    const double max_mag = flow.values.size() > 0 ? flow.values.cwiseAbs().maxCoeff() : 0.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(canvas)
        << "\" height=\"" << num(canvas) << "\" viewBox=\"0 0 " << num(canvas) << " "
        << num(canvas) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const Triangle& t : x.triangles) {
        svg << "<polygon points=\"";
        for (int v : t) svg << num(px(geom.x(v))) << "," << num(py(geom.y(v))) << " ";
        svg << "\" fill=\"#f2f2ef\" stroke=\"none\"/>\n";
    }

    for (int e = 0; e < x.n1(); ++e) {
        const Edge& ed = x.edges[static_cast<std::size_t>(e)];
        double x1 = px(geom.x(ed[0])), y1 = py(geom.y(ed[0]));
        double x2 = px(geom.x(ed[1])), y2 = py(geom.y(ed[1]));
        double value = flow.values[e];
        double t = max_mag > 0.0 ? std::abs(value) / max_mag : 0.0;
        svg << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
            << "\" y2=\"" << num(y2) << "\" stroke=\"" << color(t) << "\" stroke-width=\""
            << num(0.6 + 2.4 * t) << "\"/>\n";
        if (max_mag <= 0.0 || std::abs(value) < 1e-12 * max_mag) continue;

        // arrowhead at 2/3 along the traversal direction
        double dir = value >= 0.0 ? 1.0 : -1.0;
        double mx = x1 + (x2 - x1) * (dir > 0 ? 2.0 / 3.0 : 1.0 / 3.0);
        double my = y1 + (y2 - y1) * (dir > 0 ? 2.0 / 3.0 : 1.0 / 3.0);
        double len = std::hypot(x2 - x1, y2 - y1);
        if (len <= 0.0) continue;
        double ux = dir * (x2 - x1) / len, uy = dir * (y2 - y1) / len;
        double size = std::min(10.0, 0.25 * len) * (0.5 + 0.5 * t);
        double lx = mx - size * ux + 0.5 * size * uy, ly = my - size * uy - 0.5 * size * ux;
        double rx = mx - size * ux - 0.5 * size * uy, ry = my - size * uy + 0.5 * size * ux;
        svg << "<polygon points=\"" << num(mx) << "," << num(my) << " " << num(lx) << ","
            << num(ly) << " " << num(rx) << "," << num(ry) << "\" fill=\"" << color(t)
            << "\"/>\n";
    }

    for (const auto& p : geom.positions)
        svg << "<circle cx=\"" << num(px(p[0])) << "\" cy=\"" << num(py(p[1]))
            << "\" r=\"2.0\" fill=\"#444444\"/>\n";

    svg << "</svg>\n";
    return svg.str();
}

} // namespace hodgelets
