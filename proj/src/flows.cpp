#include "hodgelets/flows.hpp"

#include "hodgelets/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hodgelets {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// BFS distances over the 1-skeleton from `source` (1-based); -1 marks
// unreachable nodes.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int source) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source - 1)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : adj[static_cast<std::size_t>(v - 1)]) {
            if (dist[static_cast<std::size_t>(u - 1)] < 0) {
                dist[static_cast<std::size_t>(u - 1)] = dist[static_cast<std::size_t>(v - 1)] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

// Lexicographically smallest shortest path from a to b: walk distances to b
// downhill, always taking the smallest admissible neighbour.
std::vector<int> shortest_path(const std::vector<std::vector<int>>& adj, int a, int b) {
    std::vector<int> dist = bfs_distances(adj, b);
    if (dist[static_cast<std::size_t>(a - 1)] < 0)
        throw std::invalid_argument("lift_trajectory: snapped nodes are disconnected in the 1-skeleton");
    std::vector<int> path{a};
    int cur = a;
    while (cur != b) {
        for (int u : adj[static_cast<std::size_t>(cur - 1)]) { // neighbours sorted ascending
            if (dist[static_cast<std::size_t>(u - 1)] ==
                dist[static_cast<std::size_t>(cur - 1)] - 1) {
                cur = u;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

int nearest_node(const Geometry& geom, double x, double y) {
    int best = 1;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < geom.positions.size(); ++i) {
        double dx = geom.positions[i][0] - x, dy = geom.positions[i][1] - y;
        double d = dx * dx + dy * dy;
        if (d < best_d) { best_d = d; best = static_cast<int>(i) + 1; }
    }
    return best;
}

void add_path(Cochain& flow, const SimplicialComplex& x, const std::vector<int>& path) {
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        int u = path[s], v = path[s + 1];
        int col = x.edge_column(u, v);
        flow.values[col] += u < v ? 1.0 : -1.0;
    }
}

// Parses epoch seconds or ISO-8601 (YYYY-MM-DD[T ]HH:MM:SS[.fff][Z]).
bool parse_time(const std::string& text, double& out) {
    char* end = nullptr;
    double plain = std::strtod(text.c_str(), &end);
    if (end && *end == '\0' && end != text.c_str()) { out = plain; return true; }

    int year = 0, month = 0, day = 0, hour = 0, minute = 0;
    double second = 0.0;
    char sep = 0;
    int got = std::sscanf(text.c_str(), "%d-%d-%d%c%d:%d:%lf", &year, &month, &day, &sep,
                          &hour, &minute, &second);
    if (got < 3 || month < 1 || month > 12 || day < 1 || day > 31) return false;
    if (got >= 4 && sep != 'T' && sep != ' ') return false;

    // days since 1970-01-01 (civil-from-days inverse)
    int y = year - (month <= 2 ? 1 : 0);
    int era = (y >= 0 ? y : y - 399) / 400;
    unsigned yoe = static_cast<unsigned>(y - era * 400);
    unsigned doy = static_cast<unsigned>((153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1);
    unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    long days = static_cast<long>(era) * 146097 + static_cast<long>(doe) - 719468;
    out = static_cast<double>(days) * 86400.0 + hour * 3600.0 + minute * 60.0 + second;
    return true;
}

} // namespace

VectorField two_ball_field() {
    VectorField f;
    f.eval = [](double x, double y) -> std::array<double, 2> {
        const double r = 0.7;
        const double c = kPi / 4.0;
        const double d1 = (x - c) * (x - c) + (y - c) * (y - c);
        const double d2 = (x + c) * (x + c) + (y + c) * (y + c);
        if (d1 <= r * r || d2 <= r * r) return {std::cos(x + y), std::sin(x - y)};
        return {0.0, 0.0};
    };
    return f;
}

Cochain discretize_field(const VectorField& field, const SimplicialComplex& x,
                         const Geometry& geom, const HexMeta& meta) {
    if (static_cast<int>(meta.midpoints.size()) != x.n1())
        throw std::invalid_argument("discretize_field: hex metadata does not match complex");
    (void)geom;
    Cochain flow = Cochain::zero(1, x.n1());
    for (int e = 0; e < x.n1(); ++e) {
        const auto& mid = meta.midpoints[static_cast<std::size_t>(e)];
        const auto& nrm = meta.normals[static_cast<std::size_t>(e)];
        auto value = field.eval(mid[0], mid[1]);
        flow.values[e] = (value[0] * nrm[0] + value[1] * nrm[1]) *
                         meta.lengths[static_cast<std::size_t>(e)];
    }
    return flow;
}

TrajectoryParse parse_trajectories(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("parse_trajectories: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "id,time,lat,lon")
        throw std::invalid_argument("parse_trajectories: expected header 'id,time,lat,lon'");

    struct Sample {
        double t, lat, lon;
    };
    std::map<std::string, std::vector<Sample>> by_id;
    int skipped = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string id, time_s, lat_s, lon_s;
        if (!std::getline(row, id, ',') || !std::getline(row, time_s, ',') ||
            !std::getline(row, lat_s, ',') || !std::getline(row, lon_s, ',')) {
            ++skipped;
            continue;
        }
        double t = 0.0;
        char* e1 = nullptr;
        char* e2 = nullptr;
        double lat = std::strtod(lat_s.c_str(), &e1);
        double lon = std::strtod(lon_s.c_str(), &e2);
        if (id.empty() || !parse_time(time_s, t) || e1 == lat_s.c_str() || e2 == lon_s.c_str()) {
            ++skipped;
            continue;
        }
        by_id[id].push_back(Sample{t, lat, lon});
    }
    if (by_id.empty()) throw std::invalid_argument("parse_trajectories: no valid rows");

    TrajectoryParse out;
    out.skipped_rows = skipped;
    for (auto& [id, samples] : by_id) {
        std::stable_sort(samples.begin(), samples.end(),
                         [](const Sample& a, const Sample& b) { return a.t < b.t; });
        Trajectory traj;
        traj.id = id;
        for (const Sample& s : samples) traj.samples.push_back({s.t, s.lat, s.lon});
        out.trajectories.push_back(std::move(traj));
    }
    return out;
}

std::array<double, 2> project_equirectangular(std::vector<Trajectory>& trajectories) {
    double lat0 = 0.0, lon0 = 0.0;
    long count = 0;
    for (const Trajectory& t : trajectories) {
        for (const auto& s : t.samples) { lat0 += s[1]; lon0 += s[2]; ++count; }
    }
    if (count == 0) throw std::invalid_argument("project_equirectangular: no samples");
    lat0 /= static_cast<double>(count);
    lon0 /= static_cast<double>(count);
    const double scale = std::cos(lat0 * kPi / 180.0);
    for (Trajectory& t : trajectories) {
        for (auto& s : t.samples) {
            double lat = s[1], lon = s[2];
            s[1] = (lon - lon0) * scale; // x
            s[2] = lat - lat0;           // y
        }
    }
    return {lat0, lon0};
}

Cochain lift_trajectory(const Trajectory& traj, const SimplicialComplex& x,
                        const Geometry& geom) {
    std::vector<int> snapped;
    if (!traj.nodes.empty()) {
        snapped = traj.nodes;
    } else {
        for (const auto& s : traj.samples) snapped.push_back(nearest_node(geom, s[1], s[2]));
    }
    snapped.erase(std::unique(snapped.begin(), snapped.end()), snapped.end());

    Cochain flow = Cochain::zero(1, x.n1());
    if (snapped.size() < 2) return flow;
    auto adj = x.adjacency();
    for (std::size_t s = 0; s + 1 < snapped.size(); ++s) {
        if (x.has_edge(snapped[s], snapped[s + 1])) {
            add_path(flow, x, {snapped[s], snapped[s + 1]});
        } else {
            add_path(flow, x, shortest_path(adj, snapped[s], snapped[s + 1]));
        }
    }
    return flow;
}

std::vector<Trajectory> synthetic_trajectories(
    const SimplicialComplex& x, const Geometry& geom,
    const std::vector<std::pair<Disc, Disc>>& classes, int count_per_class,
    double noise, std::uint64_t seed) {
    if (noise < 0.0 || noise > 1.0)
        throw std::invalid_argument("synthetic_trajectories: noise must be in [0, 1]");

    auto region_nodes = [&](const Disc& disc) {
        std::vector<int> nodes;
        for (int v = 1; v <= x.n0(); ++v) {
            double dx = geom.x(v) - disc.cx, dy = geom.y(v) - disc.cy;
            if (std::sqrt(dx * dx + dy * dy) <= disc.radius) nodes.push_back(v);
        }
        if (nodes.empty())
            throw std::invalid_argument("synthetic_trajectories: region contains no nodes");
        return nodes;
    };

    auto adj = x.adjacency();
    Rng rng(seed);
    std::vector<Trajectory> out;
    const int step_cap = 6 * x.n0();

    for (std::size_t cls = 0; cls < classes.size(); ++cls) {
        std::vector<int> starts = region_nodes(classes[cls].first);
        std::vector<int> ends = region_nodes(classes[cls].second);
        for (int c = 0; c < count_per_class; ++c) {
            int start = starts[rng.uniform_index(starts.size())];
            int target = ends[rng.uniform_index(ends.size())];
            std::vector<int> dist = bfs_distances(adj, target);
            if (dist[static_cast<std::size_t>(start - 1)] < 0)
                throw std::invalid_argument("synthetic_trajectories: regions are unreachable");

            Trajectory traj;
            traj.id = "class" + std::to_string(cls) + "_" + std::to_string(c);
            traj.label = static_cast<int>(cls);
            int cur = start;
            traj.nodes.push_back(cur);
            for (int step = 0; cur != target && step < step_cap; ++step) {
                const auto& nbrs = adj[static_cast<std::size_t>(cur - 1)];
                if (nbrs.empty()) break;
                int next = cur;
                if (rng.uniform() >= noise) {
                    int best_d = std::numeric_limits<int>::max();
                    for (int u : nbrs) {
                        int d = dist[static_cast<std::size_t>(u - 1)];
                        if (d >= 0 && d < best_d) { best_d = d; next = u; }
                    }
                } else {
                    next = nbrs[rng.uniform_index(nbrs.size())];
                }
                traj.nodes.push_back(next);
                cur = next;
            }
            out.push_back(std::move(traj));
        }
    }
    return out;
}

} // namespace hodgelets
