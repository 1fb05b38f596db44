#include "hodgelets/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hodgelets {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open for reading: " + path);
    return in;
}

std::string edge_key(const Edge& e) {
    return std::to_string(e[0]) + "-" + std::to_string(e[1]);
}

void expect_header(std::istream& in, const std::string& header, const std::string& path) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header)
        throw std::invalid_argument("expected header '" + header + "' in " + path);
}

} // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_complex_json(const SimplicialComplex& x, const std::string& path) {
    json doc;
    doc["n_nodes"] = x.n_nodes;
    doc["edges"] = json::array();
    for (const Edge& e : x.edges) doc["edges"].push_back({e[0], e[1]});
    doc["triangles"] = json::array();
    for (const Triangle& t : x.triangles) doc["triangles"].push_back({t[0], t[1], t[2]});
    open_out(path) << doc.dump(2) << "\n";
}

SimplicialComplex read_complex_json(const std::string& path) {
    json doc;
    try {
        open_in(path) >> doc;
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + err.what());
    }
    if (!doc.contains("n_nodes"))
        throw std::invalid_argument("complex file missing n_nodes: " + path);
    std::vector<std::vector<int>> edges, triangles;
    for (const auto& e : doc.value("edges", json::array()))
        edges.push_back(e.get<std::vector<int>>());
    for (const auto& t : doc.value("triangles", json::array()))
        triangles.push_back(t.get<std::vector<int>>());
    return from_simplices(doc["n_nodes"].get<int>(), edges, triangles);
}

void write_geometry_csv(const Geometry& geom, const std::string& path) {
    auto out = open_out(path);
    out << "node,x,y\n";
    for (std::size_t i = 0; i < geom.positions.size(); ++i)
        out << (i + 1) << "," << format_double(geom.positions[i][0]) << ","
            << format_double(geom.positions[i][1]) << "\n";
}

Geometry read_geometry_csv(const std::string& path) {
    auto in = open_in(path);
    expect_header(in, "node,x,y", path);
    Geometry geom;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string node, xs, ys;
        if (!std::getline(row, node, ',') || !std::getline(row, xs, ',') ||
            !std::getline(row, ys, ','))
            throw std::invalid_argument("malformed geometry row in " + path);
        geom.positions.push_back({std::stod(xs), std::stod(ys)});
    }
    return geom;
}

void write_spectrum_csv(const Eigen::VectorXd& eigenvalues, const std::string& path) {
    auto out = open_out(path);
    out << "index,eigenvalue\n";
    for (int i = 0; i < eigenvalues.size(); ++i)
        out << i << "," << format_double(eigenvalues[i]) << "\n";
}

void write_hexmeta_csv(const SimplicialComplex& x, const HexMeta& meta, const std::string& path) {
    auto out = open_out(path);
    out << "edge,midx,midy,length,nx,ny\n";
    for (int e = 0; e < x.n1(); ++e) {
        std::size_t i = static_cast<std::size_t>(e);
        out << edge_key(x.edges[i]) << "," << format_double(meta.midpoints[i][0]) << ","
            << format_double(meta.midpoints[i][1]) << "," << format_double(meta.lengths[i]) << ","
            << format_double(meta.normals[i][0]) << "," << format_double(meta.normals[i][1])
            << "\n";
    }
}

HexMeta read_hexmeta_csv(const SimplicialComplex& x, const std::string& path) {
    auto in = open_in(path);
    expect_header(in, "edge,midx,midy,length,nx,ny", path);
    HexMeta meta;
    meta.midpoints.resize(static_cast<std::size_t>(x.n1()));
    meta.lengths.resize(static_cast<std::size_t>(x.n1()));
    meta.normals.resize(static_cast<std::size_t>(x.n1()));
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string edge, midx, midy, length, nx, ny;
        if (!std::getline(row, edge, ',') || !std::getline(row, midx, ',') ||
            !std::getline(row, midy, ',') || !std::getline(row, length, ',') ||
            !std::getline(row, nx, ',') || !std::getline(row, ny, ','))
            throw std::invalid_argument("malformed hexmeta row in " + path);
        auto dash = edge.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("malformed edge key in " + path);
        int a = std::stoi(edge.substr(0, dash));
        int b = std::stoi(edge.substr(dash + 1));
        int col = x.edge_column(a, b);
        if (col < 0)
            throw std::invalid_argument("hexmeta edge " + edge + " not in complex");
        std::size_t i = static_cast<std::size_t>(col);
        meta.midpoints[i] = {std::stod(midx), std::stod(midy)};
        meta.lengths[i] = std::stod(length);
        meta.normals[i] = {std::stod(nx), std::stod(ny)};
        ++rows;
    }
    if (rows != x.n1())
        throw std::invalid_argument("hexmeta row count does not match complex in " + path);
    return meta;
}

void write_cochain_csv(const SimplicialComplex& x, const Cochain& flow, const std::string& path) {
    if (flow.values.size() != x.n1())
        throw std::invalid_argument("cochain length does not match complex");
    auto out = open_out(path);
    out << "edge,value\n";
    for (int e = 0; e < x.n1(); ++e)
        out << edge_key(x.edges[static_cast<std::size_t>(e)]) << ","
            << format_double(flow.values[e]) << "\n";
}

Cochain read_cochain_csv(const SimplicialComplex& x, const std::string& path) {
    auto in = open_in(path);
    expect_header(in, "edge,value", path);
    Cochain flow = Cochain::zero(1, x.n1());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string edge, value;
        if (!std::getline(row, edge, ',') || !std::getline(row, value, ','))
            throw std::invalid_argument("malformed cochain row in " + path);
        auto dash = edge.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("malformed edge key in " + path);
        int col = x.edge_column(std::stoi(edge.substr(0, dash)),
                                std::stoi(edge.substr(dash + 1)));
        if (col < 0) throw std::invalid_argument("cochain edge " + edge + " not in complex");
        flow.values[col] = std::stod(value);
    }
    return flow;
}

void write_coefficients_csv(const Dictionary& dict, const Eigen::VectorXd& coefficients,
                            const std::string& path) {
    if (coefficients.size() != dict.size())
        throw std::invalid_argument("coefficient count does not match dictionary");
    auto out = open_out(path);
    out << "part,m,j,coefficient\n";
    for (int k = 0; k < dict.size(); ++k) {
        const AtomLabel& label = dict.labels[static_cast<std::size_t>(k)];
        out << to_string(label.part) << "," << label.m << "," << label.j << ","
            << format_double(coefficients[k]) << "\n";
    }
}

void write_bank_json(const KernelBank& bank, const std::string& path) {
    if (bank.is_manual())
        throw std::invalid_argument("write_bank_json: manual banks are not serialisable");
    json doc;
    doc["m"] = bank.m_count;
    doc["r"] = bank.overlap;
    doc["lambda_floor"] = bank.lambda_floor;
    doc["lambda_max"] = bank.lambda_max;
    doc["width"] = bank.width;
    doc["c_star"] = bank.c_star;
    doc["includes_dc"] = bank.includes_dc;
    doc["centers"] = bank.centers;
    doc["normalization"] = {{"lambdas", bank.norm_lambdas}, {"scales", bank.norm_scales}};
    open_out(path) << doc.dump(2) << "\n";
}

KernelBank read_bank_json(const std::string& path) {
    json doc;
    try {
        open_in(path) >> doc;
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + err.what());
    }
    KernelBank bank;
    bank.m_count = doc.at("m").get<int>();
    bank.overlap = doc.at("r").get<int>();
    bank.lambda_floor = doc.at("lambda_floor").get<double>();
    bank.lambda_max = doc.at("lambda_max").get<double>();
    bank.width = doc.at("width").get<double>();
    bank.c_star = doc.at("c_star").get<double>();
    bank.includes_dc = doc.at("includes_dc").get<bool>();
    bank.centers = doc.at("centers").get<std::vector<double>>();
    bank.norm_lambdas = doc.at("normalization").at("lambdas").get<std::vector<double>>();
    bank.norm_scales = doc.at("normalization").at("scales").get<std::vector<double>>();
    return bank;
}

} // namespace hodgelets
