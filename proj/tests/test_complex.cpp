#include "hodgelets/complex.hpp"
#include "hodgelets/delaunay.hpp"
#include "hodgelets/hexgrid.hpp"
#include "hodgelets/rng.hpp"
#include "hodgelets/spectral.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace hodgelets;

namespace {

SimplicialComplex filled_triangle() { return from_simplices(3, {}, {{1, 2, 3}}); }

bool is_zero(const Eigen::SparseMatrix<int>& m) {
    for (int k = 0; k < m.outerSize(); ++k)
        for (Eigen::SparseMatrix<int>::InnerIterator it(m, k); it; ++it)
            if (it.value() != 0) return false;
    return true;
}

} // namespace

TEST_CASE("from_simplices builds the filled triangle") {
    auto x = from_simplices(3, {{1, 2}, {2, 3}, {1, 3}}, {{1, 2, 3}});
    CHECK(x.n0() == 3);
    CHECK(x.n1() == 3);
    CHECK(x.n2() == 1);
}

TEST_CASE("closure adds the three faces of a bare triangle") {
    auto bare = from_simplices(3, {}, {{1, 2, 3}});
    auto full = from_simplices(3, {{1, 2}, {2, 3}, {1, 3}}, {{1, 2, 3}});
    CHECK(bare.edges == full.edges);
    CHECK(bare.triangles == full.triangles);
}

TEST_CASE("from_simplices validates input") {
    CHECK_THROWS_AS(from_simplices(2, {{1, 2}}, {{1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(from_simplices(3, {{1, 1}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(from_simplices(3, {}, {{1, 2, 2}}), std::invalid_argument);
}

TEST_CASE("boundary_1 on a single edge") {
    auto x = from_simplices(2, {{1, 2}}, {});
    Eigen::MatrixXi b1 = Eigen::MatrixXi(boundary_1(x));
    CHECK(b1(0, 0) == -1);
    CHECK(b1(1, 0) == 1);
}

TEST_CASE("boundary operators of the filled triangle") {
    auto x = filled_triangle();
    // edge order is lexicographic: [1,2], [1,3], [2,3]
    REQUIRE(x.edges == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});

    Eigen::MatrixXi b1 = Eigen::MatrixXi(boundary_1(x));
    Eigen::MatrixXi expected_b1(3, 3);
    expected_b1 << -1, -1, 0,
                    1,  0, -1,
                    0,  1,  1;
    CHECK(b1 == expected_b1);

    Eigen::MatrixXi b2 = Eigen::MatrixXi(boundary_2(x));
    Eigen::MatrixXi expected_b2(3, 1);
    expected_b2 << 1, -1, 1;
    CHECK(b2 == expected_b2);

    CHECK(is_zero(boundary_1(x) * boundary_2(x)));
}

TEST_CASE("complex with no triangles has an empty boundary_2") {
    auto x = from_simplices(3, {{1, 2}, {2, 3}}, {});
    auto b2 = boundary_2(x);
    CHECK(b2.rows() == 2);
    CHECK(b2.cols() == 0);
}

TEST_CASE("chain-complex identities hold on random complexes") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto x = random_complex(4 + static_cast<int>(seed % 14), 6, 4, seed);
        auto b1 = boundary_1(x);
        auto b2 = boundary_2(x);
        CHECK(is_zero(b1 * b2));

        // every boundary_1 column sums to zero, every boundary_2 column to +1
        Eigen::MatrixXi d1 = Eigen::MatrixXi(b1);
        for (int c = 0; c < d1.cols(); ++c) CHECK(d1.col(c).sum() == 0);
        Eigen::MatrixXi d2 = Eigen::MatrixXi(b2);
        for (int c = 0; c < d2.cols(); ++c) CHECK(d2.col(c).sum() == 1);

        // closure: all faces of all triangles present
        for (const Triangle& t : x.triangles) {
            CHECK(x.has_edge(t[0], t[1]));
            CHECK(x.has_edge(t[1], t[2]));
            CHECK(x.has_edge(t[0], t[2]));
        }
    }
}

TEST_CASE("delaunay of three points is one triangle") {
    auto res = delaunay({{0.0, 0.0}, {1.0, 0.0}, {0.3, 0.9}});
    CHECK(res.complex.n0() == 3);
    CHECK(res.complex.n1() == 3);
    CHECK(res.complex.n2() == 1);
}

TEST_CASE("delaunay of the unit square picks the lexicographic diagonal") {
    auto res = delaunay({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
    CHECK(res.complex.n0() == 4);
    CHECK(res.complex.n1() == 5);
    CHECK(res.complex.n2() == 2);
    CHECK(res.complex.has_edge(1, 3));
    CHECK_FALSE(res.complex.has_edge(2, 4));
}

TEST_CASE("delaunay rejects degenerate input") {
    CHECK_THROWS_AS(delaunay({{0.0, 0.0}, {1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(delaunay({{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}}),
                    std::invalid_argument);
}

TEST_CASE("delaunay of random points: Euler formula and empty circumcircles") {
    Rng rng(7);
    std::vector<std::array<double, 2>> pts;
    for (int i = 0; i < 40; ++i) pts.push_back({rng.uniform(), rng.uniform()});
    auto res = delaunay(pts);
    CHECK(res.complex.n0() - res.complex.n1() + res.complex.n2() == 1);

    for (const Triangle& t : res.complex.triangles) {
        auto c = oracles::circumcircle(res.geometry.x(t[0]), res.geometry.y(t[0]),
                                       res.geometry.x(t[1]), res.geometry.y(t[1]),
                                       res.geometry.x(t[2]), res.geometry.y(t[2]));
        REQUIRE(c.ok);
        for (int v = 1; v <= res.complex.n0(); ++v) {
            if (v == t[0] || v == t[1] || v == t[2]) continue;
            double d = std::hypot(res.geometry.x(v) - c.cx, res.geometry.y(v) - c.cy);
            CHECK(d >= c.r - 1e-9);
        }
    }
}

TEST_CASE("punch_hole removes the face of a filled triangle but keeps its edges") {
    auto x = filled_triangle();
    Geometry geom{{{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8}}};
    auto res = punch_hole(x, {0.5, 0.3}, 10.0, geom);
    CHECK(res.complex.n0() == 3);
    CHECK(res.complex.n1() == 3);
    CHECK(res.complex.n2() == 0);
    // one unfilled cycle
    int n1 = res.complex.n1();
    int rank1 = oracles::int_rank(boundary_1(res.complex));
    int rank2 = oracles::int_rank(boundary_2(res.complex));
    CHECK(n1 - rank1 - rank2 == 1);
}

TEST_CASE("punch_hole with radius zero is the identity") {
    Rng rng(11);
    std::vector<std::array<double, 2>> pts;
    for (int i = 0; i < 25; ++i) pts.push_back({rng.uniform(), rng.uniform()});
    auto res = delaunay(pts);
    auto punched = punch_hole(res.complex, {0.5, 0.5}, 0.0, res.geometry);
    CHECK(punched.complex.edges == res.complex.edges);
    CHECK(punched.complex.triangles == res.complex.triangles);
    CHECK(punched.kept_nodes.size() == static_cast<std::size_t>(res.complex.n0()));
}

TEST_CASE("punch_hole in a 40-point disc leaves harmonic dimension one") {
    Rng rng(7);
    std::vector<std::array<double, 2>> pts;
    for (int i = 0; i < 40; ++i) pts.push_back({rng.uniform(), rng.uniform()});
    auto res = delaunay(pts);
    auto punched = punch_hole(res.complex, {0.5, 0.5}, 0.12, res.geometry);
    CHECK(punched.complex.n2() < res.complex.n2());

    int n1 = punched.complex.n1();
    int rank1 = oracles::int_rank(boundary_1(punched.complex));
    int rank2 = oracles::int_rank(boundary_2(punched.complex));
    CHECK(n1 - rank1 - rank2 == 1);
}

TEST_CASE("hex_complex: smallest corner-sharing triple") {
    auto hc = hex_complex(Rect{0.0, 3.0, 0.0, 3.2}, 1.0);
    CHECK(hc.complex.n0() == 3);
    CHECK(hc.complex.n1() == 3);
    CHECK(hc.complex.n2() == 1);
}

TEST_CASE("hex_complex reproduces the reference discretization counts") {
    auto hc = hex_complex_target_nodes(Rect{-2.0, 2.0, -2.0, 2.0}, 225);
    CHECK(hc.complex.n0() >= 203);
    CHECK(hc.complex.n0() <= 247);
    CHECK(hc.complex.n1() >= 567);
    CHECK(hc.complex.n1() <= 692);
    CHECK(hc.complex.n2() >= 365);
    CHECK(hc.complex.n2() <= 445);
    CHECK(hc.complex.n0() - hc.complex.n1() + hc.complex.n2() == 1);
}

TEST_CASE("hex complexes are simply connected patches") {
    for (double r : {0.31, 0.22, 0.17}) {
        auto hc = hex_complex(Rect{-1.0, 1.0, -1.0, 1.0}, r);
        CHECK(hc.complex.n0() - hc.complex.n1() + hc.complex.n2() == 1);
    }
}

TEST_CASE("hex_complex edge metadata matches the lattice") {
    auto hc = hex_complex(Rect{0.0, 3.0, 0.0, 3.2}, 1.0);
    for (int e = 0; e < hc.complex.n1(); ++e) {
        std::size_t i = static_cast<std::size_t>(e);
        const Edge& ed = hc.complex.edges[i];
        CHECK(hc.meta.lengths[i] == doctest::Approx(1.0));
        // normal points from the low to the high node
        double dx = hc.geometry.x(ed[1]) - hc.geometry.x(ed[0]);
        double dy = hc.geometry.y(ed[1]) - hc.geometry.y(ed[0]);
        double len = std::hypot(dx, dy);
        CHECK(hc.meta.normals[i][0] == doctest::Approx(dx / len));
        CHECK(hc.meta.normals[i][1] == doctest::Approx(dy / len));
        // adjacent hexagon centers sit sqrt(3)*R apart
        CHECK(len == doctest::Approx(std::sqrt(3.0)));
    }
}

TEST_CASE("hex_complex error cases") {
    CHECK_THROWS_AS(hex_complex(Rect{0.0, 1.0, 0.0, 1.0}, 50.0), std::invalid_argument);
    CHECK_THROWS_AS(hex_complex(Rect{1.0, 0.0, 0.0, 1.0}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(hex_complex(Rect{0.0, 1.0, 0.0, 1.0}, -1.0), std::invalid_argument);
}
