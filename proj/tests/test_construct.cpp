#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "maxpoly/construct.hpp"
#include "maxpoly/formulas.hpp"
#include "maxpoly/geom.hpp"
#include "maxpoly/pentagon.hpp"
#include "oracles.hpp"

using namespace maxpoly;
using namespace maxpoly::construct;

TEST_CASE("regular_simplex geometry") {
    const auto seg = regular_simplex(1, 1.0);
    REQUIRE(seg.size() == 2);
    CHECK(seg[0][0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(seg[1][0] == doctest::Approx(-0.5).epsilon(1e-15));

    for (int m : {1, 2, 3, 4, 7}) {
        const auto s = regular_simplex(m, 1.0);
        REQUIRE(s.size() == static_cast<std::size_t>(m + 1));
        const double R = std::sqrt(m / (2.0 * (m + 1)));
        for (std::size_t i = 0; i < s.size(); ++i) {
            double norm2 = 0.0;
            for (int c = 0; c < m; ++c) norm2 += s[i][static_cast<std::size_t>(c)] * s[i][static_cast<std::size_t>(c)];
            CHECK(std::fabs(std::sqrt(norm2) - R) <= 1e-12);
            for (std::size_t j = i + 1; j < s.size(); ++j)
                CHECK(std::fabs(geom::distance(s[i], s[j]) - 1.0) <= 1e-12);
        }
        for (int c = 0; c < m; ++c) {
            double centroid = 0.0;
            for (std::size_t i = 0; i < s.size(); ++i) centroid += s[i][static_cast<std::size_t>(c)];
            CHECK(std::fabs(centroid / (m + 1)) <= 1e-15);
        }
    }
    CHECK(std::sqrt(1.0 / 3.0) ==
          doctest::Approx(0.5773502691896258).epsilon(1e-15));  // m = 2 circumradius
    CHECK(std::sqrt(3.0 / 8.0) ==
          doctest::Approx(0.6123724356957945).epsilon(1e-15));  // m = 3 circumradius
    // the pyramidal-construction circumradius at n = m + 2 matches sqrt(m/(2(m+1)))
    for (int m = 1; m <= 10; ++m)
        CHECK(std::fabs(formulas::circumradius_expression(m + 2) - std::sqrt(m / (2.0 * (m + 1)))) <=
              1e-14);
    CHECK_THROWS_AS(regular_simplex(0, 1.0), domain_error);
    CHECK_THROWS_AS(regular_simplex(2, 0.0), domain_error);
}

TEST_CASE("regular_octahedron reference shape") {
    const auto octa = regular_octahedron();
    CHECK(geom::diameter(octa.vertices) == doctest::Approx(1.0).epsilon(1e-15));
    const auto [vol, mesh] = geom::hull_volume_3d(octa.vertices);
    CHECK(std::fabs(vol - 1.0 / 6.0) <= 1e-12);
    CHECK(std::fabs(octa.claimedVolume - vol) <= 1e-12);
    CHECK(mesh.face_count() == 8);
    CHECK(mesh.edge_count() == 12);
}

TEST_CASE("build_pyramidal_3d volume chain") {
    const auto top = build_pyramidal_3d(1.0);
    CHECK(top.claimedVolume == doctest::Approx(0.1954088677120518).epsilon(1e-12));
    CHECK(geom::hull_volume_3d(top.vertices).first ==
          doctest::Approx(top.claimedVolume).epsilon(1e-9));

    const auto flat = build_pyramidal_3d(0.0);
    CHECK(flat.claimedVolume == 0.0);

    for (double h : {0.25, 0.5, 0.75, 1.0}) {
        const auto spec = build_pyramidal_3d(h);
        const double r = std::sqrt(1.0 - h * h / 4.0);
        const double expected = h * pentagon::area_A(r, pentagon::x0_of_r(r)) / 3.0;
        CHECK(std::fabs(spec.claimedVolume - expected) <= 1e-12);
        CHECK(std::fabs(geom::hull_volume_3d(spec.vertices).first - expected) <= 1e-9);
        CHECK(geom::diameter(spec.vertices) <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(build_pyramidal_3d(-0.1), domain_error);
    CHECK_THROWS_AS(build_pyramidal_3d(1.1), domain_error);
}

TEST_CASE("build_pyramidal_3d hull combinatorics") {
    const auto spec = build_pyramidal_3d(1.0);
    const auto [vol, mesh] = geom::hull_volume_3d(spec.vertices);
    CHECK(mesh.vertex_count() == 6);
    CHECK(mesh.edge_count() == 12);
    CHECK(mesh.face_count() == 8);
    const auto valences = mesh.vertex_valences();
    CHECK(std::count(valences.begin(), valences.end(), 5) == 2);
}

TEST_CASE("build_optimal(3) coincides with the h = 1 pyramidal build") {
    const auto a = build_optimal(3);
    const auto b = build_pyramidal_3d(1.0);
    REQUIRE(a.vertices.size() == 6);
    REQUIRE(b.vertices.size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(a.vertices[i][c] == doctest::Approx(b.vertices[i][c]).epsilon(1e-14));
    CHECK(std::fabs(a.claimedVolume - b.claimedVolume) <= 1e-15);
}

TEST_CASE("build_optimal diameter and vertex counts") {
    for (int n = 3; n <= 10; ++n) {
        const auto spec = build_optimal(n);
        CHECK(spec.vertices.size() == static_cast<std::size_t>(n + 3));
        CHECK(std::fabs(geom::diameter(spec.vertices) - 1.0) <= 1e-12);
        // the first n-1 vertices form the unit simplex
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j)
                CHECK(std::fabs(geom::distance(spec.vertices[static_cast<std::size_t>(i)],
                                               spec.vertices[static_cast<std::size_t>(j)]) -
                                1.0) <= 1e-12);
    }
    CHECK_THROWS_AS(build_optimal(2), domain_error);
}

TEST_CASE("build_optimal(4) matches the theorem chain") {
    const auto spec = build_optimal(4);
    CHECK(spec.vertices.size() == 7);
    CHECK(std::fabs(geom::diameter(spec.vertices) - 1.0) <= 1e-12);
    CHECK(spec.claimedVolume == doctest::Approx(0.06058859780818947).epsilon(1e-10));
    CHECK(spec.claimedVolume == doctest::Approx(formulas::v_n_plus_3(4).volume).epsilon(1e-15));
}

TEST_CASE("build_optimal distance algebra between the orthogonal blocks") {
    for (int n : {3, 4, 5, 8}) {
        const auto spec = build_optimal(n);
        const double R = formulas::circumradius_expression(n);
        for (int i = 0; i < n - 1; ++i) {  // simplex vertices
            double R2 = 0.0;
            for (int c = 0; c < n; ++c)
                R2 += spec.vertices[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                      spec.vertices[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            CHECK(std::fabs(std::sqrt(R2) - R) <= 1e-12);
            for (int j = n - 1; j < n + 3; ++j) {  // pentagon vertices
                double rho2 = 0.0;
                for (int c = 0; c < n; ++c)
                    rho2 += spec.vertices[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] *
                            spec.vertices[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                const double d2 = geom::squared_distance(spec.vertices[static_cast<std::size_t>(i)],
                                                         spec.vertices[static_cast<std::size_t>(j)]);
                CHECK(std::fabs(d2 - (R2 + rho2)) <= 1e-12);
                CHECK(d2 <= 1.0 + 1e-12);
            }
        }
    }
}
