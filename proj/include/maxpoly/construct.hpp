#pragma once

#include <string>

#include "maxpoly/geom.hpp"

namespace maxpoly::construct {

enum class PolytopeType { simplex, doublePyramid, pyramidal, octahedral };

std::string to_string(PolytopeType t);

// Explicit coordinates of a constructed polytope together with the volume
// the construction claims for it.
struct PolytopeSpec {
    int n = 0;  // ambient dimension
    geom::PointSet vertices;
    PolytopeType typeTag = PolytopeType::simplex;
    double claimedVolume = 0.0;
};

// Regular m-simplex with the given edge length, circumcentered at the origin
// of m-space (Helmert-basis embedding; deterministic orientation).
geom::PointSet regular_simplex(int m, double edge);

// Six-vertex pyramidal polytope of height h: apexes (+-h/2, 0, 0) and the
// four symmetric-pentagon points at radius cap sqrt(1 - h^2/4) embedded in
// coordinates 2..3. claimedVolume = (1/3) h A(...).
PolytopeSpec build_pyramidal_3d(double h);

// The (n+3)-vertex maximizer: unit regular (n-2)-simplex in coordinates
// 1..n-2 joined orthogonally to the four pentagon points of the optimal
// symmetric pentagon at r(n) in coordinates n-1..n.
PolytopeSpec build_optimal(int n);

// Unit-diameter regular octahedron (+-1/2 on each axis), volume 1/6.
PolytopeSpec regular_octahedron();

}  // namespace maxpoly::construct
