#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "maxpoly/common.hpp"

namespace maxpoly::geom {

// A point with fixed dimension; all coordinates finite.
struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> c) : coords(c) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }
};

// Non-empty list of points of uniform dimension, with optional labels.
struct PointSet {
    std::vector<Point> points;
    std::vector<std::string> labels;  // empty or one per point

    std::size_t size() const { return points.size(); }
    std::size_t dim() const { return points.empty() ? 0 : points.front().dim(); }
    const Point& operator[](std::size_t i) const { return points[i]; }

    // Throws domain_error unless non-empty, uniform-dimension, all finite.
    void validate() const;
};

// Convex hull of a 3D point set: triangular facets with outward orientation
// (coplanar faces are merged onto one plane and fan-triangulated from their
// lowest-index vertex), plus the derived edge set.
struct HullMesh3D {
    PointSet vertices;                                  // hull vertices only
    std::vector<std::array<int, 3>> facets;             // indices into vertices
    std::vector<std::pair<int, int>> edges;             // derived, i < j

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::size_t face_count() const { return facets.size(); }
    // V - E + F, which must equal 2 for any hull this module produces.
    long euler_characteristic() const {
        return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) +
               static_cast<long>(face_count());
    }
    // Number of hull edges incident to each vertex.
    std::vector<int> vertex_valences() const;
};

double distance(const Point& a, const Point& b);
double squared_distance(const Point& a, const Point& b);

// |signed shoelace sum| / 2 of a polygon given in boundary order.
// Requires >= 3 points of dimension 2.
double shoelace_area(const std::vector<Point>& polygon);

// Extreme points in counterclockwise order; interior, duplicate and
// collinear-on-edge points removed. Throws degenerate_hull_error when all
// points are collinear (within 1e-9).
std::vector<Point> convex_hull_2d(const PointSet& points);

// Maximum pairwise Euclidean distance, exact O(k^2) scan. Requires >= 2 points.
double diameter(const PointSet& points);

// Convex hull volume and mesh for >= 4 points affinely spanning 3-space.
// Coplanarity tolerance 1e-9 (absolute; inputs here have magnitude <= 1).
std::pair<double, HullMesh3D> hull_volume_3d(const PointSet& points);

}  // namespace maxpoly::geom
