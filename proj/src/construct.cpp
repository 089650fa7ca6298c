#include "maxpoly/construct.hpp"

#include <cmath>

#include "maxpoly/formulas.hpp"
#include "maxpoly/pentagon.hpp"

namespace maxpoly::construct {

std::string to_string(PolytopeType t) {
    switch (t) {
        case PolytopeType::simplex: return "simplex";
        case PolytopeType::doublePyramid: return "doublePyramid";
        case PolytopeType::pyramidal: return "pyramidal";
        case PolytopeType::octahedral: return "octahedral";
    }
    return "?";
}

geom::PointSet regular_simplex(int m, double edge) {
    if (m < 1) throw domain_error("regular_simplex: m must be >= 1");
    if (!(edge > 0.0)) throw domain_error("regular_simplex: edge must be > 0");
    // Scaled standard basis of R^(m+1), centered, expressed in the Helmert
    // orthonormal basis of the sum-zero hyperplane. Row k of the basis is
    // (1,...,1,-k,0,...,0)/sqrt(k(k+1)) with k ones.
    const double s = edge / std::sqrt(2.0);
    geom::PointSet out;
    for (int i = 0; i <= m; ++i) {
        geom::Point p;
        p.coords.resize(static_cast<std::size_t>(m));
        for (int k = 1; k <= m; ++k) {
            const double denom = std::sqrt(static_cast<double>(k) * (k + 1));
            double dot = 0.0;
            if (i < k)
                dot = 1.0 / denom;
            else if (i == k)
                dot = -static_cast<double>(k) / denom;
            p.coords[static_cast<std::size_t>(k - 1)] = s * dot;
        }
        out.points.push_back(std::move(p));
        out.labels.push_back("S" + std::to_string(i + 1));
    }
    // subtract the centroid so the circumcenter sits exactly at the origin
    for (int k = 0; k < m; ++k) {
        double c = 0.0;
        for (const geom::Point& p : out.points) c += p[static_cast<std::size_t>(k)];
        c /= static_cast<double>(m + 1);
        for (geom::Point& p : out.points) p[static_cast<std::size_t>(k)] -= c;
    }
    return out;
}

PolytopeSpec build_pyramidal_3d(double h) {
    if (h < 0.0 || h > 1.0) throw domain_error("build_pyramidal_3d: h outside [0, 1]");
    const double r = std::sqrt(1.0 - h * h / 4.0);
    const pentagon::PentagonSolution sol = pentagon::best_area(r);
    PolytopeSpec spec;
    spec.n = 3;
    spec.typeTag = PolytopeType::pyramidal;
    spec.claimedVolume = h * sol.area / 3.0;
    spec.vertices.points.push_back(geom::Point{h / 2.0, 0.0, 0.0});
    spec.vertices.points.push_back(geom::Point{-h / 2.0, 0.0, 0.0});
    spec.vertices.labels = {"P", "Q"};
    for (int i = 0; i < 4; ++i) {
        const geom::Point& p = sol.points[static_cast<std::size_t>(i)];
        spec.vertices.points.push_back(geom::Point{0.0, p[0], p[1]});
        spec.vertices.labels.push_back(sol.points.labels[static_cast<std::size_t>(i)]);
    }
    return spec;
}

PolytopeSpec build_optimal(int n) {
    if (n < 3) throw domain_error("build_optimal: n must be >= 3");
    const double r = formulas::r_of_n(n);
    const pentagon::PentagonSolution sol = pentagon::best_area(r);
    const geom::PointSet simplex = regular_simplex(n - 2, 1.0);

    PolytopeSpec spec;
    spec.n = n;
    spec.typeTag = PolytopeType::pyramidal;
    spec.claimedVolume = formulas::v_n_plus_3(n).volume;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        geom::Point p;
        p.coords.assign(static_cast<std::size_t>(n), 0.0);
        for (int k = 0; k < n - 2; ++k) p[static_cast<std::size_t>(k)] = simplex[i][static_cast<std::size_t>(k)];
        spec.vertices.points.push_back(std::move(p));
        spec.vertices.labels.push_back(simplex.labels[i]);
    }
    // P5 (the simplex circumcenter, at the origin) is interior, not a vertex
    for (int i = 0; i < 4; ++i) {
        geom::Point p;
        p.coords.assign(static_cast<std::size_t>(n), 0.0);
        p[static_cast<std::size_t>(n - 2)] = sol.points[static_cast<std::size_t>(i)][0];
        p[static_cast<std::size_t>(n - 1)] = sol.points[static_cast<std::size_t>(i)][1];
        spec.vertices.points.push_back(std::move(p));
        spec.vertices.labels.push_back(sol.points.labels[static_cast<std::size_t>(i)]);
    }
    return spec;
}

PolytopeSpec regular_octahedron() {
    PolytopeSpec spec;
    spec.n = 3;
    spec.typeTag = PolytopeType::octahedral;
    spec.claimedVolume = 1.0 / 6.0;
    for (int axis = 0; axis < 3; ++axis)
        for (double sgn : {+0.5, -0.5}) {
            geom::Point p{0.0, 0.0, 0.0};
            p[static_cast<std::size_t>(axis)] = sgn;
            spec.vertices.points.push_back(p);
        }
    spec.vertices.labels = {"X+", "X-", "Y+", "Y-", "Z+", "Z-"};
    return spec;
}

}  // namespace maxpoly::construct
