#include "maxpoly/geom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace maxpoly::geom {

namespace {

constexpr double kPlaneTol = 1e-9;  // coplanarity / collinearity tolerance

struct Vec3 {
    double x, y, z;
};

Vec3 to_vec3(const Point& p) { return {p[0], p[1], p[2]}; }

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double cross2(double ox, double oy, double ax, double ay, double bx, double by) {
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

}  // namespace

void PointSet::validate() const {
    if (points.empty()) throw domain_error("PointSet: empty");
    const std::size_t d = points.front().dim();
    if (d < 1) throw domain_error("PointSet: zero-dimensional point");
    for (const Point& p : points) {
        if (p.dim() != d) throw domain_error("PointSet: mixed dimensions");
        for (double c : p.coords)
            if (!std::isfinite(c)) throw domain_error("PointSet: non-finite coordinate");
    }
    if (!labels.empty() && labels.size() != points.size())
        throw domain_error("PointSet: label count mismatch");
}

double squared_distance(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw domain_error("distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double distance(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

double shoelace_area(const std::vector<Point>& polygon) {
    if (polygon.size() < 3) throw domain_error("shoelace_area: need at least 3 points");
    for (const Point& p : polygon)
        if (p.dim() != 2) throw domain_error("shoelace_area: points must be 2-dimensional");
    double s = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % polygon.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return std::fabs(s) / 2.0;
}

std::vector<Point> convex_hull_2d(const PointSet& points) {
    points.validate();
    if (points.dim() != 2) throw domain_error("convex_hull_2d: points must be 2-dimensional");
    if (points.size() < 3) throw domain_error("convex_hull_2d: need at least 3 points");

    std::vector<std::pair<double, double>> pts;
    pts.reserve(points.size());
    for (const Point& p : points.points) pts.emplace_back(p[0], p[1]);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const std::size_t n = pts.size();
    // collinearity check against the extreme segment
    double maxCross = 0.0;
    for (const auto& p : pts)
        maxCross = std::max(maxCross, std::fabs(cross2(pts.front().first, pts.front().second,
                                                       pts.back().first, pts.back().second,
                                                       p.first, p.second)));
    if (n < 3 || maxCross <= kPlaneTol)
        throw degenerate_hull_error("convex_hull_2d: all points collinear");

    // Andrew monotone chain; non-strict turns popped, so collinear edge
    // points do not appear in the output.
    std::vector<std::pair<double, double>> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(hull[k - 2].first, hull[k - 2].second, hull[k - 1].first,
                                hull[k - 1].second, pts[i].first, pts[i].second) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross2(hull[k - 2].first, hull[k - 2].second, hull[k - 1].first,
                                    hull[k - 1].second, pts[i].first, pts[i].second) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);

    std::vector<Point> out;
    out.reserve(hull.size());
    for (const auto& p : hull) out.push_back(Point{p.first, p.second});
    return out;
}

double diameter(const PointSet& points) {
    points.validate();
    if (points.size() < 2) throw domain_error("diameter: need at least 2 points");
    double best = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            best = std::max(best, squared_distance(points[i], points[j]));
    return std::sqrt(best);
}

std::vector<int> HullMesh3D::vertex_valences() const {
    std::vector<int> val(vertices.size(), 0);
    for (const auto& e : edges) {
        ++val[e.first];
        ++val[e.second];
    }
    return val;
}

std::pair<double, HullMesh3D> hull_volume_3d(const PointSet& points) {
    points.validate();
    if (points.dim() != 3) throw domain_error("hull_volume_3d: points must be 3-dimensional");
    const std::size_t n = points.size();
    if (n < 4) throw domain_error("hull_volume_3d: need at least 4 points");

    std::vector<Vec3> p;
    p.reserve(n);
    for (const Point& q : points.points) p.push_back(to_vec3(q));

    // affine-span check: widest triangle through p[0], then an off-plane point
    bool spanning = false;
    {
        double bestArea = 0.0;
        std::size_t bi = 1, ci = 2;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double a2 = norm(cross(p[i] - p[0], p[j] - p[0]));
                if (a2 > bestArea) {
                    bestArea = a2;
                    bi = i;
                    ci = j;
                }
            }
        if (bestArea > kPlaneTol) {
            const Vec3 nrm = cross(p[bi] - p[0], p[ci] - p[0]);
            const double nn = norm(nrm);
            for (std::size_t i = 0; i < n; ++i)
                if (std::fabs(dot(nrm, p[i] - p[0])) / nn > kPlaneTol) spanning = true;
        }
    }
    if (!spanning) throw degenerate_hull_error("hull_volume_3d: points are coplanar");

    Vec3 centroid{0, 0, 0};
    for (const Vec3& q : p) {
        centroid.x += q.x;
        centroid.y += q.y;
        centroid.z += q.z;
    }
    centroid.x /= static_cast<double>(n);
    centroid.y /= static_cast<double>(n);
    centroid.z /= static_cast<double>(n);

    // Supporting planes by brute-force triple enumeration (inputs are small),
    // deduplicated, each carrying its on-plane point set.
    struct Plane {
        Vec3 normal;  // unit, outward
        double offset;
        std::vector<int> onPlane;
    };
    std::vector<Plane> planes;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec3 nrm = cross(p[j] - p[i], p[k] - p[i]);
                const double nn = norm(nrm);
                if (nn <= 1e-12) continue;
                nrm.x /= nn;
                nrm.y /= nn;
                nrm.z /= nn;
                double lo = 0.0, hi = 0.0;
                for (std::size_t m = 0; m < n; ++m) {
                    const double d = dot(nrm, p[m] - p[i]);
                    lo = std::min(lo, d);
                    hi = std::max(hi, d);
                }
                int side;
                if (hi <= kPlaneTol)
                    side = +1;  // nrm already outward
                else if (lo >= -kPlaneTol)
                    side = -1;
                else
                    continue;
                if (side < 0) {
                    nrm.x = -nrm.x;
                    nrm.y = -nrm.y;
                    nrm.z = -nrm.z;
                }
                const double off = dot(nrm, p[i]);
                bool dup = false;
                for (const Plane& pl : planes)
                    if (std::fabs(pl.normal.x - nrm.x) < 1e-7 &&
                        std::fabs(pl.normal.y - nrm.y) < 1e-7 &&
                        std::fabs(pl.normal.z - nrm.z) < 1e-7 &&
                        std::fabs(pl.offset - off) < 1e-7) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                Plane pl;
                pl.normal = nrm;
                pl.offset = off;
                for (std::size_t m = 0; m < n; ++m)
                    if (std::fabs(dot(nrm, p[m]) - off) <= kPlaneTol)
                        pl.onPlane.push_back(static_cast<int>(m));
                planes.push_back(std::move(pl));
            }

    // Per plane: order the on-plane points around their centroid (CCW seen
    // from outside), drop non-extreme ones, fan-triangulate from the
    // lowest-index vertex.
    std::set<int> usedVertices;
    std::vector<std::array<int, 3>> faceTriangles;
    std::set<std::pair<int, int>> edgeSet;
    for (const Plane& pl : planes) {
        const std::vector<int>& on = pl.onPlane;
        if (on.size() < 3) continue;
        // in-plane basis
        Vec3 u = p[on[1]] - p[on[0]];
        const double un = norm(u);
        u.x /= un;
        u.y /= un;
        u.z /= un;
        Vec3 v = cross(pl.normal, u);
        // 2D hull of the projected points, CCW in (u, v) = CCW from outside
        std::vector<std::pair<double, double>> proj;
        for (int idx : on)
            proj.emplace_back(dot(p[idx] - p[on[0]], u), dot(p[idx] - p[on[0]], v));
        std::vector<int> order(on.size());
        for (std::size_t i = 0; i < on.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return proj[a] < proj[b];
        });
        std::vector<int> hull;
        auto turn = [&](int a, int b, int c) {
            return cross2(proj[a].first, proj[a].second, proj[b].first, proj[b].second,
                          proj[c].first, proj[c].second);
        };
        for (int idx : order) {
            while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), idx) <= 1e-15)
                hull.pop_back();
            hull.push_back(idx);
        }
        const std::size_t lowerCount = hull.size() + 1;
        for (std::size_t i = order.size() - 1; i-- > 0;) {
            while (hull.size() >= lowerCount &&
                   turn(hull[hull.size() - 2], hull.back(), order[i]) <= 1e-15)
                hull.pop_back();
            hull.push_back(order[i]);
        }
        hull.pop_back();
        if (hull.size() < 3) continue;
        std::vector<int> cycle;
        cycle.reserve(hull.size());
        for (int h : hull) cycle.push_back(on[static_cast<std::size_t>(h)]);
        // rotate so the fan apex is the lowest global index
        const std::size_t apexPos = static_cast<std::size_t>(
            std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
        std::rotate(cycle.begin(), cycle.begin() + static_cast<long>(apexPos), cycle.end());
        for (int idx : cycle) usedVertices.insert(idx);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int a = cycle[i];
            const int b = cycle[(i + 1) % cycle.size()];
            edgeSet.insert({std::min(a, b), std::max(a, b)});
        }
        for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
            faceTriangles.push_back({cycle[0], cycle[i], cycle[i + 1]});
            if (i > 1) {
                const int a = cycle[0];
                const int b = cycle[i];
                edgeSet.insert({std::min(a, b), std::max(a, b)});
            }
        }
    }

    if (faceTriangles.empty()) throw degenerate_hull_error("hull_volume_3d: no facets found");

    // volume from signed triple products relative to the centroid
    double vol6 = 0.0;
    for (const auto& t : faceTriangles) {
        const Vec3 a = p[static_cast<std::size_t>(t[0])] - centroid;
        const Vec3 b = p[static_cast<std::size_t>(t[1])] - centroid;
        const Vec3 c = p[static_cast<std::size_t>(t[2])] - centroid;
        vol6 += dot(a, cross(b, c));
    }
    const double volume = std::fabs(vol6) / 6.0;

    // remap to hull-vertex indices
    std::map<int, int> remap;
    HullMesh3D mesh;
    for (int idx : usedVertices) {
        remap[idx] = static_cast<int>(mesh.vertices.points.size());
        mesh.vertices.points.push_back(points[static_cast<std::size_t>(idx)]);
        if (!points.labels.empty())
            mesh.vertices.labels.push_back(points.labels[static_cast<std::size_t>(idx)]);
    }
    for (auto& t : faceTriangles) {
        std::array<int, 3> tri{remap[t[0]], remap[t[1]], remap[t[2]]};
        // enforce outward orientation
        const Vec3 a = p[static_cast<std::size_t>(t[0])];
        const Vec3 b = p[static_cast<std::size_t>(t[1])];
        const Vec3 c = p[static_cast<std::size_t>(t[2])];
        if (dot(cross(b - a, c - a), a - centroid) < 0) std::swap(tri[1], tri[2]);
        mesh.facets.push_back(tri);
    }
    for (const auto& e : edgeSet) mesh.edges.emplace_back(remap[e.first], remap[e.second]);

    return {volume, std::move(mesh)};
}

}  // namespace maxpoly::geom
