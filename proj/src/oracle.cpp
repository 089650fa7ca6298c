#include "maxpoly/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "maxpoly/pentagon.hpp"
#include "search_util.hpp"

namespace maxpoly::oracle {

namespace {

constexpr double kFeasTol = 1e-9;

double sq(double v) { return v * v; }

// Hull volume of n <= 16 points given as xyz triples; 0 when degenerate.
// Supporting-plane enumeration with coplanar merge, volume via the
// divergence theorem (no mesh, no heap churn: this sits in the search loop).
double hull_volume_fast(const double* p, int n) {
    constexpr double tol = 1e-9;
    double cx = 0, cy = 0, cz = 0;
    for (int i = 0; i < n; ++i) {
        cx += p[3 * i] / n;
        cy += p[3 * i + 1] / n;
        cz += p[3 * i + 2] / n;
    }
    struct Plane {
        double nx, ny, nz, off;
    };
    Plane planes[64];
    int planeCount = 0;
    double vol = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double ax = p[3 * j] - p[3 * i], ay = p[3 * j + 1] - p[3 * i + 1],
                             az = p[3 * j + 2] - p[3 * i + 2];
                const double bx = p[3 * k] - p[3 * i], by = p[3 * k + 1] - p[3 * i + 1],
                             bz = p[3 * k + 2] - p[3 * i + 2];
                double nx = ay * bz - az * by;
                double ny = az * bx - ax * bz;
                double nz = ax * by - ay * bx;
                const double nn = std::sqrt(nx * nx + ny * ny + nz * nz);
                if (nn <= 1e-12) continue;
                nx /= nn;
                ny /= nn;
                nz /= nn;
                double lo = 0.0, hi = 0.0;
                for (int m = 0; m < n; ++m) {
                    const double d = nx * (p[3 * m] - p[3 * i]) + ny * (p[3 * m + 1] - p[3 * i + 1]) +
                                     nz * (p[3 * m + 2] - p[3 * i + 2]);
                    lo = std::min(lo, d);
                    hi = std::max(hi, d);
                }
                if (hi > tol && lo < -tol) continue;
                if (hi > tol) {
                    nx = -nx;
                    ny = -ny;
                    nz = -nz;
                }
                const double off = nx * p[3 * i] + ny * p[3 * i + 1] + nz * p[3 * i + 2];
                bool dup = false;
                for (int q = 0; q < planeCount; ++q)
                    if (std::fabs(planes[q].nx - nx) < 1e-6 && std::fabs(planes[q].ny - ny) < 1e-6 &&
                        std::fabs(planes[q].nz - nz) < 1e-6 && std::fabs(planes[q].off - off) < 1e-6) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                if (planeCount == 64) return 0.0;
                planes[planeCount++] = {nx, ny, nz, off};

                // on-plane points, 2D hull area in an in-plane basis
                double ux = ax / std::sqrt(ax * ax + ay * ay + az * az);
                double uy = ay / std::sqrt(ax * ax + ay * ay + az * az);
                double uz = az / std::sqrt(ax * ax + ay * ay + az * az);
                const double vx = ny * uz - nz * uy;
                const double vy = nz * ux - nx * uz;
                const double vz = nx * uy - ny * ux;
                double flat[32];
                int cnt = 0;
                for (int m = 0; m < n; ++m) {
                    const double d = nx * p[3 * m] + ny * p[3 * m + 1] + nz * p[3 * m + 2] - off;
                    if (std::fabs(d) <= tol) {
                        const double rx = p[3 * m] - p[3 * i], ry = p[3 * m + 1] - p[3 * i + 1],
                                     rz = p[3 * m + 2] - p[3 * i + 2];
                        flat[2 * cnt] = rx * ux + ry * uy + rz * uz;
                        flat[2 * cnt + 1] = rx * vx + ry * vy + rz * vz;
                        ++cnt;
                    }
                }
                if (cnt < 3) continue;
                const double area = detail::hull_area_2d(flat, cnt);
                const double height = nx * (p[3 * i] - cx) + ny * (p[3 * i + 1] - cy) +
                                      nz * (p[3 * i + 2] - cz);
                vol += area * height / 3.0;
            }
    return std::max(vol, 0.0);
}

// One pattern-search start for either objective. dimPerPoint = 2 or 3.
struct StartOutcome {
    double value = 0.0;
    std::vector<double> coords;
    long evaluations = 0;
};

template <class Objective, class CapAt>
StartOutcome pattern_search_start(int pointCount, int dimPerPoint, double maxCap,
                                  const Objective& rawValue, const CapAt& capAt,
                                  const SearchConfig& cfg, std::uint64_t streamSeed) {
    const int dim = pointCount * dimPerPoint;
    StartOutcome out;
    std::vector<double> x(static_cast<std::size_t>(dim));
    Rng rng(streamSeed);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < pointCount; ++i) {
        if (dimPerPoint == 2) {
            const double a = rng.uniform(0.0, 2.0 * pi);
            const double rr = 0.5 * maxCap * std::sqrt(rng.uniform());
            x[static_cast<std::size_t>(2 * i)] = rr * std::cos(a);
            x[static_cast<std::size_t>(2 * i + 1)] = rr * std::sin(a);
        } else {
            // uniform in a ball of radius maxCap / 2
            const double u = rng.uniform();
            const double costh = rng.uniform(-1.0, 1.0);
            const double phi = rng.uniform(0.0, 2.0 * pi);
            const double rr = 0.5 * maxCap * std::cbrt(u);
            const double sinth = std::sqrt(1.0 - costh * costh);
            x[static_cast<std::size_t>(3 * i)] = rr * sinth * std::cos(phi);
            x[static_cast<std::size_t>(3 * i + 1)] = rr * sinth * std::sin(phi);
            x[static_cast<std::size_t>(3 * i + 2)] = rr * costh;
        }
    }

    auto penalized = [&](const double* xy, double mu) {
        double pen = 0.0;
        for (int i = 0; i < pointCount; ++i)
            for (int j = i + 1; j < pointCount; ++j) {
                double d2 = 0.0;
                for (int c = 0; c < dimPerPoint; ++c)
                    d2 += sq(xy[dimPerPoint * i + c] - xy[dimPerPoint * j + c]);
                const double over = std::sqrt(d2) - capAt(i, j);
                if (over > 0.0) pen += over * over;
            }
        return rawValue(xy) - mu * pen;
    };

    double mu = 100.0;
    for (int round = 0; round < cfg.penaltyRounds; ++round) {
        const bool last = round + 1 == cfg.penaltyRounds;
        double step = std::max(cfg.initialStep * std::pow(cfg.shrinkFactor, 2 * round), 1e-4);
        const double floor = last ? 1e-10 : 1e-6;
        double fx = penalized(x.data(), mu);
        ++out.evaluations;
        std::vector<double> trial = x;
        for (int pass = 0; pass < cfg.innerIterations && step > floor; ++pass) {
            bool improved = false;
            for (int j = 0; j < dim; ++j)
                for (double sgn : {+1.0, -1.0}) {
                    trial = x;
                    trial[static_cast<std::size_t>(j)] += sgn * step;
                    const double ft = penalized(trial.data(), mu);
                    ++out.evaluations;
                    if (ft > fx) {
                        fx = ft;
                        x = trial;
                        improved = true;
                    }
                }
            if (!improved) step *= cfg.shrinkFactor;
        }
        mu = std::min(mu * 10.0, 1e8);
    }

    // repair: shrink toward the centroid until every cap holds
    std::vector<double> centroid(static_cast<std::size_t>(dimPerPoint), 0.0);
    for (int i = 0; i < pointCount; ++i)
        for (int c = 0; c < dimPerPoint; ++c)
            centroid[static_cast<std::size_t>(c)] += x[static_cast<std::size_t>(dimPerPoint * i + c)] / pointCount;
    double scale = 1.0;
    for (int i = 0; i < pointCount; ++i)
        for (int j = i + 1; j < pointCount; ++j) {
            double d2 = 0.0;
            for (int c = 0; c < dimPerPoint; ++c)
                d2 += sq(x[static_cast<std::size_t>(dimPerPoint * i + c)] -
                         x[static_cast<std::size_t>(dimPerPoint * j + c)]);
            const double d = std::sqrt(d2);
            if (d > 0.0) scale = std::min(scale, capAt(i, j) / d);
        }
    for (int i = 0; i < pointCount; ++i)
        for (int c = 0; c < dimPerPoint; ++c) {
            auto& v = x[static_cast<std::size_t>(dimPerPoint * i + c)];
            v = centroid[static_cast<std::size_t>(c)] + scale * (v - centroid[static_cast<std::size_t>(c)]);
        }
    out.coords = std::move(x);
    out.value = rawValue(out.coords.data());
    return out;
}

geom::PointSet coords_to_pointset(const std::vector<double>& c, int pointCount, int dimPerPoint) {
    geom::PointSet ps;
    for (int i = 0; i < pointCount; ++i) {
        geom::Point p;
        for (int d = 0; d < dimPerPoint; ++d)
            p.coords.push_back(c[static_cast<std::size_t>(dimPerPoint * i + d)]);
        ps.points.push_back(std::move(p));
    }
    return ps;
}

}  // namespace

void SearchConfig::validate() const {
    if (starts < 1) throw domain_error("SearchConfig: starts must be >= 1");
    if (innerIterations < 1) throw domain_error("SearchConfig: innerIterations must be >= 1");
    if (!(shrinkFactor > 0.0) || !(shrinkFactor < 1.0))
        throw domain_error("SearchConfig: shrinkFactor must be in (0,1)");
    if (!(initialStep > 0.0)) throw domain_error("SearchConfig: initialStep must be > 0");
    if (penaltyRounds < 1) throw domain_error("SearchConfig: penaltyRounds must be >= 1");
    if (threads < 0) throw domain_error("SearchConfig: threads must be >= 0");
}

double max_cap_violation(const geom::PointSet& points, const pentagon::CapMatrix& caps) {
    double worst = 0.0;
    for (int i = 0; i < caps.k; ++i)
        for (int j = i + 1; j < caps.k; ++j)
            worst = std::max(worst, geom::distance(points[static_cast<std::size_t>(i)],
                                                   points[static_cast<std::size_t>(j)]) -
                                        caps.at(i, j));
    return worst;
}

SearchResult search_max_area_polygon(const pentagon::CapMatrix& caps, const SearchConfig& cfg) {
    caps.validate();
    cfg.validate();
    const int k = caps.k;
    if (k < 3) throw domain_error("search_max_area_polygon: k must be >= 3");
    double maxCap = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) maxCap = std::max(maxCap, caps.at(i, j));

    auto rawValue = [&](const double* xy) { return detail::hull_area_2d(xy, k); };
    auto capAt = [&](int i, int j) { return caps.at(i, j); };

    std::vector<StartOutcome> outcomes(static_cast<std::size_t>(cfg.starts));
    detail::run_starts(cfg.starts, cfg.threads, [&](int s) {
        outcomes[static_cast<std::size_t>(s)] = pattern_search_start(
            k, 2, maxCap, rawValue, capAt, cfg, mix_seed(cfg.seed, static_cast<std::uint64_t>(s)));
    });

    SearchResult res;
    res.perStartValues.resize(outcomes.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        res.perStartValues[i] = outcomes[i].value;
        res.evaluations += outcomes[i].evaluations;
    }
    const int best = detail::argmax_lowest(res.perStartValues);
    res.bestValue = res.perStartValues[static_cast<std::size_t>(best)];
    res.bestPoints = coords_to_pointset(outcomes[static_cast<std::size_t>(best)].coords, k, 2);
    res.feasible = max_cap_violation(res.bestPoints, caps) <= kFeasTol;
    return res;
}

SearchResult search_max_volume_3d(int pointCount, const SearchConfig& cfg) {
    cfg.validate();
    if (pointCount < 4) throw domain_error("search_max_volume_3d: pointCount must be >= 4");
    if (pointCount > 16) throw domain_error("search_max_volume_3d: pointCount too large");

    auto rawValue = [&](const double* xyz) { return hull_volume_fast(xyz, pointCount); };
    auto capAt = [](int, int) { return 1.0; };

    std::vector<StartOutcome> outcomes(static_cast<std::size_t>(cfg.starts));
    detail::run_starts(cfg.starts, cfg.threads, [&](int s) {
        outcomes[static_cast<std::size_t>(s)] = pattern_search_start(
            pointCount, 3, 1.0, rawValue, capAt, cfg,
            mix_seed(cfg.seed, static_cast<std::uint64_t>(s)));
    });

    SearchResult res;
    res.perStartValues.resize(outcomes.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        res.perStartValues[i] = outcomes[i].value;
        res.evaluations += outcomes[i].evaluations;
    }
    const int best = detail::argmax_lowest(res.perStartValues);
    res.bestValue = res.perStartValues[static_cast<std::size_t>(best)];
    res.bestPoints = coords_to_pointset(outcomes[static_cast<std::size_t>(best)].coords, pointCount, 3);
    pentagon::CapMatrix unit(pointCount, 1.0);
    res.feasible = max_cap_violation(res.bestPoints, unit) <= kFeasTol;
    return res;
}

ProjectionReport verify_projection_monotonicity(long trials, const SearchConfig& cfg) {
    if (trials < 1) throw domain_error("verify_projection_monotonicity: trials must be >= 1");
    cfg.validate();
    const double pi = std::acos(-1.0);

    ProjectionReport rep;
    rep.trials = trials;
    for (long t = 0; t < trials; ++t) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(t)));
        geom::PointSet pts;
        double h = 1.0;
        // Octahedral-type draw: apexes on the axis, four points with
        // quadrant-spread shadows and small axial jitter. Resample until the
        // hull has 6 vertices all of whose facets touch an apex; without that
        // structure the volume identity does not hold.
        for (int attempt = 0;; ++attempt) {
            h = rng.uniform(0.6, 1.0);
            pts.points.clear();
            pts.points.push_back(geom::Point{0.0, 0.0, h / 2.0});
            pts.points.push_back(geom::Point{0.0, 0.0, -h / 2.0});
            bool ok = true;
            for (int i = 0; i < 4; ++i) {
                const double ang = rng.uniform(i * pi / 2.0 + 0.15, (i + 1) * pi / 2.0 - 0.15);
                const double ax = rng.uniform(-0.06, 0.06) * h;
                const double radBound =
                    std::sqrt(std::max(0.0, h * h - sq(h / 2.0 + std::fabs(ax)))) - 1e-3;
                if (radBound <= 0.25) {
                    ok = false;
                    break;
                }
                const double rad = rng.uniform(0.25, std::min(0.62, radBound));
                pts.points.push_back(
                    geom::Point{rad * std::cos(ang), rad * std::sin(ang), ax});
            }
            if (ok) {
                const auto [vol, mesh] = geom::hull_volume_3d(pts);
                (void)vol;
                if (mesh.vertex_count() == 6) {
                    // apexes are input indices 0 and 1; find them in the mesh
                    int apexA = -1, apexB = -1;
                    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
                        const geom::Point& q = mesh.vertices[v];
                        if (q[0] == 0.0 && q[1] == 0.0 && q[2] == h / 2.0) apexA = static_cast<int>(v);
                        if (q[0] == 0.0 && q[1] == 0.0 && q[2] == -h / 2.0) apexB = static_cast<int>(v);
                    }
                    bool structural = apexA >= 0 && apexB >= 0;
                    for (const auto& f : mesh.facets)
                        if (f[0] != apexA && f[1] != apexA && f[2] != apexA && f[0] != apexB &&
                            f[1] != apexB && f[2] != apexB)
                            structural = false;
                    if (structural) break;
                }
            }
            ++rep.structureResamples;
            if (attempt > 500) throw internal_error("projection sampler failed to converge");
        }

        const double volBefore = geom::hull_volume_3d(pts).first;
        geom::PointSet flat = pts;
        for (int i = 2; i < 6; ++i) flat.points[static_cast<std::size_t>(i)][2] = 0.0;
        const double volAfter = geom::hull_volume_3d(flat).first;

        for (int i = 2; i < 6; ++i) {
            for (int j = i + 1; j < 6; ++j)
                if (geom::distance(flat[static_cast<std::size_t>(i)], flat[static_cast<std::size_t>(j)]) >
                    geom::distance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]) + 1e-12)
                    ++rep.distanceViolations;
            // apex distances: the projected max never exceeds the original max
            const double beforeMax =
                std::max(geom::distance(pts[static_cast<std::size_t>(i)], pts[0]),
                         geom::distance(pts[static_cast<std::size_t>(i)], pts[1]));
            const double afterMax =
                std::max(geom::distance(flat[static_cast<std::size_t>(i)], flat[0]),
                         geom::distance(flat[static_cast<std::size_t>(i)], flat[1]));
            if (afterMax > beforeMax + 1e-12) ++rep.distanceViolations;
        }
        const double dv = std::fabs(volBefore - volAfter);
        rep.maxVolumeDelta = std::max(rep.maxVolumeDelta, dv);
        if (dv > 1e-9) ++rep.volumeMismatches;
    }
    rep.pass = rep.distanceViolations == 0 && rep.volumeMismatches == 0;
    return rep;
}

}  // namespace maxpoly::oracle
