#include "maxpoly/pentagon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "search_util.hpp"

namespace maxpoly::pentagon {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
double sq(double v) { return v * v; }

}  // namespace

CapMatrix::CapMatrix(int k_, double fill) : k(k_), caps(static_cast<std::size_t>(k_) * k_, fill) {}

void CapMatrix::validate() const {
    if (k < 2 || caps.size() != static_cast<std::size_t>(k) * k)
        throw domain_error("CapMatrix: bad shape");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const double v = at(i, j);
            if (!(v > 0.0) || !std::isfinite(v))
                throw domain_error("CapMatrix: caps must be positive and finite");
            if (v != at(j, i)) throw domain_error("CapMatrix: not symmetric");
        }
}

CapMatrix CapMatrix::pentagon_pattern(double r) {
    CapMatrix m(5, 1.0);
    for (int i = 0; i < 4; ++i) m.set(i, 4, r);
    return m;
}

double area_A(double r, double x) {
    if (!(r > 0.0) || !std::isfinite(r)) throw domain_error("area_A: bad r");
    if (x < 0.0 || x > 0.5 || x > r) throw domain_error("area_A: x outside [0, min(1/2, r)]");
    return 0.5 * x * std::sqrt(3.0 - 4.0 * x - 4.0 * x * x) + 0.5 * std::sqrt(r * r - x * x);
}

double area_A_dx(double r, double x) {
    const double s = 3.0 - 4.0 * x - 4.0 * x * x;
    return 0.5 * std::sqrt(s) + x * (-4.0 - 8.0 * x) / (4.0 * std::sqrt(s)) -
           x / (2.0 * std::sqrt(r * r - x * x));
}

double x0_of_r(double r) {
    if (r < kInvSqrt2 - 1e-12 || r > 1.0 + 1e-12)
        throw domain_error("x0_of_r: r outside [1/sqrt2, 1]");
    r = std::min(r, 1.0);
    double lo = 1e-9;
    double hi = 0.5 - 1e-9;
    double flo = area_A_dx(r, lo);
    double fhi = area_A_dx(r, hi);
    if (!(flo > 0.0) || !(fhi < 0.0))
        throw internal_error("x0_of_r: derivative sign change not bracketed");
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (area_A_dx(r, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

PentagonSolution best_area(double r) {
    PentagonSolution sol;
    sol.r = r;
    sol.x = x0_of_r(r);
    sol.y = std::sqrt(1.0 - sq(0.5 + sol.x));
    sol.z = std::sqrt(r * r - sol.x * sol.x);
    sol.area = area_A(std::min(r, 1.0), sol.x);
    sol.points.points = {
        geom::Point{0.5, sol.y - sol.z},  geom::Point{sol.x, -sol.z},
        geom::Point{-sol.x, -sol.z},      geom::Point{-0.5, sol.y - sol.z},
        geom::Point{0.0, 0.0},
    };
    sol.points.labels = {"P1", "P2", "P3", "P4", "P5"};
    sol.tightPairs = {{0, 2, 1.0}, {1, 3, 1.0}, {0, 3, 1.0}, {4, 1, r}, {4, 2, r}};
    return sol;
}

DiameterGraphCase DiameterGraphCase::woodall_graph(CaseTag tag, int apexIndex) {
    if (apexIndex < 0 || apexIndex > 4) throw domain_error("woodall_graph: apexIndex in 0..4");
    DiameterGraphCase g;
    g.tag = tag;
    g.apexIndex = apexIndex;
    switch (tag) {
        case CaseTag::A:
            g.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
            break;
        case CaseTag::B:
            g.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}};
            break;
        case CaseTag::C:
            g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}};
            break;
        case CaseTag::D:
            g.edges = {{0, 1}, {1, 2}, {1, 3}, {0, 4}};
            break;
        case CaseTag::E:
            g.edges = {{0, 2}, {2, 4}, {4, 1}, {1, 3}};
            break;
        case CaseTag::F:
            g.edges = {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}};
            break;
    }
    return g;
}

std::vector<int> DiameterGraphCase::apex_orbit_representatives(CaseTag tag) {
    const DiameterGraphCase g = woodall_graph(tag);
    auto hasEdge = [&](int a, int b) {
        for (const auto& e : g.edges)
            if ((e.first == a && e.second == b) || (e.first == b && e.second == a)) return true;
        return false;
    };
    // vertex orbits of the automorphism group, by brute force over S5
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    std::array<int, 5> orbit{0, 1, 2, 3, 4};
    auto find = [&](int v) {
        while (orbit[static_cast<std::size_t>(v)] != v) v = orbit[static_cast<std::size_t>(v)];
        return v;
    };
    do {
        bool iso = true;
        for (int a = 0; a < 5 && iso; ++a)
            for (int b = a + 1; b < 5 && iso; ++b)
                if (hasEdge(a, b) != hasEdge(perm[static_cast<std::size_t>(a)],
                                             perm[static_cast<std::size_t>(b)]))
                    iso = false;
        if (iso)
            for (int v = 0; v < 5; ++v) {
                const int ra = find(v);
                const int rb = find(perm[static_cast<std::size_t>(v)]);
                if (ra != rb) orbit[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<int> reps;
    for (int v = 0; v < 5; ++v)
        if (find(v) == v) reps.push_back(v);
    return reps;
}

namespace {

// Penalized multistart Nelder-Mead search over k planar points.
// equalityEdges get a two-sided |d - cap| penalty; every pair keeps the
// one-sided cap penalty. Returns the repaired (feasible) configuration.
struct PolygonSearchOutcome {
    double area = 0.0;
    std::vector<double> coords;  // 2k
    long evaluations = 0;
};

PolygonSearchOutcome penalized_polygon_search(const CapMatrix& caps,
                                              const std::vector<std::pair<int, int>>& equalityEdges,
                                              const std::vector<double>& equalityValues,
                                              const oracle::SearchConfig& cfg,
                                              std::uint64_t streamSeed) {
    const int k = caps.k;
    const int dim = 2 * k;
    double maxCap = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) maxCap = std::max(maxCap, caps.at(i, j));

    auto objective = [&](const double* xy, double mu) {
        double pen = 0.0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                const double d = std::hypot(xy[2 * i] - xy[2 * j], xy[2 * i + 1] - xy[2 * j + 1]);
                const double over = d - caps.at(i, j);
                if (over > 0.0) pen += over * over;
            }
        for (std::size_t e = 0; e < equalityEdges.size(); ++e) {
            const auto [i, j] = equalityEdges[e];
            const double d = std::hypot(xy[2 * i] - xy[2 * j], xy[2 * i + 1] - xy[2 * j + 1]);
            pen += sq(d - equalityValues[e]);
        }
        return detail::hull_area_2d(xy, k) - mu * pen;
    };

    Rng rng(streamSeed);
    std::vector<double> x(static_cast<std::size_t>(dim));
    for (int i = 0; i < k; ++i) {
        // uniform in a disk of radius maxCap / 2
        const double a = rng.uniform(0.0, 2.0 * std::acos(-1.0));
        const double rr = 0.5 * maxCap * std::sqrt(rng.uniform());
        x[static_cast<std::size_t>(2 * i)] = rr * std::cos(a);
        x[static_cast<std::size_t>(2 * i + 1)] = rr * std::sin(a);
    }

    PolygonSearchOutcome out;
    double mu = 100.0;
    double step = cfg.initialStep;
    for (int round = 0; round < cfg.penaltyRounds; ++round) {
        auto f = [&](const double* p) { return objective(p, mu); };
        detail::nelder_mead_max(f, x, step, cfg.innerIterations, &out.evaluations);
        mu = std::min(mu * 10.0, 1e8);
        step = std::max(step * 0.25, 1e-6);
    }
    {
        auto f = [&](const double* p) { return objective(p, 1e8); };
        detail::compass_polish(f, x, 1e-3, 1e-11, 4000, &out.evaluations);
    }

    // repair: uniform shrink toward the centroid makes every cap feasible
    double cx = 0.0, cy = 0.0;
    for (int i = 0; i < k; ++i) {
        cx += x[static_cast<std::size_t>(2 * i)] / k;
        cy += x[static_cast<std::size_t>(2 * i + 1)] / k;
    }
    double scale = 1.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const double d = std::hypot(x[static_cast<std::size_t>(2 * i)] - x[static_cast<std::size_t>(2 * j)],
                                        x[static_cast<std::size_t>(2 * i + 1)] - x[static_cast<std::size_t>(2 * j + 1)]);
            if (d > 0.0) scale = std::min(scale, caps.at(i, j) / d);
        }
    out.coords.resize(static_cast<std::size_t>(dim));
    for (int i = 0; i < k; ++i) {
        out.coords[static_cast<std::size_t>(2 * i)] = cx + scale * (x[static_cast<std::size_t>(2 * i)] - cx);
        out.coords[static_cast<std::size_t>(2 * i + 1)] = cy + scale * (x[static_cast<std::size_t>(2 * i + 1)] - cy);
    }
    out.area = detail::hull_area_2d(out.coords.data(), k);
    return out;
}

geom::PointSet coords_to_pointset(const std::vector<double>& coords, int k) {
    geom::PointSet ps;
    ps.points.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        ps.points.push_back(geom::Point{coords[static_cast<std::size_t>(2 * i)],
                                        coords[static_cast<std::size_t>(2 * i + 1)]});
    return ps;
}

}  // namespace

std::pair<geom::PointSet, double> maximize_capped_polygon(const CapMatrix& caps,
                                                          const oracle::SearchConfig& cfg) {
    caps.validate();
    cfg.validate();
    if (caps.k < 3) throw domain_error("maximize_capped_polygon: k must be >= 3");

    std::vector<PolygonSearchOutcome> outcomes(static_cast<std::size_t>(cfg.starts));
    detail::run_starts(cfg.starts, cfg.threads, [&](int s) {
        outcomes[static_cast<std::size_t>(s)] = penalized_polygon_search(
            caps, {}, {}, cfg, mix_seed(cfg.seed, static_cast<std::uint64_t>(s)));
    });
    std::vector<double> values(outcomes.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) values[i] = outcomes[i].area;
    const int best = detail::argmax_lowest(values);
    return {coords_to_pointset(outcomes[static_cast<std::size_t>(best)].coords, caps.k),
            outcomes[static_cast<std::size_t>(best)].area};
}

std::pair<double, geom::PointSet> case_max(CaseTag tag, double r, const oracle::SearchConfig& cfg) {
    cfg.validate();
    if (r < kInvSqrt2 - 1e-12 || r > 1.0 + 1e-12)
        throw domain_error("case_max: r outside [1/sqrt2, 1]");

    const std::vector<int> reps = DiameterGraphCase::apex_orbit_representatives(tag);
    double bestArea = -1.0;
    geom::PointSet bestPoints;
    for (std::size_t a = 0; a < reps.size(); ++a) {
        const int apex = reps[a];
        const DiameterGraphCase g = DiameterGraphCase::woodall_graph(tag, apex);
        CapMatrix caps(5, 1.0);
        for (int i = 0; i < 5; ++i)
            if (i != apex) caps.set(i, apex, r);
        std::vector<std::pair<int, int>> eq = g.edges;
        std::vector<double> eqVal;
        eqVal.reserve(eq.size());
        for (const auto& e : eq)
            eqVal.push_back((e.first == apex || e.second == apex) ? r : 1.0);

        std::vector<PolygonSearchOutcome> outcomes(static_cast<std::size_t>(cfg.starts));
        detail::run_starts(cfg.starts, cfg.threads, [&](int s) {
            outcomes[static_cast<std::size_t>(s)] = penalized_polygon_search(
                caps, eq, eqVal, cfg,
                mix_seed(cfg.seed ^ (0x517cc1b727220a95ULL * (a + 1)),
                         static_cast<std::uint64_t>(s)));
        });
        std::vector<double> values(outcomes.size());
        for (std::size_t i = 0; i < outcomes.size(); ++i) values[i] = outcomes[i].area;
        const int best = detail::argmax_lowest(values);
        if (outcomes[static_cast<std::size_t>(best)].area > bestArea) {
            bestArea = outcomes[static_cast<std::size_t>(best)].area;
            bestPoints = coords_to_pointset(outcomes[static_cast<std::size_t>(best)].coords, 5);
        }
    }
    return {bestArea, bestPoints};
}

namespace {

// Case-(e) configuration from its angles; apex P5 at the origin,
// indices 0..4 = P1..P5.
//   P2 = r (sin(b/2), -cos(b/2)),  P3 = r (-sin(b/2), -cos(b/2)),
//   P1 = P3 + unit(dir(P5->P2) + alpha1),
//   P4 = P2 + unit(dir(P5->P3) - alpha2).
std::array<double, 10> case_e_points(double r, const CaseEAngles& ang) {
    const double sb = std::sin(ang.beta / 2.0);
    const double cb = std::cos(ang.beta / 2.0);
    std::array<double, 10> p{};
    p[2] = r * sb;    // P2
    p[3] = -r * cb;
    p[4] = -r * sb;   // P3
    p[5] = -r * cb;
    const double phi2 = std::atan2(-cb, sb);
    const double phi3 = std::atan2(-cb, -sb);
    const double t1 = phi2 + ang.alpha1;
    const double t2 = phi3 - ang.alpha2;
    p[0] = p[4] + std::cos(t1);  // P1
    p[1] = p[5] + std::sin(t1);
    p[6] = p[2] + std::cos(t2);  // P4
    p[7] = p[3] + std::sin(t2);
    p[8] = 0.0;  // P5
    p[9] = 0.0;
    return p;
}

// worst cap violation among the non-edge pairs (edges hold by construction)
double case_e_slack(double r, const std::array<double, 10>& p) {
    auto dist = [&](int i, int j) {
        return std::hypot(p[static_cast<std::size_t>(2 * i)] - p[static_cast<std::size_t>(2 * j)],
                          p[static_cast<std::size_t>(2 * i + 1)] - p[static_cast<std::size_t>(2 * j + 1)]);
    };
    // non-edges: (P1,P5) <= r, (P4,P5) <= r, (P1,P2) <= 1, (P1,P4) <= 1,
    //            (P2,P3) <= 1, (P3,P4) <= 1
    double slack = r - dist(0, 4);
    slack = std::min(slack, r - dist(3, 4));
    slack = std::min(slack, 1.0 - dist(0, 1));
    slack = std::min(slack, 1.0 - dist(0, 3));
    slack = std::min(slack, 1.0 - dist(1, 2));
    slack = std::min(slack, 1.0 - dist(2, 3));
    return slack;  // negative = infeasible
}

}  // namespace

CaseEScanResult case_e_scan(double r, int starts, std::uint64_t seed) {
    if (r < kInvSqrt2 - 1e-12 || r > 1.0 + 1e-12)
        throw domain_error("case_e_scan: r outside [1/sqrt2, 1]");
    if (starts < 1) throw domain_error("case_e_scan: starts must be >= 1");

    const double pi = std::acos(-1.0);
    // pentagon area in boundary order P1, P5, P4, P3, P2 (smooth in the
    // angles, unlike the hull area; a vertex collapsing inward shrinks it)
    auto areaOf = [&](const CaseEAngles& ang) -> double {
        if (ang.beta <= 0.0 || ang.beta >= pi) return -1.0;
        const auto p = case_e_points(r, ang);
        if (case_e_slack(r, p) < 0.0) return -1.0;  // infeasible: hard reject
        constexpr int order[5] = {0, 4, 3, 2, 1};
        double s = 0.0;
        for (int i = 0; i < 5; ++i) {
            const int a = order[i];
            const int b = order[(i + 1) % 5];
            s += p[static_cast<std::size_t>(2 * a)] * p[static_cast<std::size_t>(2 * b + 1)] -
                 p[static_cast<std::size_t>(2 * b)] * p[static_cast<std::size_t>(2 * a + 1)];
        }
        return std::fabs(s) / 2.0;
    };

    CaseEScanResult out;
    out.runs = starts;
    std::vector<double> bestPerRun(static_cast<std::size_t>(starts), 0.0);
    std::vector<char> boundary(static_cast<std::size_t>(starts), 0);
    std::vector<std::pair<bool, CaseEAngles>> stationary(static_cast<std::size_t>(starts));

    detail::run_starts(starts, 0, [&](int s) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
        CaseEAngles ang;
        for (int attempt = 0; attempt < 4000; ++attempt) {
            ang.alpha1 = rng.uniform(0.9, 2.2);
            ang.alpha2 = rng.uniform(0.9, 2.2);
            ang.beta = rng.uniform(0.2, 1.6);
            const auto p = case_e_points(r, ang);
            if (case_e_slack(r, p) > 1e-3) break;
        }
        // compass ascent over the three angles
        double step = 0.1;
        double fx = areaOf(ang);
        while (step > 1e-10) {
            bool improved = false;
            for (int j = 0; j < 3; ++j)
                for (double sgn : {+1.0, -1.0}) {
                    CaseEAngles trial = ang;
                    (j == 0 ? trial.alpha1 : j == 1 ? trial.alpha2 : trial.beta) += sgn * step;
                    if (trial.beta < 0.0) trial.beta = 0.0;
                    const double ft = areaOf(trial);
                    if (ft > fx) {
                        fx = ft;
                        ang = trial;
                        improved = true;
                    }
                }
            if (!improved) step *= 0.5;
        }
        bestPerRun[static_cast<std::size_t>(s)] = fx;
        const auto p = case_e_points(r, ang);
        const double slack = case_e_slack(r, p);
        const bool onBoundary = ang.beta <= 1e-5 || slack <= 1e-5;
        boundary[static_cast<std::size_t>(s)] = onBoundary ? 1 : 0;
        if (!onBoundary) {
            // central-difference gradient; near-stationary interior points are
            // recorded for the alpha = pi/2 probe
            const double h = 1e-6;
            double gmax = 0.0;
            for (int j = 0; j < 3; ++j) {
                CaseEAngles up = ang, dn = ang;
                (j == 0 ? up.alpha1 : j == 1 ? up.alpha2 : up.beta) += h;
                (j == 0 ? dn.alpha1 : j == 1 ? dn.alpha2 : dn.beta) -= h;
                const double fu = areaOf(up);
                const double fd = areaOf(dn);
                if (fu < 0.0 || fd < 0.0) continue;
                gmax = std::max(gmax, std::fabs(fu - fd) / (2.0 * h));
            }
            if (gmax <= 1e-5) stationary[static_cast<std::size_t>(s)] = {true, ang};
        }
    });

    out.supremum = *std::max_element(bestPerRun.begin(), bestPerRun.end());
    out.boundaryRuns = std::count(boundary.begin(), boundary.end(), 1);
    out.allRunsHitBoundary = out.boundaryRuns == starts;
    for (const auto& [isStat, ang] : stationary)
        if (isStat) out.interiorStationaryPoints.push_back(ang);
    return out;
}

}  // namespace maxpoly::pentagon
