#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "maxpoly/geom.hpp"
#include "maxpoly/oracle.hpp"

namespace maxpoly::pentagon {

// Symmetric matrix of pairwise distance caps D_ij (diagonal ignored).
struct CapMatrix {
    int k = 0;
    std::vector<double> caps;  // row-major k*k

    CapMatrix() = default;
    CapMatrix(int k_, double fill);

    double at(int i, int j) const { return caps[static_cast<std::size_t>(i) * k + j]; }
    void set(int i, int j, double v) {
        caps[static_cast<std::size_t>(i) * k + j] = v;
        caps[static_cast<std::size_t>(j) * k + i] = v;
    }
    // symmetric, positive, finite off-diagonal entries
    void validate() const;

    // k = 5, row/column of the apex (index 4) = r, all other pairs 1.
    static CapMatrix pentagon_pattern(double r);
};

enum class CaseTag { A, B, C, D, E, F };

// One of Woodall's six admissible diameter graphs on 5 vertices (any two
// tight segments must cross, which limits the graph to these shapes).
// apexIndex marks which vertex plays the apex role P5; its incident pairs
// carry cap r, all other pairs cap 1.
struct DiameterGraphCase {
    CaseTag tag = CaseTag::A;
    std::vector<std::pair<int, int>> edges;  // 0-based vertex pairs
    int apexIndex = 4;

    static DiameterGraphCase woodall_graph(CaseTag tag, int apexIndex = 4);
    // Representative apex assignments, one per orbit of the automorphism group.
    static std::vector<int> apex_orbit_representatives(CaseTag tag);
};

// Solution of the symmetric case-(f) subproblem at radius r, in the
// canonical coordinates with P5 translated to the origin:
//   P1 = ( 1/2, y - z),  P2 = ( x, -z),  P3 = (-x, -z),
//   P4 = (-1/2, y - z),  P5 = ( 0,  0),
// where y = sqrt(1 - (1/2 + x)^2) and z = sqrt(r^2 - x^2).
struct PentagonSolution {
    double r = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double area = 0.0;
    geom::PointSet points;  // P1..P5, dim 2
    struct TightPair {
        int i, j;     // 0-based point indices
        double cap;   // 1 or r
    };
    std::vector<TightPair> tightPairs;
};

// Angles parameterizing a case-(e) configuration: alpha1/alpha2 are the
// crossing angles of opposite path edges, beta the angle at the apex between
// its two cap-r edges.
struct CaseEAngles {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double beta = 0.0;
};

// A(r, x) = (1/2) x sqrt(3 - 4x - 4x^2) + (1/2) sqrt(r^2 - x^2).
// Domain: 0 <= x <= min(1/2, r).
double area_A(double r, double x);

// Analytic dA/dx.
double area_A_dx(double r, double x);

// Unique stationary point of x -> A(r, x) in (0, 1/2), bracketed bisection of
// dA/dx to bracket width <= 1e-13. r in [1/sqrt2 - 1e-12, 1 + 1e-12].
double x0_of_r(double r);

// PentagonSolution at x = x0_of_r(r).
PentagonSolution best_area(double r);

// Maximize hull area of k planar points subject to d(P_i,P_j) <= D_ij.
// Multistart penalized Nelder-Mead descent; the returned configuration is
// feasible to 1e-9; deterministic for a fixed seed.
std::pair<geom::PointSet, double> maximize_capped_polygon(const CapMatrix& caps,
                                                          const oracle::SearchConfig& cfg);

// Maximize pentagon area with distance = cap on every edge of the case graph
// and distance <= cap elsewhere, over all apex-role assignments consistent
// with the graph's automorphisms.
std::pair<double, geom::PointSet> case_max(CaseTag tag, double r,
                                           const oracle::SearchConfig& cfg);

// Gradient-free ascent in case-(e) angle space from random interior starts.
struct CaseEScanResult {
    double supremum = 0.0;
    bool allRunsHitBoundary = false;
    // interior near-stationary endpoints, if any (there should be none)
    std::vector<CaseEAngles> interiorStationaryPoints;
    long boundaryRuns = 0;
    long runs = 0;
};
CaseEScanResult case_e_scan(double r, int starts, std::uint64_t seed = 1);

}  // namespace maxpoly::pentagon
