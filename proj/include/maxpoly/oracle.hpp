#pragma once

#include <cstdint>
#include <vector>

#include "maxpoly/geom.hpp"

namespace maxpoly::pentagon {
struct CapMatrix;
}

namespace maxpoly::oracle {

// Budget and seed for a multistart search. Deterministic: identical configs
// give bit-identical results regardless of thread count.
struct SearchConfig {
    std::uint64_t seed = 1;
    int starts = 64;
    int innerIterations = 2000;
    double initialStep = 0.2;
    double shrinkFactor = 0.5;
    int penaltyRounds = 7;
    int threads = 0;  // 0 = hardware concurrency

    void validate() const;
};

struct SearchResult {
    double bestValue = 0.0;
    geom::PointSet bestPoints;
    bool feasible = false;
    std::vector<double> perStartValues;  // indexed by start
    long evaluations = 0;
};

// Multistart coordinate-wise pattern search maximizing planar hull area
// subject to the pairwise caps. Feasible to 1e-9 after repair.
SearchResult search_max_area_polygon(const pentagon::CapMatrix& caps, const SearchConfig& cfg);

// Same scheme over 3D points with diameter cap 1, objective hull volume.
SearchResult search_max_volume_3d(int pointCount, const SearchConfig& cfg);

// Random octahedral-type six-point configurations (apexes P, Q plus four
// points whose hull facets all touch P or Q): zero the four points' axial
// components and check that pairwise distances never grow and the hull
// volume is unchanged.
struct ProjectionReport {
    long trials = 0;
    long distanceViolations = 0;
    long volumeMismatches = 0;
    long structureResamples = 0;  // rejected draws outside the octahedral case
    double maxVolumeDelta = 0.0;
    bool pass = false;
};
ProjectionReport verify_projection_monotonicity(long trials, const SearchConfig& cfg);

// Worst cap violation of a configuration, max(0, d_ij - cap_ij) over pairs.
double max_cap_violation(const geom::PointSet& points, const pentagon::CapMatrix& caps);

}  // namespace maxpoly::oracle
