// Test-only independent oracles. These deliberately avoid the library's code
// paths: the grid scan never touches the derivative/bisection machinery, the
// Cayley-Menger determinant never touches the hull code, and the Monte Carlo
// volume never touches the facet decomposition.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace testoracle {

// Dense grid scan of A(r, x) = x/2 sqrt(3-4x-4x^2) + 1/2 sqrt(r^2-x^2)
// at the stated step; returns the argmax.
inline double grid_scan_x0(double r, double step = 1e-6) {
    double bestX = 0.0;
    double bestV = -1.0;
    for (double x = step; x < 0.5; x += step) {
        const double s = 3.0 - 4.0 * x - 4.0 * x * x;
        if (s < 0.0) break;
        const double v = 0.5 * x * std::sqrt(s) + 0.5 * std::sqrt(r * r - x * x);
        if (v > bestV) {
            bestV = v;
            bestX = x;
        }
    }
    return bestX;
}

inline double grid_scan_best_area(double r, double step = 1e-6) {
    const double x = grid_scan_x0(r, step);
    return 0.5 * x * std::sqrt(3.0 - 4.0 * x - 4.0 * x * x) + 0.5 * std::sqrt(r * r - x * x);
}

// Tetrahedron volume from its six squared edge lengths via the Cayley-Menger
// determinant: 288 V^2 = det.
inline double cayley_menger_tetra(double d01, double d02, double d03, double d12, double d13,
                                  double d23) {
    double m[5][5] = {
        {0, 1, 1, 1, 1},
        {1, 0, d01, d02, d03},
        {1, d01, 0, d12, d13},
        {1, d02, d12, 0, d23},
        {1, d03, d13, d23, 0},
    };
    // Gaussian elimination with partial pivoting
    double det = 1.0;
    for (int c = 0; c < 5; ++c) {
        int pivot = c;
        for (int r = c + 1; r < 5; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[pivot][c])) pivot = r;
        if (pivot != c) {
            for (int k = 0; k < 5; ++k) std::swap(m[c][k], m[pivot][k]);
            det = -det;
        }
        det *= m[c][c];
        if (m[c][c] == 0.0) return 0.0;
        for (int r = c + 1; r < 5; ++r) {
            const double f = m[r][c] / m[c][c];
            for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return std::sqrt(std::fabs(det) / 288.0);
}

// Central finite difference.
template <class F>
double central_diff(F&& f, double x, double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// splitmix64 stream, independent of the library's RNG type.
struct Rng64 {
    std::uint64_t s;
    explicit Rng64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Rejection-sampling estimate of the volume of the convex hull of `pts`
// (as point-in-hull via supporting half-space test against all facet planes
// is unavailable here, we test membership with a brute-force LP-free check:
// a point is inside the hull iff it is on the inner side of every supporting
// plane spanned by point triples).
struct McVolume {
    double estimate;
    double standardError;
};

inline McVolume mc_hull_volume(const std::vector<std::array<double, 3>>& pts, int samples,
                               std::uint64_t seed) {
    double lo[3] = {1e30, 1e30, 1e30}, hi[3] = {-1e30, -1e30, -1e30};
    for (const auto& p : pts)
        for (int c = 0; c < 3; ++c) {
            lo[c] = std::min(lo[c], p[c]);
            hi[c] = std::max(hi[c], p[c]);
        }
    const double boxVol = (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]);

    // supporting planes by triple enumeration
    struct Plane {
        double n[3];
        double off;
    };
    std::vector<Plane> planes;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double ax = pts[j][0] - pts[i][0], ay = pts[j][1] - pts[i][1],
                             az = pts[j][2] - pts[i][2];
                const double bx = pts[k][0] - pts[i][0], by = pts[k][1] - pts[i][1],
                             bz = pts[k][2] - pts[i][2];
                double nx = ay * bz - az * by, ny = az * bx - ax * bz, nz = ax * by - ay * bx;
                const double nn = std::sqrt(nx * nx + ny * ny + nz * nz);
                if (nn < 1e-12) continue;
                nx /= nn;
                ny /= nn;
                nz /= nn;
                double mx = 0.0, mn = 0.0;
                for (int q = 0; q < n; ++q) {
                    const double d = nx * (pts[q][0] - pts[i][0]) + ny * (pts[q][1] - pts[i][1]) +
                                     nz * (pts[q][2] - pts[i][2]);
                    mx = std::max(mx, d);
                    mn = std::min(mn, d);
                }
                if (mx > 1e-9 && mn < -1e-9) continue;
                if (mx > 1e-9) {
                    nx = -nx;
                    ny = -ny;
                    nz = -nz;
                }
                planes.push_back({{nx, ny, nz}, nx * pts[i][0] + ny * pts[i][1] + nz * pts[i][2]});
            }

    Rng64 rng(seed);
    int hits = 0;
    for (int s = 0; s < samples; ++s) {
        const double x = rng.uniform(lo[0], hi[0]);
        const double y = rng.uniform(lo[1], hi[1]);
        const double z = rng.uniform(lo[2], hi[2]);
        bool inside = true;
        for (const Plane& pl : planes)
            if (pl.n[0] * x + pl.n[1] * y + pl.n[2] * z - pl.off > 1e-9) {
                inside = false;
                break;
            }
        if (inside) ++hits;
    }
    const double p = static_cast<double>(hits) / samples;
    return {p * boxVol, boxVol * std::sqrt(p * (1.0 - p) / samples)};
}

}  // namespace testoracle
