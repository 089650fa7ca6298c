#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "maxpoly/common.hpp"

namespace maxpoly::detail {

// Runs fn(startIndex) for startIndex in [0, starts) on `threads` workers
// (0 = hardware concurrency). Results land in indexed slots, so the outcome
// is independent of scheduling.
template <class Fn>
void run_starts(int starts, int threads, Fn&& fn) {
    int nThreads = threads > 0 ? threads
                               : static_cast<int>(std::thread::hardware_concurrency());
    if (nThreads < 1) nThreads = 1;
    nThreads = std::min(nThreads, starts);
    if (nThreads == 1) {
        for (int s = 0; s < starts; ++s) fn(s);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nThreads));
    for (int t = 0; t < nThreads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const int s = next.fetch_add(1);
                if (s >= starts) return;
                fn(s);
            }
        });
    for (std::thread& t : pool) t.join();
}

// Index of the maximum value, ties broken by lowest index.
inline int argmax_lowest(const std::vector<double>& values) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(values.size()); ++i)
        if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)])
            best = i;
    return best;
}

// Hull area of planar points (x0,y0,x1,y1,...); 0 for degenerate input.
// Allocation-light variant for optimizer inner loops.
double hull_area_2d(const double* xy, int k);

// Nelder-Mead maximization of f over R^dim starting at x (overwritten with
// the best point found). Deterministic. Returns the best value.
double nelder_mead_max(const std::function<double(const double*)>& f, std::vector<double>& x,
                       double step, int maxIterations, long* evaluations);

// Coordinate-wise compass polish of f (maximization), steps halving from
// step0 down to stepTol.
double compass_polish(const std::function<double(const double*)>& f, std::vector<double>& x,
                      double step0, double stepTol, int maxPasses, long* evaluations);

}  // namespace maxpoly::detail
