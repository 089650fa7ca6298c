#include "search_util.hpp"

#include <algorithm>
#include <numeric>

namespace maxpoly::detail {

double hull_area_2d(const double* xy, int k) {
    // monotone chain over at most a few dozen points
    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pts[static_cast<std::size_t>(i)] = {xy[2 * i], xy[2 * i + 1]};
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n < 3) return 0.0;
    auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                    const std::pair<double, double>& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<double, double>> hull(static_cast<std::size_t>(2 * n));
    int m = 0;
    for (int i = 0; i < n; ++i) {
        while (m >= 2 && cross(hull[static_cast<std::size_t>(m - 2)],
                               hull[static_cast<std::size_t>(m - 1)],
                               pts[static_cast<std::size_t>(i)]) <= 0)
            --m;
        hull[static_cast<std::size_t>(m++)] = pts[static_cast<std::size_t>(i)];
    }
    const int lower = m + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (m >= lower && cross(hull[static_cast<std::size_t>(m - 2)],
                                   hull[static_cast<std::size_t>(m - 1)],
                                   pts[static_cast<std::size_t>(i)]) <= 0)
            --m;
        hull[static_cast<std::size_t>(m++)] = pts[static_cast<std::size_t>(i)];
    }
    double s = 0.0;
    for (int i = 0; i < m - 1; ++i) {
        const auto& a = hull[static_cast<std::size_t>(i)];
        const auto& b = hull[static_cast<std::size_t>((i + 1) % (m - 1))];
        s += a.first * b.second - b.first * a.second;
    }
    return std::fabs(s) / 2.0;
}

double nelder_mead_max(const std::function<double(const double*)>& f, std::vector<double>& x,
                       double step, int maxIterations, long* evaluations) {
    const int dim = static_cast<int>(x.size());
    auto eval = [&](const std::vector<double>& p) {
        if (evaluations) ++*evaluations;
        return -f(p.data());  // minimize -f
    };

    std::vector<std::vector<double>> simplex(static_cast<std::size_t>(dim + 1), x);
    std::vector<double> fv(static_cast<std::size_t>(dim + 1));
    for (int i = 0; i < dim; ++i) simplex[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] += step;
    for (int i = 0; i <= dim; ++i) fv[static_cast<std::size_t>(i)] = eval(simplex[static_cast<std::size_t>(i)]);

    std::vector<int> order(static_cast<std::size_t>(dim + 1));
    std::vector<double> centroid(static_cast<std::size_t>(dim));
    std::vector<double> xr(static_cast<std::size_t>(dim)), xe(static_cast<std::size_t>(dim)),
        xc(static_cast<std::size_t>(dim));

    for (int iter = 0; iter < maxIterations; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return fv[static_cast<std::size_t>(a)] < fv[static_cast<std::size_t>(b)];
        });
        const int best = order[0];
        const int worst = order[static_cast<std::size_t>(dim)];
        const int second = order[static_cast<std::size_t>(dim - 1)];

        if (std::fabs(fv[static_cast<std::size_t>(worst)] - fv[static_cast<std::size_t>(best)]) <
            1e-14 * (1.0 + std::fabs(fv[static_cast<std::size_t>(best)])))
            break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (int i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (int j = 0; j < dim; ++j)
                centroid[static_cast<std::size_t>(j)] +=
                    simplex[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / dim;
        }

        for (int j = 0; j < dim; ++j)
            xr[static_cast<std::size_t>(j)] =
                centroid[static_cast<std::size_t>(j)] +
                (centroid[static_cast<std::size_t>(j)] -
                 simplex[static_cast<std::size_t>(worst)][static_cast<std::size_t>(j)]);
        const double fr = eval(xr);

        if (fr < fv[static_cast<std::size_t>(best)]) {
            for (int j = 0; j < dim; ++j)
                xe[static_cast<std::size_t>(j)] =
                    centroid[static_cast<std::size_t>(j)] +
                    2.0 * (centroid[static_cast<std::size_t>(j)] -
                           simplex[static_cast<std::size_t>(worst)][static_cast<std::size_t>(j)]);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[static_cast<std::size_t>(worst)] = xe;
                fv[static_cast<std::size_t>(worst)] = fe;
            } else {
                simplex[static_cast<std::size_t>(worst)] = xr;
                fv[static_cast<std::size_t>(worst)] = fr;
            }
        } else if (fr < fv[static_cast<std::size_t>(second)]) {
            simplex[static_cast<std::size_t>(worst)] = xr;
            fv[static_cast<std::size_t>(worst)] = fr;
        } else {
            const bool outside = fr < fv[static_cast<std::size_t>(worst)];
            for (int j = 0; j < dim; ++j) {
                const double w =
                    simplex[static_cast<std::size_t>(worst)][static_cast<std::size_t>(j)];
                xc[static_cast<std::size_t>(j)] =
                    outside ? centroid[static_cast<std::size_t>(j)] +
                                  0.5 * (xr[static_cast<std::size_t>(j)] -
                                         centroid[static_cast<std::size_t>(j)])
                            : centroid[static_cast<std::size_t>(j)] +
                                  0.5 * (w - centroid[static_cast<std::size_t>(j)]);
            }
            const double fc = eval(xc);
            if (fc < std::min(fr, fv[static_cast<std::size_t>(worst)])) {
                simplex[static_cast<std::size_t>(worst)] = xc;
                fv[static_cast<std::size_t>(worst)] = fc;
            } else {
                // shrink toward the best vertex
                for (int i = 0; i <= dim; ++i) {
                    if (i == best) continue;
                    for (int j = 0; j < dim; ++j)
                        simplex[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                            simplex[static_cast<std::size_t>(best)][static_cast<std::size_t>(j)] +
                            0.5 * (simplex[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                   simplex[static_cast<std::size_t>(best)][static_cast<std::size_t>(j)]);
                    fv[static_cast<std::size_t>(i)] = eval(simplex[static_cast<std::size_t>(i)]);
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= dim; ++i)
        if (fv[static_cast<std::size_t>(i)] < fv[static_cast<std::size_t>(best)]) best = i;
    x = simplex[static_cast<std::size_t>(best)];
    return -fv[static_cast<std::size_t>(best)];
}

double compass_polish(const std::function<double(const double*)>& f, std::vector<double>& x,
                      double step0, double stepTol, int maxPasses, long* evaluations) {
    const int dim = static_cast<int>(x.size());
    auto eval = [&](const std::vector<double>& p) {
        if (evaluations) ++*evaluations;
        return f(p.data());
    };
    double fx = eval(x);
    double step = step0;
    std::vector<double> trial = x;
    for (int pass = 0; pass < maxPasses && step > stepTol; ++pass) {
        bool improved = false;
        for (int j = 0; j < dim; ++j) {
            for (double sgn : {+1.0, -1.0}) {
                trial = x;
                trial[static_cast<std::size_t>(j)] += sgn * step;
                const double ft = eval(trial);
                if (ft > fx) {
                    fx = ft;
                    x = trial;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return fx;
}

}  // namespace maxpoly::detail
