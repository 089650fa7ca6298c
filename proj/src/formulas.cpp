#include "maxpoly/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maxpoly/pentagon.hpp"

namespace maxpoly::formulas {

namespace {

// n! as a double: exact u64 values through 20, a running double product
// through 170 (one rounding per step, so shared factors cancel in ratios),
// +inf beyond (callers switch to log space there).
double factorial_d(int n) {
    if (n <= 20) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
        return static_cast<double>(f);
    }
    if (n > 170) return std::numeric_limits<double>::infinity();
    double f = factorial_d(20);
    for (int i = 21; i <= n; ++i) f *= i;
    return f;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

VolumeResult v_simplex(int n) {
    if (n < 1) throw domain_error("v_simplex: n must be >= 1");
    VolumeResult r;
    r.n = n;
    r.k = n + 1;
    r.provenance = "regular-simplex";
    r.log_volume = 0.5 * (std::log(n + 1.0) - n * std::log(2.0)) - log_factorial(n);
    if (n <= 170) {
        // (n+1)/2^n is exact in binary floating point for this range
        r.volume = std::sqrt((n + 1.0) / std::ldexp(1.0, n)) / factorial_d(n);
    } else {
        r.volume = std::exp(r.log_volume);
    }
    return r;
}

VolumeResult v_n_plus_2(int n) {
    if (n < 2) throw domain_error("v_n_plus_2: n must be >= 2");
    VolumeResult r;
    r.n = n;
    r.k = n + 2;
    r.provenance = "double-pyramid";
    r.log_volume = 0.5 * (std::log(static_cast<double>(n)) - (n - 1) * std::log(2.0)) -
                   log_factorial(n);
    if (n <= 170) {
        r.volume = std::sqrt(n / std::ldexp(1.0, n - 1)) / factorial_d(n);
    } else {
        r.volume = std::exp(r.log_volume);
    }
    return r;
}

VolumeResult v2k_odd(int k) {
    if (k < 3) throw domain_error("v2k_odd: k must be >= 3");
    if (k % 2 == 0) throw domain_error("v2k_odd: k must be odd");
    VolumeResult r;
    r.n = 2;
    r.k = k;
    r.provenance = "reinhardt-regular-k-gon";
    const double pi = std::acos(-1.0);
    r.volume = (k / 2.0) * std::cos(pi / k) * std::tan(pi / (2.0 * k));
    r.log_volume = std::log(r.volume);
    return r;
}

double r_of_n(int n) {
    if (n < 3) throw domain_error("r_of_n: n must be >= 3");
    const double nn = static_cast<double>(n);
    return std::sqrt(1.0 - (nn - 2.0) / (2.0 * (nn - 1.0)));
}

double circumradius_expression(int n) {
    if (n < 3) throw domain_error("circumradius_expression: n must be >= 3");
    const double nn = static_cast<double>(n);
    return (nn - 2.0) / (nn - 1.0) * std::sqrt((nn - 1.0) / (2.0 * (nn - 2.0)));
}

VolumeResult v_n_plus_3(int n) {
    if (n < 3) throw domain_error("v_n_plus_3: n must be >= 3");
    const double area = pentagon::best_area(r_of_n(n)).area;
    const VolumeResult base = v_simplex(n - 2);  // V(n-2, n-1), V(1,2) = 1
    VolumeResult r;
    r.n = n;
    r.k = n + 3;
    r.provenance = "pyramidal-pentagon";
    r.volume = (area / n) * base.volume;
    r.log_volume = std::log(area) - std::log(static_cast<double>(n)) + base.log_volume;
    return r;
}

HSweepResult v36_h_sweep(int gridSize) {
    if (gridSize < 2) throw domain_error("v36_h_sweep: gridSize must be >= 2");
    auto g = [](double h) {
        if (h <= 0.0) return 0.0;
        const double r = std::sqrt(1.0 - h * h / 4.0);
        return h * pentagon::area_A(r, pentagon::x0_of_r(r)) / 3.0;
    };
    HSweepResult out;
    out.profile.reserve(static_cast<std::size_t>(gridSize));
    int bestIdx = 0;
    for (int i = 0; i < gridSize; ++i) {
        const double h = static_cast<double>(i) / (gridSize - 1);
        const double v = g(h);
        out.profile.emplace_back(h, v);
        if (v > out.profile[static_cast<std::size_t>(bestIdx)].second) bestIdx = i;
    }
    // golden-section refinement on the bracket around the best grid point
    double lo = out.profile[static_cast<std::size_t>(std::max(0, bestIdx - 1))].first;
    double hi = out.profile[static_cast<std::size_t>(std::min(gridSize - 1, bestIdx + 1))].first;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double gc = g(c), gd = g(d);
    while (b - a > 1e-10) {
        if (gc > gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - invphi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + invphi * (b - a);
            gd = g(d);
        }
    }
    // candidates: refined interior point and the bracket endpoints
    out.argmax_h = 0.5 * (a + b);
    out.max_volume = g(out.argmax_h);
    for (double h : {lo, hi}) {
        const double v = g(h);
        if (v > out.max_volume) {
            out.max_volume = v;
            out.argmax_h = h;
        }
    }
    return out;
}

double octahedral_bound(int n) {
    if (n < 3) throw domain_error("octahedral_bound: n must be >= 3");
    return (1.0 / n) * 0.5 * v_simplex(n - 2).volume;  // V(2,4) = 1/2
}

LimitRatios limit_ratios(long n) {
    if (n < 3) throw domain_error("limit_ratios: n must be >= 3");
    LimitRatios out;
    if (n <= 170) {
        const int ni = static_cast<int>(n);
        out.ratio1 = n * v_n_plus_2(ni).volume / v_simplex(ni - 1).volume;
    } else {
        // shared terms cancel exactly; only the factorial ratio remains
        out.ratio1 = std::exp(std::log(static_cast<double>(n)) +
                              std::lgamma(static_cast<double>(n)) -
                              std::lgamma(static_cast<double>(n) + 1.0));
    }
    // identically A(r(n), x0(r(n))) by the pyramidal theorem
    const double nn = static_cast<double>(n);
    const double r = std::sqrt(1.0 - (nn - 2.0) / (2.0 * (nn - 1.0)));
    out.ratio2 = pentagon::best_area(r).area;
    return out;
}

namespace {

// Euler totient by trial factorization.
mpz_class totient(unsigned long d) {
    mpz_class result = 1;
    unsigned long m = d;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        unsigned long pk = 1;
        while (m % p == 0) {
            m /= p;
            pk *= p;
        }
        result *= mpz_class(pk - pk / p);
    }
    if (m > 1) result *= mpz_class(m - 1);
    return result;
}

mpz_class pow_ui(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

}  // namespace

CountResult trackleation_count(long m) {
    if (m < 1) throw domain_error("trackleation_count: m must be >= 1");
    const unsigned long mu = static_cast<unsigned long>(m);
    mpz_class sum = 0;
    for (unsigned long d = 1; d <= mu; ++d) {
        if (mu % d != 0 || d % 2 == 0) continue;
        sum += totient(d) * pow_ui(4, mu / d);
    }
    mpq_class total(sum, mpz_class(8 * m));
    if (m >= 2)
        total += pow_ui(4, mu - 2);
    else
        total += mpq_class(1, 4);  // 4^(m-2) with m = 1
    total += pow_ui(2, mu - 1);
    total -= 1;
    total.canonicalize();
    CountResult out;
    out.parameter = m;
    out.value = total;
    return out;
}

CountResult bender_wormald(long k) {
    if (k < 4) throw domain_error("bender_wormald: k must be >= 4");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(4 * k - 10),
                 static_cast<unsigned long>(k + 2));
    mpz_class den = 972;
    den *= mpz_class(k - 1);
    den *= mpz_class(2 * k - 5);
    den *= mpz_class(3 * k - 6);
    mpq_class q(binom, den);
    q.canonicalize();
    CountResult out;
    out.parameter = k;
    out.value = q;
    return out;
}

}  // namespace maxpoly::formulas
