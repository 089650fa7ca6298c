#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "maxpoly/common.hpp"

namespace maxpoly::formulas {

// One maximal-volume value V(n, k) with the formula that produced it.
struct VolumeResult {
    int n = 0;
    int k = 0;
    double volume = 0.0;
    double log_volume = 0.0;  // natural log; authoritative for very large n
    std::string provenance;
};

// Exact rational output of a counting formula, in lowest terms.
struct CountResult {
    long parameter = 0;
    mpq_class value;

    bool is_integer() const { return value.get_den() == 1; }
};

// V(n, n+1) = (1/n!) sqrt((n+1)/2^n), the regular n-simplex. n >= 1.
VolumeResult v_simplex(int n);

// V(n, n+2) = (1/n) V(n-1, n) = (1/n!) sqrt(n/2^(n-1)), the double pyramid. n >= 2.
VolumeResult v_n_plus_2(int n);

// V(2, k) = (k/2) cos(pi/k) tan(pi/2k) for odd k >= 3, the regular k-gon.
VolumeResult v2k_odd(int k);

// r(n) = sqrt(1 - (n-2)/(2(n-1))), the planar cap radius of the pyramidal
// construction. n >= 3.
double r_of_n(int n);

// Circumradius of the regular (n-2)-simplex with unit edge, written as in the
// n >= 3 construction: (n-2)/(n-1) * sqrt((n-1)/(2(n-2))).
double circumradius_expression(int n);

// V(n, n+3) = A(r(n), x0(r(n))) / n * V(n-2, n-1). n >= 3.
VolumeResult v_n_plus_3(int n);

// Sweep of g(h) = (1/3) h A(sqrt(1-h^2/4), x0(...)) over h in [0,1] on a
// uniform grid plus golden-section refinement near the best grid point.
struct HSweepResult {
    double argmax_h = 0.0;
    double max_volume = 0.0;
    std::vector<std::pair<double, double>> profile;  // (h, g(h)) grid rows
};
HSweepResult v36_h_sweep(int gridSize);

// (1/n) V(2,4) V(n-2, n-1), the octahedral-case volume bound. n >= 3.
double octahedral_bound(int n);

// ratio1 = n V(n,n+2) / V(n-1,n)  (identically 1);
// ratio2 = n V(n,n+3) / V(n-2,n-1) = A(r(n), x0(r(n))).
struct LimitRatios {
    double ratio1 = 0.0;
    double ratio2 = 0.0;
};
LimitRatios limit_ratios(long n);

// (1/8m) sum_{d|m, d odd} phi(d) 4^(m/d) + 4^(m-2) + 2^(m-1) - 1, exact. m >= 1.
CountResult trackleation_count(long m);

// (1 / (972(k-1)(2k-5)(3k-6))) C(4k-10, k+2), exact. k >= 4.
CountResult bender_wormald(long k);

}  // namespace maxpoly::formulas
