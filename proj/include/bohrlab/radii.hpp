#pragma once

#include <functional>
#include <vector>

#include "bohrlab/matrix_series.hpp"

namespace bohrlab {

struct RadiusQuery {
    int n = 1;
    double p = 1.0;
    double tol = 1e-12;  // residual tolerance; bracket width converges to 1e-13
};

// Unconditionally convergent bracketed bisection for a monotone sign change.
// fn(lo) and fn(hi) must differ in sign.
struct BisectOptions {
    double residual_tol = 1e-12;
    double width_tol = 1e-13;
    int max_iter = 200;
};
double bisect(const std::function<double(double)>& fn, double lo, double hi,
              const BisectOptions& opts = {});

// Psi(r) = p (1 - r)^2 - 2 r^N (1 + r); decreasing on [0, 1] with
// Psi(0) = p > 0 and Psi(1) = -4 < 0.
double rnp_residual(int n, double p, double r);

// The unique root of Psi in (0, 1).
double solve_rnp(const RadiusQuery& q);
double solve_rnp(int n, double p);

// 1/sqrt(1 - r^2): upper bound of the growth function m(r) (valid as
// stated for scalar coefficients; see mchi_upper_caveat_note).
double mchi_upper(double r);

// Operative lower bound: the maximized Moebius majorant for r >= 1/3,
// and 1 below (m is always >= 1).
double mchi_lower(double r);

// The lower-bound expression as printed, (3 - sqrt(8(1-r^2)))/(1 - r).
// Inconsistent with the maximization it is supposed to summarize (it
// exceeds mchi_upper at r = 1/sqrt 2); reported for comparison, never
// used as the operative bound.
double mchi_printed_lower(double r);

// The H^2-style step "sum ||A_k||^2 <= 1" behind mchi_upper fails for
// matrix dimension >= 2; diag(z, z^2) reaches 2. The conclusion is only
// asserted here for scalar samples; sweeps search for counterexamples.
const char* mchi_upper_caveat_note();

// sum_k ||A_k||^2, the quantity in that proof step.
double h2_coefficient_sum(const MatrixSeries1D& f);

// Bisect the r where r * bound(r) = 1; bound must be nondecreasing with
// a crossing inside (0, 1).
double product_crossing(const std::function<double(double)>& bound);

enum class BohrMode { plain, zero_head };

struct BohrEstimate {
    double radius = 0.0;      // largest r found with sup-over-samples majorant <= 1
    double sup_margin = 0.0;  // 1 - sup majorant at the returned r
    int samples = 0;
    int truncation = 0;       // max series degree across the set
};

// Empirical Bohr-radius estimate over a sample set: the sup over samples
// is a lower bound of the growth function, so the returned radius is an
// upper bound of the true radius. zero_head mode requires A_0 = 0.
BohrEstimate bohr_radius_estimate(const std::vector<MatrixSeries1D>& samples, BohrMode mode,
                                  double tol = 1e-4);

}  // namespace bohrlab
