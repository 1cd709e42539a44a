#include "bohrlab/radii.hpp"

#include <cmath>
#include <stdexcept>

#include "bohrlab/extremals.hpp"

namespace bohrlab {

double bisect(const std::function<double(double)>& fn, double lo, double hi,
              const BisectOptions& opts) {
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::invalid_argument("bisect: endpoints do not bracket a sign change");
    }
    double mid = 0.5 * (lo + hi);
    double fm = fn(mid);
    for (int it = 0; it < opts.max_iter; ++it) {
        if (fm == 0.0) {
            return mid;
        }
        if (hi - lo <= opts.width_tol && std::abs(fm) <= opts.residual_tol) {
            return mid;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        double next = 0.5 * (lo + hi);
        if (next == mid) {
            return mid;  // bracket exhausted at double precision
        }
        mid = next;
        fm = fn(mid);
    }
    return mid;
}

double rnp_residual(int n, double p, double r) {
    return p * (1.0 - r) * (1.0 - r) - 2.0 * std::pow(r, n) * (1.0 + r);
}

double solve_rnp(const RadiusQuery& q) {
    if (q.n < 1 || !(q.p > 0.0 && q.p <= 1.0) || !(q.tol >= 1e-14)) {
        throw std::invalid_argument("solve_rnp: need N >= 1, p in (0, 1], tol >= 1e-14");
    }
    BisectOptions opts;
    opts.residual_tol = q.tol;
    return bisect([&](double r) { return rnp_residual(q.n, q.p, r); }, 0.0, 1.0, opts);
}

double solve_rnp(int n, double p) {
    return solve_rnp(RadiusQuery{n, p, 1e-12});
}

double mchi_upper(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("mchi_upper: r must lie in [0, 1)");
    }
    return 1.0 / std::sqrt(1.0 - r * r);
}

double mchi_lower(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("mchi_lower: r must lie in [0, 1)");
    }
    if (r < 1.0 / 3.0) {
        return 1.0;
    }
    return bombieri_maximizer(r).value;
}

double mchi_printed_lower(double r) {
    return (3.0 - std::sqrt(8.0 * (1.0 - r * r))) / (1.0 - r);
}

const char* mchi_upper_caveat_note() {
    return "coefficient-square step fails for dim >= 2: diag(z, z^2) has unit sup-norm "
           "but sum ||A_k||^2 = 2; the upper bound is asserted for scalar samples only";
}

double h2_coefficient_sum(const MatrixSeries1D& f) {
    double sum = 0.0;
    for (int k = 0; k <= f.degree(); ++k) {
        double nk = f.coeff_norm(k);
        sum += nk * nk;
    }
    return sum;
}

double product_crossing(const std::function<double(double)>& bound) {
    BisectOptions opts;
    opts.residual_tol = 1e-9;
    opts.width_tol = 1e-12;
    return bisect([&](double r) { return 1.0 - r * bound(r); }, 0.0, 1.0 - 1e-9, opts);
}

BohrEstimate bohr_radius_estimate(const std::vector<MatrixSeries1D>& samples, BohrMode mode,
                                  double tol) {
    if (samples.empty()) {
        throw std::invalid_argument("bohr_radius_estimate: empty sample set");
    }
    if (mode == BohrMode::zero_head) {
        for (const auto& f : samples) {
            if (f.coeff_norm(0) > kScalarHeadTol) {
                throw std::invalid_argument("bohr_radius_estimate: zero_head mode requires A_0 = 0");
            }
        }
    }
    int truncation = 0;
    for (const auto& f : samples) {
        truncation = std::max(truncation, f.degree());
    }
    auto sup_majorant = [&](double r) {
        double sup = 0.0;
        for (const auto& f : samples) {
            sup = std::max(sup, f.majorant(r));
        }
        return sup;
    };
    // Monotone bisection: lo always passes (sup <= 1), hi fails or is the
    // open right end of the admissible interval.
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (sup_majorant(mid) <= 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    BohrEstimate est;
    est.radius = lo;
    est.sup_margin = 1.0 - sup_majorant(lo);
    est.samples = static_cast<int>(samples.size());
    est.truncation = truncation;
    return est;
}

}  // namespace bohrlab
