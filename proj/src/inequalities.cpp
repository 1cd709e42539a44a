#include "bohrlab/inequalities.hpp"

#include <cmath>
#include <numbers>

#include "bohrlab/extremals.hpp"

namespace bohrlab {

namespace {

constexpr double kAdmissibilitySlack = 1e-14;

ScalarHead check_hypotheses(const MatrixSeries1D& f, double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("inequality check: r must lie in [0, 1)");
    }
    ScalarHead head = f.scalar_head();
    if (!head.present) {
        throw std::invalid_argument("inequality check: constant coefficient must be a0 * I");
    }
    if (std::abs(head.a0) >= 1.0) {
        throw std::invalid_argument("inequality check: |a0| must be < 1");
    }
    return head;
}

// tail of sum_{k > D} k x^k
double weighted_geometric_tail(double x, int deg) {
    return std::pow(x, deg + 1) * ((deg + 1) - deg * x) / ((1.0 - x) * (1.0 - x));
}

}  // namespace

GPolynomial::GPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("GPolynomial: needs at least one coefficient");
    }
    for (double c : coeffs_) {
        if (!(c > 0.0)) {
            throw std::invalid_argument("GPolynomial: all coefficients must be positive");
        }
    }
}

double GPolynomial::eval(double w) const {
    double sum = 0.0;
    double wm = w;
    for (double c : coeffs_) {
        sum += c * wm;
        wm *= w;
    }
    return sum;
}

double g_constraint_check(const GPolynomial& g) {
    const double x = 3.0 / 8.0;
    double sum = 0.0;
    double xm = x * x;  // (3/8)^{2m}
    for (std::size_t m = 1; m <= g.coeffs().size(); ++m) {
        sum += 8.0 * (2.0 * m - 1.0) * g.coeffs()[m - 1] * xm;
        xm *= x * x;
    }
    return 1.0 - sum;
}

InequalityVerdict check_bohr(const MatrixSeries1D& f, double r) {
    check_hypotheses(f, r);
    InequalityVerdict v;
    v.kind = VerdictKind::bohr;
    v.r = r;
    v.truncation_pad = truncation_pad(f, r);
    v.margin = 1.0 - f.majorant(r) - v.truncation_pad;
    return v;
}

InequalityVerdict check_refined_p(const MatrixSeries1D& f, double r, int n_start, double p,
                                  int grid) {
    check_hypotheses(f, r);
    if (n_start < 1) {
        throw std::invalid_argument("check_refined_p: N must be >= 1");
    }
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("check_refined_p: p must lie in (0, 1]");
    }
    if (grid < 8) {
        throw std::invalid_argument("check_refined_p: grid must be >= 8");
    }
    double sup_fp = 0.0;
    Complex witness{r, 0.0};
    for (int j = 0; j < grid; ++j) {
        double theta = 2.0 * std::numbers::pi * j / grid;
        Complex z = std::polar(r, theta);
        double val = operator_norm(f.eval(z));
        if (val > sup_fp) {
            sup_fp = val;
            witness = z;
        }
    }
    InequalityVerdict v;
    v.kind = VerdictKind::refined_p;
    v.r = r;
    v.witness_z = witness;
    v.truncation_pad = truncation_pad(f, r);
    v.margin = 1.0 - (std::pow(sup_fp, p) + f.tail_majorant(r, n_start)) - v.truncation_pad;
    return v;
}

InequalityVerdict check_refined_quadratic(const MatrixSeries1D& f, double r) {
    ScalarHead head = check_hypotheses(f, r);
    double f0 = std::abs(head.a0);
    double weight = 1.0 / (1.0 + f0) + r / (1.0 - r);
    double pad_linear = truncation_pad(f, r);
    // tail of the coefficient-square sum, from ||A_k|| <= 1 - |a0|^2
    double c2 = (1.0 - f0 * f0) * (1.0 - f0 * f0);
    double pad_quadratic =
        f.truncated_tail() ? weight * c2 * std::pow(r, 2 * (f.degree() + 1)) / (1.0 - r * r) : 0.0;
    InequalityVerdict v;
    v.kind = VerdictKind::refined_quadratic;
    v.r = r;
    v.truncation_pad = pad_linear + pad_quadratic;
    v.margin = 1.0 - (f.majorant(r) + weight * f.quadratic_sum(r)) - v.truncation_pad;
    return v;
}

InequalityVerdict check_refined_g(const MatrixSeries1D& f, double r, const GPolynomial& g) {
    ScalarHead head = check_hypotheses(f, r);
    if (g_constraint_check(g) < -kAdmissibilitySlack) {
        throw InadmissibleG("inadmissible G: coefficient constraint violated");
    }
    double f0 = std::abs(head.a0);
    double c2 = (1.0 - f0 * f0) * (1.0 - f0 * f0);
    double area = f.area_functional(r);
    double area_pad = f.truncated_tail() ? c2 * weighted_geometric_tail(r * r, f.degree()) : 0.0;
    double pad_linear = truncation_pad(f, r);
    double g_padded = g.eval(area + area_pad);
    InequalityVerdict v;
    v.kind = VerdictKind::refined_g;
    v.r = r;
    v.truncation_pad = pad_linear + (g_padded - g.eval(area));
    v.margin = 1.0 - (f.majorant(r) + g_padded) - pad_linear;
    return v;
}

namespace {

// closed form of ||psi_a(-r)||^p + sum_{k>=N} ||A_k|| r^k for the Moebius family
double rnp_sharpness_lhs(double a, double r, int n, double p) {
    double head = std::pow((r + a) / (1.0 + r * a), p);
    double tail = (1.0 - a * a) * std::pow(a, n - 1) * std::pow(r, n) / (1.0 - a * r);
    return head + tail;
}

}  // namespace

std::vector<SharpnessRow> sharpness_sweep(SharpnessFamily family, RadiusId radius,
                                          std::span<const double> a_list,
                                          std::span<const double> r_list, int n, double p) {
    std::vector<SharpnessRow> rows;
    if (family == SharpnessFamily::zero_constant) {
        rows.reserve(r_list.size());
        for (double r : r_list) {
            rows.push_back({0.0, r, 1.0 - zero_constant_majorant_closed(r)});
        }
        return rows;
    }
    rows.reserve(a_list.size() * r_list.size());
    for (double a : a_list) {
        for (double r : r_list) {
            double lhs = 0.0;
            switch (radius) {
                case RadiusId::one_third:
                    lhs = mobius_majorant_closed(a, r);
                    break;
                case RadiusId::inv_sqrt2:
                    // zero-head variant: r times the Moebius majorant
                    lhs = r * mobius_majorant_closed(a, r);
                    break;
                case RadiusId::rnp:
                    lhs = rnp_sharpness_lhs(a, r, n, p);
                    break;
            }
            rows.push_back({a, r, 1.0 - lhs});
        }
    }
    return rows;
}

}  // namespace bohrlab
