#include "bohrlab/matrix_series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bohrlab {

namespace {

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("radius must lie in [0, 1)");
    }
}

}  // namespace

MatrixSeries1D::MatrixSeries1D(std::vector<ComplexMatrix> coeffs, bool truncated_tail)
    : truncated_(truncated_tail), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("MatrixSeries1D: needs at least the constant coefficient");
    }
    dim_ = coeffs_.front().dim();
    norms_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (c.dim() != dim_) {
            throw std::invalid_argument("MatrixSeries1D: all coefficients must share dim");
        }
        norms_.push_back(operator_norm(c));
    }
}

MatrixSeries1D MatrixSeries1D::constant(ComplexMatrix a0) {
    std::vector<ComplexMatrix> c;
    c.push_back(std::move(a0));
    return MatrixSeries1D(std::move(c));
}

ComplexMatrix MatrixSeries1D::eval(Complex z) const {
    if (std::abs(z) > 1.0 + 1e-12) {
        throw std::domain_error("eval: |z| must be <= 1");
    }
    ComplexMatrix acc = coeffs_.back();
    for (int k = degree() - 1; k >= 0; --k) {
        acc = coeffs_[static_cast<std::size_t>(k)] + z * acc;
    }
    return acc;
}

double MatrixSeries1D::majorant(double r) const {
    require_radius(r);
    double sum = 0.0;
    double rk = 1.0;
    for (double nk : norms_) {
        sum += nk * rk;
        rk *= r;
    }
    return sum;
}

double MatrixSeries1D::tail_majorant(double r, int n_start) const {
    require_radius(r);
    if (n_start < 1) {
        throw std::invalid_argument("tail_majorant: n_start must be >= 1");
    }
    double sum = 0.0;
    double rk = std::pow(r, n_start);
    for (int k = n_start; k <= degree(); ++k) {
        sum += norms_[static_cast<std::size_t>(k)] * rk;
        rk *= r;
    }
    return sum;
}

double MatrixSeries1D::area_functional(double r) const {
    require_radius(r);
    double sum = 0.0;
    double r2k = r * r;
    for (int k = 1; k <= degree(); ++k) {
        double nk = norms_[static_cast<std::size_t>(k)];
        sum += k * nk * nk * r2k;
        r2k *= r * r;
    }
    return sum;
}

double MatrixSeries1D::quadratic_sum(double r) const {
    require_radius(r);
    double sum = 0.0;
    double r2k = r * r;
    for (int k = 1; k <= degree(); ++k) {
        double nk = norms_[static_cast<std::size_t>(k)];
        sum += nk * nk * r2k;
        r2k *= r * r;
    }
    return sum;
}

ScalarHead MatrixSeries1D::scalar_head() const {
    const ComplexMatrix& a0 = coeffs_.front();
    Complex mean = a0.trace() / static_cast<double>(dim_);
    ScalarHead head;
    head.a0 = mean;
    head.present = max_abs_diff(a0, scalar_embed(mean, dim_)) <= kScalarHeadTol;
    return head;
}

MatrixSeries1D series_mul(const MatrixSeries1D& f, const MatrixSeries1D& g, int max_degree) {
    if (f.dim() != g.dim()) {
        throw std::invalid_argument("series_mul: dimension mismatch");
    }
    int deg = std::min(f.degree() + g.degree(), max_degree);
    std::vector<ComplexMatrix> out(static_cast<std::size_t>(deg) + 1, ComplexMatrix::zero(f.dim()));
    for (int i = 0; i <= f.degree(); ++i) {
        for (int j = 0; j <= g.degree() && i + j <= deg; ++j) {
            out[static_cast<std::size_t>(i + j)] =
                out[static_cast<std::size_t>(i + j)] + f.coeff(i) * g.coeff(j);
        }
    }
    bool clipped = f.degree() + g.degree() > max_degree;
    return MatrixSeries1D(std::move(out), f.truncated_tail() || g.truncated_tail() || clipped);
}

MatrixSeries1D series_div(const MatrixSeries1D& f, const MatrixSeries1D& g, int max_degree) {
    if (f.dim() != 1 || g.dim() != 1) {
        throw std::invalid_argument("series_div: scalar (dim 1) series only");
    }
    Complex g0 = g.coeff(0)(0, 0);
    if (std::abs(g0) < 1e-9) {
        throw std::invalid_argument("series_div: constant term of divisor is too close to zero");
    }
    std::vector<Complex> h(static_cast<std::size_t>(max_degree) + 1, Complex{0.0, 0.0});
    for (int n = 0; n <= max_degree; ++n) {
        Complex fn = n <= f.degree() ? f.coeff(n)(0, 0) : Complex{0.0, 0.0};
        Complex acc = fn;
        for (int j = 1; j <= std::min(n, g.degree()); ++j) {
            acc -= g.coeff(j)(0, 0) * h[static_cast<std::size_t>(n - j)];
        }
        h[static_cast<std::size_t>(n)] = acc / g0;
    }
    std::vector<ComplexMatrix> out;
    out.reserve(h.size());
    for (Complex v : h) {
        out.push_back(scalar_embed(v, 1));
    }
    // a quotient is an infinite series clipped at max_degree
    return MatrixSeries1D(std::move(out), true);
}

namespace {

ScalarHead require_scalar_head(const MatrixSeries1D& f) {
    ScalarHead head = f.scalar_head();
    if (!head.present) {
        throw std::invalid_argument("constant coefficient is not a scalar multiple of the identity");
    }
    if (std::abs(head.a0) >= 1.0) {
        throw std::invalid_argument("|a0| must be < 1");
    }
    return head;
}

}  // namespace

double schwarz_pick_margin(const MatrixSeries1D& f) {
    ScalarHead head = require_scalar_head(f);
    double worst = 0.0;
    for (int n = 1; n <= f.degree(); ++n) {
        worst = std::max(worst, f.coeff_norm(n));
    }
    return (1.0 - std::norm(head.a0)) - worst;
}

double growth_bound_margin(const MatrixSeries1D& f, double r, int grid) {
    ScalarHead head = require_scalar_head(f);
    if (grid < 8) {
        throw std::invalid_argument("growth_bound_margin: grid must be >= 8");
    }
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("growth_bound_margin: r must lie in [0, 1)");
    }
    double f0 = std::abs(head.a0);
    double bound = (f0 + r) / (1.0 + f0 * r);
    double margin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid; ++j) {
        double theta = 2.0 * std::numbers::pi * j / grid;
        Complex z = std::polar(r, theta);
        margin = std::min(margin, bound - operator_norm(f.eval(z)));
    }
    return margin;
}

double truncation_pad(const MatrixSeries1D& f, double r) {
    ScalarHead head = require_scalar_head(f);
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("truncation_pad: r must lie in [0, 1)");
    }
    if (!f.truncated_tail()) {
        return 0.0;
    }
    return (1.0 - std::norm(head.a0)) * std::pow(r, f.degree() + 1) / (1.0 - r);
}

}  // namespace bohrlab
