#include "bohrlab/extremals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bohrlab {

MatrixSeries1D mobius_series(double a, int dim, int degree) {
    if (!(a >= 0.0 && a < 1.0)) {
        throw std::invalid_argument("mobius_series: a must lie in [0, 1)");
    }
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    coeffs.push_back(scalar_embed(a, dim));
    double ak = 1.0;  // a^{k-1}
    for (int k = 1; k <= degree; ++k) {
        coeffs.push_back(scalar_embed(-(1.0 - a * a) * ak, dim));
        ak *= a;
    }
    return MatrixSeries1D(std::move(coeffs), /*truncated_tail=*/true);
}

double mobius_majorant_closed(double a, double r) {
    return (a + (1.0 - 2.0 * a * a) * r) / (1.0 - a * r);
}

BombieriMax bombieri_maximizer(double r) {
    if (!(r >= 1.0 / 3.0 && r < 1.0)) {
        throw std::invalid_argument("bombieri_maximizer: r must lie in [1/3, 1)");
    }
    double a_star = (2.0 - std::sqrt(2.0 * (1.0 - r * r))) / (2.0 * r);
    return {a_star, mobius_majorant_closed(a_star, r)};
}

MatrixSeries1D zero_constant_extremal(int dim, int degree) {
    const double b = 1.0 / std::numbers::sqrt2;
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    coeffs.push_back(ComplexMatrix::zero(dim));
    if (degree >= 1) {
        coeffs.push_back(scalar_embed(b, dim));
    }
    double bk = 1.0;  // b^{k-2}
    for (int k = 2; k <= degree; ++k) {
        coeffs.push_back(scalar_embed(-0.5 * bk, dim));
        bk *= b;
    }
    return MatrixSeries1D(std::move(coeffs), /*truncated_tail=*/true);
}

double zero_constant_majorant_closed(double r) {
    double q = r / std::numbers::sqrt2;
    return q / (1.0 - q);
}

}  // namespace bohrlab
