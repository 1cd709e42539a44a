#pragma once

#include <vector>

#include "bohrlab/complex_matrix.hpp"

namespace bohrlab {

// Truncation cap for series arithmetic (products, quotients, samplers).
inline constexpr int kDefaultMaxDegree = 64;

// Entrywise tolerance for recognizing A_0 = a0 * I.
inline constexpr double kScalarHeadTol = 1e-12;

struct ScalarHead {
    Complex a0{0.0, 0.0};
    bool present = false;
};

// One-variable power series with matrix coefficients,
// f(z) = sum_{k=0..D} A_k z^k. Coefficient operator norms are computed once
// at construction; thereafter the value is immutable.
//
// truncated_tail distinguishes an exact polynomial (the default: the stored
// coefficients ARE the function) from the degree-D truncation of an infinite
// series, whose checks must carry the certified tail bound as padding.
class MatrixSeries1D {
  public:
    explicit MatrixSeries1D(std::vector<ComplexMatrix> coeffs, bool truncated_tail = false);

    static MatrixSeries1D constant(ComplexMatrix a0);

    int dim() const { return dim_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const ComplexMatrix& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    double coeff_norm(int k) const { return norms_[static_cast<std::size_t>(k)]; }
    const std::vector<ComplexMatrix>& coeffs() const { return coeffs_; }
    bool truncated_tail() const { return truncated_; }

    // Horner evaluation; requires |z| <= 1.
    ComplexMatrix eval(Complex z) const;

    // sum_k ||A_k|| r^k, 0 <= r < 1
    double majorant(double r) const;

    // sum_{k >= n_start} ||A_k|| r^k, n_start >= 1
    double tail_majorant(double r, int n_start) const;

    // S(r) = sum_{k>=1} k ||A_k||^2 r^{2k}, the area-type functional
    double area_functional(double r) const;

    // sum_{k>=1} ||A_k||^2 r^{2k}
    double quadratic_sum(double r) const;

    // Detects A_0 = a0 * I within kScalarHeadTol.
    ScalarHead scalar_head() const;

  private:
    int dim_;
    bool truncated_;
    std::vector<ComplexMatrix> coeffs_;
    std::vector<double> norms_;
};

// Cauchy product truncated to min(D_f + D_g, max_degree).
MatrixSeries1D series_mul(const MatrixSeries1D& f, const MatrixSeries1D& g,
                          int max_degree = kDefaultMaxDegree);

// Power-series quotient h with h*g = f up to max_degree. Scalar (dim 1)
// series only; requires |g_0| >= 1e-9.
MatrixSeries1D series_div(const MatrixSeries1D& f, const MatrixSeries1D& g,
                          int max_degree = kDefaultMaxDegree);

// (1 - |a0|^2) - max_{1<=n<=D} ||A_n||. Nonnegative means the coefficient
// bound for unit-ball functions with scalar head holds.
double schwarz_pick_margin(const MatrixSeries1D& f);

// min over the angular grid z = r e^{i theta} of
// (||f(0)|| + r)/(1 + ||f(0)|| r) - ||f(z)||. Nonnegative means the growth
// bound holds on the grid. Requires a scalar head and grid >= 8.
double growth_bound_margin(const MatrixSeries1D& f, double r, int grid);

// Certified bound on the majorant tail discarded by truncation:
// (1 - |a0|^2) r^{D+1}/(1 - r), and 0 for exact polynomials. Requires a
// scalar head.
double truncation_pad(const MatrixSeries1D& f, double r);

}  // namespace bohrlab
