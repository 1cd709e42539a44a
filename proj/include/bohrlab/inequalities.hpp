#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "bohrlab/matrix_series.hpp"

namespace bohrlab {

enum class VerdictKind { bohr, refined_p, refined_quadratic, refined_g };

// Signed outcome of one inequality check. margin = 1 - LHS - pad, so the
// truncation padding is already accounted for; pass iff margin >= 0.
struct InequalityVerdict {
    VerdictKind kind = VerdictKind::bohr;
    double r = 0.0;
    double margin = 0.0;
    Complex witness_z{0.0, 0.0};       // argmax of the LHS over the angular grid
    double truncation_pad = 0.0;
    std::vector<Complex> witness_point;  // set by the multivariable checks
    bool pass() const { return margin >= 0.0; }
};

struct InadmissibleG : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// G(w) = c_1 w + c_2 w^2 + ... + c_l w^l with every c_i > 0.
class GPolynomial {
  public:
    explicit GPolynomial(std::vector<double> coeffs);
    double eval(double w) const;
    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<double>& coeffs() const { return coeffs_; }

  private:
    std::vector<double> coeffs_;
};

// 1 - sum_m 8 (2m - 1) c_m (3/8)^{2m}; nonnegative means G is admissible
// for the refined-G inequality. Admissibility is tested with a 1e-14
// slack so the boundary case c_1 = 8/9 is accepted.
double g_constraint_check(const GPolynomial& g);

// Coefficient-norm sum against 1 at radius r (holds for every certified
// unit-ball series with scalar head when r <= 1/3).
InequalityVerdict check_bohr(const MatrixSeries1D& f, double r);

// ||f(z)||^p + tail-from-N against 1; LHS maximized over an angular grid
// on |z| = r (holds for r <= R_{N,p}).
InequalityVerdict check_refined_p(const MatrixSeries1D& f, double r, int n_start, double p,
                                  int grid = 256);

// Majorant plus the weighted coefficient-square sum against 1 (holds for
// r <= 1/3).
InequalityVerdict check_refined_quadratic(const MatrixSeries1D& f, double r);

// Majorant plus G of the area functional against 1 (holds for r <= 1/3
// when G is admissible). Inadmissible G raises InadmissibleG.
InequalityVerdict check_refined_g(const MatrixSeries1D& f, double r, const GPolynomial& g);

enum class SharpnessFamily { mobius, zero_constant };
enum class RadiusId { one_third, inv_sqrt2, rnp };

struct SharpnessRow {
    double a = 0.0;
    double r = 0.0;
    double margin = 0.0;
};

// Closed-form margin table demonstrating the pass/fail sign flip across a
// proven radius. RadiusId selects the inequality whose sharpness is being
// demonstrated; n/p apply to RadiusId::rnp only; a_list is ignored by the
// zero_constant family.
std::vector<SharpnessRow> sharpness_sweep(SharpnessFamily family, RadiusId radius,
                                          std::span<const double> a_list,
                                          std::span<const double> r_list, int n = 1,
                                          double p = 1.0);

}  // namespace bohrlab
