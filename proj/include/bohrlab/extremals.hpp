#pragma once

#include "bohrlab/matrix_series.hpp"

namespace bohrlab {

// Moebius family psi_a(z) = ((a - z)/(1 - a z)) I, a in [0, 1).
// Coefficient law: A_0 = a I, A_k = -(1 - a^2) a^{k-1} I for k >= 1.
MatrixSeries1D mobius_series(double a, int dim, int degree);

// Closed form of the coefficient-norm series of psi_a:
// (a + (1 - 2a^2) r)/(1 - a r). Exceeds 1 exactly when r > 1/(1 + 2a).
double mobius_majorant_closed(double a, double r);

struct BombieriMax {
    double a_star;
    double value;
};

// Maximizes the Moebius majorant over a for fixed r in [1/3, 1):
// a* = (2 - sqrt(2(1 - r^2)))/(2r). The value is the operative lower
// bound of the growth function m(r).
BombieriMax bombieri_maximizer(double r);

// h(x) = x (1/sqrt(2) - x)/(1 - x/sqrt(2)) I: the zero-constant extremal.
// A_1 = (1/sqrt 2) I and A_k = -(1/2)(1/sqrt 2)^{k-2} I for k >= 2.
MatrixSeries1D zero_constant_extremal(int dim, int degree);

// Coefficient-norm series of the zero-constant extremal in closed form:
// (r/sqrt 2)/(1 - r/sqrt 2). Equals 1 at r = 1/sqrt 2.
double zero_constant_majorant_closed(double r);

}  // namespace bohrlab
