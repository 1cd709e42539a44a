#pragma once

#include <complex>

#include <Eigen/Dense>

namespace bohrlab {

using Complex = std::complex<double>;

// Dense square complex matrix, the coefficient object of every series in this
// library. Value semantics; no mutation after construction, so values are
// freely shareable across threads.
class ComplexMatrix {
  public:
    // zero matrix of the given dimension
    explicit ComplexMatrix(int dim);
    explicit ComplexMatrix(Eigen::MatrixXcd entries);

    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
    static ComplexMatrix identity(int dim);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Complex& operator()(int i, int j) const { return entries_(i, j); }
    const Eigen::MatrixXcd& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const { return entries_.trace(); }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

  private:
    Eigen::MatrixXcd entries_;
};

// a * I of the given dimension
ComplexMatrix scalar_embed(Complex a, int dim);

// Largest singular value, deterministic for a fixed input.
double operator_norm(const ComplexMatrix& m);

// max_{ij} |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace bohrlab
