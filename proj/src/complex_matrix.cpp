#include "bohrlab/complex_matrix.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace bohrlab {

ComplexMatrix::ComplexMatrix(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
    }
    entries_ = Eigen::MatrixXcd::Zero(dim, dim);
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("ComplexMatrix: entries must form a square d x d array, d >= 1");
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
    }
    return ComplexMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    return ComplexMatrix(entries_.adjoint().eval());
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    }
    return ComplexMatrix((a.entries_ + b.entries_).eval());
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    }
    return ComplexMatrix((a.entries_ - b.entries_).eval());
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    }
    return ComplexMatrix((a.entries_ * b.entries_).eval());
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    return ComplexMatrix((s * a.entries_).eval());
}

ComplexMatrix scalar_embed(Complex a, int dim) {
    return a * ComplexMatrix::identity(dim);
}

double operator_norm(const ComplexMatrix& m) {
    if (m.dim() == 1) {
        return std::abs(m(0, 0));
    }
    // Jacobi SVD: high relative accuracy on these small dense blocks.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.entries());
    return svd.singularValues()(0);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    }
    return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

}  // namespace bohrlab
