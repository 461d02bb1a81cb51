#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>

namespace sudsq {

using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Complex = std::complex<double>;

struct NonHermitianInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigendecomposition of a Hermitian matrix: values ascending,
/// vectors unitary with eigenvectors as columns.
struct HermitianEigen {
  RealVector values;
  ComplexMatrix vectors;
};

namespace linalg {

inline constexpr double kHermTol = 1e-10;

bool is_hermitian(const ComplexMatrix& m, double rel_tol = kHermTol);

/// Throws NonHermitianInput if the symmetry check fails; otherwise returns
/// the symmetrized (m + m†)/2 to suppress rounding drift.
ComplexMatrix require_hermitian(const ComplexMatrix& m, double rel_tol = kHermTol);

HermitianEigen eig_hermitian(const ComplexMatrix& m);

/// Eigenvalues only (ascending); faster when eigenvectors are not needed.
RealVector eigvals_hermitian(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);

/// Sum of singular values of any square matrix.
double trace_norm(const ComplexMatrix& m);

/// U f(lambda) U^dag in the eigenbasis of a Hermitian m.
ComplexMatrix spectral_map(const ComplexMatrix& m, const std::function<double(double)>& f);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace linalg
}  // namespace sudsq
