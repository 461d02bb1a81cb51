#include "sudsq/linalg.hpp"

#include <lapacke.h>

namespace sudsq::linalg {

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  const double ref = std::max(1.0, m.norm());
  return (m - m.adjoint()).norm() <= rel_tol * ref;
}

ComplexMatrix require_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) throw NonHermitianInput("matrix is not square");
  if (!is_hermitian(m, rel_tol)) throw NonHermitianInput("matrix is not Hermitian within tolerance");
  return (m + m.adjoint()) / 2.0;
}

HermitianEigen eig_hermitian(const ComplexMatrix& m) {
  ComplexMatrix w = require_hermitian(m);
  const lapack_int n = static_cast<lapack_int>(w.rows());
  RealVector ev(n);
  lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                   reinterpret_cast<lapack_complex_double*>(w.data()), n, ev.data());
  if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  return {std::move(ev), std::move(w)};
}

RealVector eigvals_hermitian(const ComplexMatrix& m) {
  ComplexMatrix w = require_hermitian(m);
  const lapack_int n = static_cast<lapack_int>(w.rows());
  RealVector ev(n);
  lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                   reinterpret_cast<lapack_complex_double*>(w.data()), n, ev.data());
  if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  return ev;
}

double min_eigenvalue(const ComplexMatrix& m) { return eigvals_hermitian(m)(0); }

double trace_norm(const ComplexMatrix& m) {
  ComplexMatrix w = m;
  const lapack_int rows = static_cast<lapack_int>(w.rows());
  const lapack_int cols = static_cast<lapack_int>(w.cols());
  RealVector sv(std::min(rows, cols));
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', rows, cols,
                                   reinterpret_cast<lapack_complex_double*>(w.data()), rows,
                                   sv.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
  return sv.sum();
}

ComplexMatrix spectral_map(const ComplexMatrix& m, const std::function<double(double)>& f) {
  HermitianEigen eig = eig_hermitian(m);
  RealVector fe = eig.values.unaryExpr([&f](double x) { return f(x); });
  ComplexMatrix out = eig.vectors * fe.asDiagonal() * eig.vectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j) out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

}  // namespace sudsq::linalg
