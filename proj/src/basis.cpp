#include "sudsq/basis.hpp"

#include <cmath>

namespace sudsq::basis {

GeneratorBasis gellmann(int d) {
  if (d < 2) throw InvalidDimension("gellmann: d must be >= 2");
  GeneratorBasis b;
  b.d = d;
  b.kind = BasisKind::SuD;
  b.generators.reserve(static_cast<size_t>(d) * d - 1);
  // symmetric off-diagonal: |j><k| + |k><j|
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      b.generators.push_back(std::move(g));
    }
  // antisymmetric off-diagonal: -i|j><k| + i|k><j|
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = Complex(0, -1);
      g(k, j) = Complex(0, 1);
      b.generators.push_back(std::move(g));
    }
  // diagonal: sqrt(2/(l(l+1))) diag(1,...,1,-l,0,...), Tr(g^2)=2
  for (int l = 1; l < d; ++l) {
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    const double c = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) g(j, j) = c;
    g(l, l) = -c * l;
    b.generators.push_back(std::move(g));
  }
  return b;
}

SpinOperators spin_matrices(int d) {
  if (d < 2) throw InvalidDimension("spin_matrices: d must be >= 2");
  SpinOperators s;
  s.d = d;
  const double j = 0.5 * (d - 1);
  ComplexMatrix jp = ComplexMatrix::Zero(d, d);  // raising operator
  ComplexMatrix jz = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const double m = j - a;  // m descending with row index
    jz(a, a) = m;
    if (a + 1 < d) {
      const double mlow = j - (a + 1);
      jp(a, a + 1) = std::sqrt(j * (j + 1) - mlow * (mlow + 1));
    }
  }
  s.jz = jz;
  s.jx = (jp + jp.adjoint()) / 2.0;
  s.jy = (jp - jp.adjoint()) / Complex(0, 2);
  return s;
}

GeneratorBasis anticomm_d3() {
  SpinOperators s = spin_matrices(3);
  auto anti = [](const ComplexMatrix& a, const ComplexMatrix& b) -> ComplexMatrix {
    return a * b + b * a;
  };
  GeneratorBasis b;
  b.d = 3;
  b.kind = BasisKind::SuD;
  b.generators = {s.jx,
                  s.jy,
                  s.jz,
                  anti(s.jx, s.jy),
                  anti(s.jy, s.jz),
                  anti(s.jx, s.jz),
                  s.jx * s.jx - s.jy * s.jy,
                  std::sqrt(3.0) * s.jz * s.jz -
                      (2.0 / std::sqrt(3.0)) * ComplexMatrix::Identity(3, 3)};
  return b;
}

ComplexMatrix flip_operator(int d) {
  GeneratorBasis b = gellmann(d);
  ComplexMatrix f =
      (1.0 / d) * ComplexMatrix::Identity(d * d, d * d);
  for (const auto& g : b.generators) f += 0.5 * linalg::kron(g, g);
  return f;
}

GeneratorBasis apply_orthogonal(const GeneratorBasis& b, const RealMatrix& O) {
  const int n = b.size();
  if (O.rows() != n || O.cols() != n ||
      (O.transpose() * O - RealMatrix::Identity(n, n)).norm() > 1e-10)
    throw NotOrthogonal("apply_orthogonal: O is not orthogonal");
  GeneratorBasis out;
  out.d = b.d;
  out.kind = b.kind;
  out.generators.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    ComplexMatrix g = ComplexMatrix::Zero(b.d, b.d);
    for (int l = 0; l < n; ++l) g += O(k, l) * b[l];
    out.generators[static_cast<size_t>(k)] = std::move(g);
  }
  return out;
}

GeneratorBasis extend_ud(const GeneratorBasis& b) {
  if (b.kind == BasisKind::ExtendedUD) throw AlreadyExtended("basis already extended");
  GeneratorBasis out;
  out.d = b.d;
  out.kind = BasisKind::ExtendedUD;
  out.generators.reserve(b.generators.size() + 1);
  out.generators.push_back(std::sqrt(2.0 / b.d) * ComplexMatrix::Identity(b.d, b.d));
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  return out;
}

void validate(const GeneratorBasis& b, double tol) {
  const int d = b.d;
  const int expected = (b.kind == BasisKind::SuD) ? d * d - 1 : d * d;
  if (b.size() != expected) throw std::runtime_error("basis: wrong generator count");
  for (int k = 0; k < b.size(); ++k) {
    const auto& g = b[k];
    if (g.rows() != d || g.cols() != d) throw std::runtime_error("basis: wrong generator dim");
    if ((g - g.adjoint()).norm() > tol) throw std::runtime_error("basis: generator not Hermitian");
    for (int l = 0; l <= k; ++l) {
      const double expect = (k == l) ? 2.0 : 0.0;
      if (std::abs((g.adjoint() * b[l]).trace().real() - expect) > tol)
        throw std::runtime_error("basis: orthonormality Tr(g_k g_l)=2 delta_kl violated");
    }
  }
  if (b.kind == BasisKind::SuD) {
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& g : b.generators) {
      if (std::abs(g.trace()) > tol) throw std::runtime_error("basis: generator not traceless");
      sum += g * g;
    }
    const double target = (d + 1) * lambda_max(d);
    if ((sum - target * ComplexMatrix::Identity(d, d)).norm() > tol * 10)
      throw std::runtime_error("basis: sum g_k^2 != (d+1) Lambda_max I");
  } else {
    const ComplexMatrix g0 = std::sqrt(2.0 / d) * ComplexMatrix::Identity(d, d);
    if ((b[0] - g0).norm() > tol) throw std::runtime_error("basis: extended g_0 wrong");
  }
}

void validate(const SpinOperators& s, double tol) {
  const double j = s.j();
  const Complex i(0, 1);
  if ((s.jx * s.jy - s.jy * s.jx - i * s.jz).norm() > tol ||
      (s.jy * s.jz - s.jz * s.jy - i * s.jx).norm() > tol ||
      (s.jz * s.jx - s.jx * s.jz - i * s.jy).norm() > tol)
    throw std::runtime_error("spin: commutation relations violated");
  ComplexMatrix j2 = s.jx * s.jx + s.jy * s.jy + s.jz * s.jz;
  if ((j2 - j * (j + 1) * ComplexMatrix::Identity(s.d, s.d)).norm() > tol)
    throw std::runtime_error("spin: Casimir j(j+1) violated");
}

}  // namespace sudsq::basis
