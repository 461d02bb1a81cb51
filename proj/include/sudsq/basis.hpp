#pragma once

#include <vector>

#include "sudsq/linalg.hpp"

namespace sudsq {

struct InvalidDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotOrthogonal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AlreadyExtended : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maximal squared length of the generalized Bloch vector, 2(d-1)/d.
inline double lambda_max(int d) { return 2.0 * (d - 1) / d; }

enum class BasisKind { SuD, ExtendedUD };

/// An ordered set of Hermitian d x d generators with Tr(g_k g_l) = 2 delta_kl.
/// su(d) kind: d^2-1 traceless generators. Extended u(d) kind: sqrt(2/d)*I
/// prepended, d^2 generators in total.
struct GeneratorBasis {
  int d = 0;
  BasisKind kind = BasisKind::SuD;
  std::vector<ComplexMatrix> generators;

  int size() const { return static_cast<int>(generators.size()); }
  const ComplexMatrix& operator[](int k) const { return generators[static_cast<size_t>(k)]; }
};

/// Spin-j matrices for j = (d-1)/2 in the |j,m> basis, m descending.
struct SpinOperators {
  int d = 0;
  ComplexMatrix jx, jy, jz;

  double j() const { return 0.5 * (d - 1); }
  const ComplexMatrix& component(int k) const { return k == 0 ? jx : (k == 1 ? jy : jz); }
};

namespace basis {

/// Generalized Gell-Mann generators: symmetric pairs, antisymmetric pairs,
/// then diagonal generators, index pairs lexicographic.
GeneratorBasis gellmann(int d);

SpinOperators spin_matrices(int d);

/// The d=3 basis {jx, jy, jz, {jx,jy}, {jy,jz}, {jx,jz}, jx^2-jy^2,
/// sqrt(3) jz^2 - (2/sqrt(3)) I}.
GeneratorBasis anticomm_d3();

/// Two-party swap, F = (1/d) I(x)I + (1/2) sum_k g_k(x)g_k.
ComplexMatrix flip_operator(int d);

/// g'_k = sum_l O_kl g_l for an orthogonal O.
GeneratorBasis apply_orthogonal(const GeneratorBasis& b, const RealMatrix& O);

GeneratorBasis extend_ud(const GeneratorBasis& b);

/// Checks all GeneratorBasis invariants; throws std::runtime_error naming the
/// violated one.
void validate(const GeneratorBasis& b, double tol = 1e-12);

void validate(const SpinOperators& s, double tol = 1e-12);

}  // namespace basis
}  // namespace sudsq
