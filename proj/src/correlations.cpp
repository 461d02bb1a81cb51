#include "sudsq/correlations.hpp"

namespace sudsq::correlations {

namespace {

// C, gamma, Q, U from an arbitrary set of single-particle operators.
template <typename Bundle>
Bundle build_bundle(const NQuditState& state, const std::vector<const ComplexMatrix*>& ops,
                    double q0, RealVector& gexp_out) {
  const int n = state.n_sites();
  const int m = static_cast<int>(ops.size());
  if (n < 2) throw DimensionMismatch("bundle: N >= 2 required");
  for (const auto* g : ops)
    if (g->rows() != state.d()) throw DimensionMismatch("bundle: operator dim != state d");

  Bundle b;
  b.N = n;
  b.d = state.d();
  b.Q0 = q0;
  std::vector<ComplexMatrix> collective(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k)
    collective[static_cast<size_t>(k)] = many_body::collective_operator(*ops[k], n);

  RealVector gexp(m);
  for (int k = 0; k < m; ++k) gexp(k) = state.expectation(collective[static_cast<size_t>(k)]);

  RealMatrix c(m, m), q(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = k; l < m; ++l) {
      const ComplexMatrix& gk = collective[static_cast<size_t>(k)];
      const ComplexMatrix& gl = collective[static_cast<size_t>(l)];
      const Complex ckl = ((gk * gl + gl * gk) * state.rho()).trace() / 2.0;
      const ComplexMatrix loc = (*ops[k]) * (*ops[l]) + (*ops[l]) * (*ops[k]);
      const Complex qkl =
          (many_body::local_sum(loc, n) * state.rho()).trace() / (2.0 * n);
      if (std::abs(ckl.imag()) > 1e-10 || std::abs(qkl.imag()) > 1e-10)
        throw std::runtime_error("bundle: symmetrized moment has imaginary residue");
      c(k, l) = c(l, k) = ckl.real();
      q(k, l) = q(l, k) = qkl.real() - (k == l ? q0 : 0.0);
    }

  b.C = c;
  b.gamma = c - gexp * gexp.transpose();
  b.Q = q;
  b.U = b.gamma + b.C / (n - 1.0) -
        (static_cast<double>(n) * n / (n - 1.0)) * (q + q0 * RealMatrix::Identity(m, m));
  gexp_out = gexp;
  return b;
}

template <typename Bundle>
Bundle build_two_body(const NQuditState& rho2, const std::vector<const ComplexMatrix*>& ops,
                      double* swap_residual, RealVector& gexp_out) {
  if (rho2.n_sites() != 2) throw DimensionMismatch("two_body_bundle: two-site state required");
  const int d = rho2.d();
  for (const auto* g : ops)
    if (g->rows() != d) throw DimensionMismatch("two_body_bundle: operator dim != state d");
  const ComplexMatrix f = basis::flip_operator(d);
  const double res = (f * rho2.rho() * f - rho2.rho()).norm();
  if (swap_residual) *swap_residual = res;

  const int m = static_cast<int>(ops.size());
  Bundle b;
  b.d = d;
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  RealVector gexp(m);
  RealMatrix c(m, m);
  for (int k = 0; k < m; ++k) {
    gexp(k) = rho2.expectation(linalg::kron(*ops[k], eye));
    for (int l = k; l < m; ++l) {
      const ComplexMatrix sym =
          (linalg::kron(*ops[k], *ops[l]) + linalg::kron(*ops[l], *ops[k])) / 2.0;
      c(k, l) = c(l, k) = rho2.expectation(sym);
    }
  }
  b.Cav2 = c;
  b.gammaAv2 = c - gexp * gexp.transpose();
  gexp_out = gexp;
  return b;
}

}  // namespace

CollectiveBundle collective_bundle(const NQuditState& state, const GeneratorBasis& basis) {
  if (basis.kind != BasisKind::SuD || basis.d != state.d())
    throw DimensionMismatch("collective_bundle: su(d) basis with matching d required");
  std::vector<const ComplexMatrix*> ops;
  for (const auto& g : basis.generators) ops.push_back(&g);
  CollectiveBundle b;
  RealVector gexp;
  b = build_bundle<CollectiveBundle>(state, ops, 2.0 / state.d(), gexp);
  b.Gexp = std::move(gexp);
  return b;
}

SpinBundle spin_bundle(const NQuditState& state, const SpinOperators& spin) {
  if (spin.d != state.d()) throw DimensionMismatch("spin_bundle: spin dim != state d");
  const double j = spin.j();
  std::vector<const ComplexMatrix*> ops = {&spin.jx, &spin.jy, &spin.jz};
  RealVector jexp;
  SpinBundle b = build_bundle<SpinBundle>(state, ops, j * (j + 1) / 3.0, jexp);
  b.Jexp = std::move(jexp);
  return b;
}

TwoBodyBundle two_body_bundle(const NQuditState& rho2, const GeneratorBasis& basis,
                              double* swap_residual) {
  if (basis.d != rho2.d()) throw DimensionMismatch("two_body_bundle: basis d != state d");
  std::vector<const ComplexMatrix*> ops;
  for (const auto& g : basis.generators) ops.push_back(&g);
  RealVector gexp;
  TwoBodyBundle b = build_two_body<TwoBodyBundle>(rho2, ops, swap_residual, gexp);
  b.gexp = std::move(gexp);
  b.Fexp = rho2.expectation(basis::flip_operator(rho2.d()));
  return b;
}

TwoBodySpinBundle two_body_spin_bundle(const NQuditState& rho2, const SpinOperators& spin) {
  if (spin.d != rho2.d()) throw DimensionMismatch("two_body_spin_bundle: spin dim != state d");
  std::vector<const ComplexMatrix*> ops = {&spin.jx, &spin.jy, &spin.jz};
  RealVector jexp;
  TwoBodySpinBundle b = build_two_body<TwoBodySpinBundle>(rho2, ops, nullptr, jexp);
  b.jexp = std::move(jexp);
  return b;
}

RealMatrix chi_matrix(const CollectiveBundle& b) {
  const double n = b.N;
  return (n - 1.0) * b.U + n * n * b.Q0 * RealMatrix::Identity(b.U.rows(), b.U.cols());
}

IdentityReport check_identities(const NQuditState& state, const GeneratorBasis& basis) {
  const CollectiveBundle cb = collective_bundle(state, basis);
  const NQuditState rho2 = many_body::avg_two_body(state);
  const TwoBodyBundle tb = two_body_bundle(rho2, basis);
  const double n = state.n_sites(), d = state.d();

  IdentityReport r;
  r.u_vs_gamma_av2 = (cb.U - n * n * tb.gammaAv2).norm();
  const double lhs = ((n + d) * lambda_max(state.d()) - cb.C.trace() / n) / (n * (n - 1.0));
  const double rhs = (2.0 / n) * (1.0 - tb.Fexp);
  r.trace_c_vs_flip = std::abs(lhs - rhs);
  const RealMatrix left =
      cb.C - n * cb.Q - n * cb.Q0 * RealMatrix::Identity(cb.C.rows(), cb.C.cols());
  r.cross_correlation = (left - n * (n - 1.0) * tb.Cav2).norm();
  return r;
}

}  // namespace sudsq::correlations
