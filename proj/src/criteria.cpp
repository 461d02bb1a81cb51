#include "sudsq/criteria.hpp"

#include <limits>

namespace sudsq::criteria {

namespace {

void classify(CriterionReport& r, double tol) {
  r.detected = r.value < -tol;
  r.boundary = std::abs(r.value) <= tol;
}

RealVector sym_eigvals(const RealMatrix& m) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

double eig_sign_cutoff(const RealMatrix& u) {
  return 1e-10 * std::max(1.0, u.operatorNorm());
}

CriterionReport xi_sud_collective(const CollectiveBundle& b, double tol) {
  CriterionReport r;
  r.name = "xi_sud";
  r.eigenvalues = sym_eigvals(b.U);
  const double cut = eig_sign_cutoff(b.U);
  double pos = 0, neg = 0;
  for (int k = 0; k < r.eigenvalues.size(); ++k) {
    const double l = r.eigenvalues(k);
    if (l > cut) pos += l;
    if (l < -cut) neg += l;
  }
  const double n = b.N, d = b.d;
  r.value = b.gamma.trace() - pos - 2.0 * n * (d - 1.0);
  const double alt =
      neg + n * (n + d) * lambda_max(b.d) / (n - 1.0) - b.C.trace() / (n - 1.0);
  r.details.emplace_back("value_alt", alt);
  r.details.emplace_back("form_residual", std::abs(r.value - alt));
  classify(r, tol);
  return r;
}

CriterionReport xi_sud_two_body(const NQuditState& rho_av2, int N, const GeneratorBasis& basis,
                                double tol) {
  const TwoBodyBundle tb = correlations::two_body_bundle(rho_av2, basis);
  CriterionReport r;
  r.name = "xi_sud_two_body";
  r.eigenvalues = sym_eigvals(tb.gammaAv2);
  const double cut = eig_sign_cutoff(tb.gammaAv2);
  double neg = 0;
  for (int k = 0; k < r.eigenvalues.size(); ++k)
    if (r.eigenvalues(k) < -cut) neg += r.eigenvalues(k);
  const double n = N;
  r.value = n * n * (neg + (2.0 / n) * (1.0 - tb.Fexp));
  r.details.emplace_back("Fexp", tb.Fexp);
  classify(r, tol);
  return r;
}

InequalityMargin sud_inequality_set(const CollectiveBundle& b, const std::vector<int>& I) {
  const int m = static_cast<int>(b.U.rows());
  std::vector<bool> in(static_cast<size_t>(m), false);
  for (int k : I) {
    if (k < 0 || k >= m) throw IndexOutOfRange("sud_inequality_set: index out of range");
    in[static_cast<size_t>(k)] = true;
  }
  double sum_in = 0, sum_out = 0;
  for (int k = 0; k < m; ++k) (in[static_cast<size_t>(k)] ? sum_in : sum_out) += b.U(k, k);
  const double n = b.N, d = b.d;
  InequalityMargin im;
  im.margin = b.gamma.trace() - sum_in - 2.0 * n * (d - 1.0);
  im.margin_alt =
      sum_out + n * (n + d) * lambda_max(b.d) / (n - 1.0) - b.C.trace() / (n - 1.0);
  return im;
}

CriterionReport spin_squeezing_set(const NQuditState& state, const SpinOperators& spin,
                                   double tol) {
  return spin_squeezing_set(correlations::spin_bundle(state, spin), tol);
}

CriterionReport spin_squeezing_set(const SpinBundle& b, double tol) {
  const double n = b.N, j = (b.d - 1) / 2.0;
  const RealVector ev = sym_eigvals(b.U);
  CriterionReport r;
  r.name = "spin_squeezing_set";
  r.eigenvalues = ev;
  const double trc = b.C.trace(), trg = b.gamma.trace();
  const double m1 = n * j * (n * j + 1) - trc;
  const double m2 = trg - n * j;
  const double m3 = (n - 1.0) * ev(0) - trc + n * j * (n * j + 1);
  const double m4 = trg - n * j - ev(ev.size() - 1);
  r.details = {{"second_moment", m1}, {"variance", m2}, {"u_min", m3}, {"u_max", m4}};
  r.value = std::min(std::min(m1, m2), std::min(m3, m4));
  classify(r, tol);
  return r;
}

CriterionReport xi_spin(const NQuditState& rho_av2, int N, const SpinOperators& spin,
                        double tol) {
  const TwoBodySpinBundle tb = correlations::two_body_spin_bundle(rho_av2, spin);
  CriterionReport r;
  r.name = "xi_spin";
  r.eigenvalues = sym_eigvals(tb.gammaAv2);
  const double cut = eig_sign_cutoff(tb.gammaAv2);
  double neg = 0;
  for (int k = 0; k < r.eigenvalues.size(); ++k)
    if (r.eigenvalues(k) < -cut) neg += r.eigenvalues(k);
  const double n = N, j = spin.j();
  r.value = n * n * (neg - (tb.Cav2.trace() - j * j) / n);
  classify(r, tol);
  return r;
}

CriterionReport ppt_all_bipartitions(const NQuditState& state, double tol, bool early_exit) {
  const int n = state.n_sites();
  if (n < 2) throw TooFewSites("ppt_all_bipartitions: N >= 2 required");
  CriterionReport r;
  r.name = "ppt";
  double worst = std::numeric_limits<double>::infinity();
  // bipartitions indexed by subsets containing site 0 (complement gives the
  // transposed matrix, same spectrum)
  const unsigned long nmask = 1UL << (n - 1);
  for (unsigned long mask = 0; mask < nmask; ++mask) {
    std::set<int> subset = {0};
    for (int s = 1; s < n; ++s)
      if (mask & (1UL << (s - 1))) subset.insert(s);
    if (static_cast<int>(subset.size()) == n) continue;
    const double lmin =
        linalg::min_eigenvalue(many_body::partial_transpose(state, subset));
    worst = std::min(worst, lmin);
    if (early_exit && worst < -tol) break;
  }
  r.value = worst;
  classify(r, tol);
  return r;
}

namespace {

ComplexMatrix realign_reshuffle(const ComplexMatrix& rho, int d) {
  ComplexMatrix out(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) out(i * d + j, k * d + l) = rho(i * d + k, j * d + l);
  return out;
}

}  // namespace

CriterionReport ccnr(const NQuditState& rho2, double tol) {
  if (rho2.n_sites() != 2) throw DimensionMismatch("ccnr: two-site state required");
  const int d = rho2.d();
  const ComplexMatrix f = basis::flip_operator(d);
  // (rho F)^{T_b} F
  ComplexMatrix rhof = rho2.rho() * f;
  ComplexMatrix tb(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) tb(i * d + j, k * d + l) = rhof(i * d + l, k * d + j);
  const ComplexMatrix r_flip = tb * f;
  const ComplexMatrix r_shuffle = realign_reshuffle(rho2.rho(), d);

  CriterionReport r;
  r.name = "ccnr";
  const double tn = linalg::trace_norm(r_shuffle);
  r.value = 1.0 - tn;
  r.details.emplace_back("trace_norm", tn);
  r.details.emplace_back("realign_residual", (r_flip - r_shuffle).norm());
  classify(r, tol);
  return r;
}

CriterionReport werner_criterion(double Fexp, int N, int d, double tol) {
  CriterionReport r;
  r.name = "werner";
  const double threshold = (N - static_cast<double>(d)) / (d * (N - 1.0));
  r.value = Fexp - threshold;
  r.details.emplace_back("threshold", threshold);
  r.details.emplace_back("Fexp", Fexp);
  classify(r, tol);
  return r;
}

}  // namespace sudsq::criteria
