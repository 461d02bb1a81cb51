#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sudsq/correlations.hpp"

namespace sudsq {

/// Outcome of one entanglement criterion. `value` is a signed margin:
/// detected iff value < -tol; |value| <= tol is reported as boundary.
struct CriterionReport {
  std::string name;
  double value = 0;
  bool detected = false;
  bool boundary = false;
  RealVector eigenvalues;
  std::vector<std::pair<std::string, double>> details;
};

namespace criteria {

inline constexpr double kDetectTol = 1e-9;

/// Eigenvalues within +-1e-10 * max(1, ||U||_2) of zero count as neither
/// positive nor negative; keeps the two equivalent parameter forms consistent.
double eig_sign_cutoff(const RealMatrix& u);

/// xi_su(d) from collective correlations: Tr(gamma) - sum of positive
/// eigenvalues of U - 2N(d-1). Both equivalent forms are evaluated; their
/// difference is reported in details as "form_residual".
CriterionReport xi_sud_collective(const CollectiveBundle& bundle, double tol = kDetectTol);

/// xi_su(d) from the average two-body state:
/// N^2 (sum of negative eigenvalues of gamma_av2 + (2/N)(1 - <F>)).
CriterionReport xi_sud_two_body(const NQuditState& rho_av2, int N, const GeneratorBasis& basis,
                                double tol = kDetectTol);

struct InequalityMargin {
  double margin = 0;      // Tr(gamma) - sum_{k in I} U_kk - 2N(d-1)
  double margin_alt = 0;  // complement form through Tr(C)
};

/// One member of the su(d)-squeezing inequality set, indexed by a subset of
/// generator indices (empty allowed).
InequalityMargin sud_inequality_set(const CollectiveBundle& bundle, const std::vector<int>& I);

/// The four generalized spin-squeezing inequalities; details carry the four
/// margins, value is their minimum.
CriterionReport spin_squeezing_set(const NQuditState& state, const SpinOperators& spin,
                                   double tol = kDetectTol);
CriterionReport spin_squeezing_set(const SpinBundle& bundle, double tol = kDetectTol);

/// Spin-squeezing parameter from the average two-body state:
/// N^2 (sum of negative eigenvalues of gamma_av2^J - (1/N)[Tr(C_av2^J) - j^2]).
CriterionReport xi_spin(const NQuditState& rho_av2, int N, const SpinOperators& spin,
                        double tol = kDetectTol);

/// Minimum eigenvalue of the partial transpose over all 2^(N-1)-1
/// bipartitions. With early_exit, stops at the first bipartition already
/// below -tol (detection verdict unchanged, value then not the global min).
CriterionReport ppt_all_bipartitions(const NQuditState& state, double tol = kDetectTol,
                                     bool early_exit = false);

/// CCNR on a two-site state: value = 1 - Tr|R(rho)|. The realignment is
/// computed both by index reshuffle and via (rho F)^{T_b} F; their agreement
/// is reported in details as "realign_residual".
CriterionReport ccnr(const NQuditState& rho2, double tol = kDetectTol);

/// Werner-state specialization: detected iff Fexp < (N-d)/(d(N-1)) - tol.
CriterionReport werner_criterion(double Fexp, int N, int d, double tol = kDetectTol);

}  // namespace criteria
}  // namespace sudsq
