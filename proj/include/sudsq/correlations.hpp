#pragma once

#include "sudsq/many_body.hpp"

namespace sudsq {

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// N-particle correlation matrices for one state and generator basis:
/// C_kl = (1/2)<{G_k,G_l}>, gamma = C - <G><G>^T,
/// Q_kl = (1/N) sum_n ((1/2)<{g_k,g_l}^(n)> - Q0 delta_kl) with Q0 = 2/d,
/// U = gamma + C/(N-1) - N^2/(N-1) (Q + Q0 I).
struct CollectiveBundle {
  int N = 0;
  int d = 0;
  double Q0 = 0;
  RealVector Gexp;
  RealMatrix C, gamma, Q, U;
};

/// The same bundle built from collective spin components Jx, Jy, Jz
/// (3x3 matrices, Q0 = j(j+1)/3).
struct SpinBundle {
  int N = 0;
  int d = 0;
  double Q0 = 0;
  RealVector Jexp;
  RealMatrix C, gamma, Q, U;
};

/// Two-body quantities on a (permutationally invariant) two-site state:
/// (C_av2)_kl = <g_k (x) g_l>, gamma_av2 = C_av2 - gexp gexp^T, Fexp = <F>.
struct TwoBodyBundle {
  int d = 0;
  RealVector gexp;
  RealMatrix Cav2, gammaAv2;
  double Fexp = 0;
};

/// Two-body spin moments: (C_av2)_kl = <j_k (x) j_l> symmetrized.
struct TwoBodySpinBundle {
  int d = 0;
  RealVector jexp;
  RealMatrix Cav2, gammaAv2;
};

/// Residuals of the identities tying collective and two-body quantities
/// together (all should vanish for a valid state).
struct IdentityReport {
  double u_vs_gamma_av2 = 0;      // ||U - N^2 gamma_av2||
  double trace_c_vs_flip = 0;     // x_{d^2} two routes
  double cross_correlation = 0;   // ||C - NQ - NQ0 I - N(N-1) C_av2||
};

namespace correlations {

CollectiveBundle collective_bundle(const NQuditState& state, const GeneratorBasis& basis);

SpinBundle spin_bundle(const NQuditState& state, const SpinOperators& spin);

/// Warns (returns through `swap_residual` if given) when rho2 is not
/// pair-swap invariant; never fails on it.
TwoBodyBundle two_body_bundle(const NQuditState& rho2, const GeneratorBasis& basis,
                              double* swap_residual = nullptr);

TwoBodySpinBundle two_body_spin_bundle(const NQuditState& rho2, const SpinOperators& spin);

/// The older combination (N-1) gamma + C - N^2 Q, recovered from U as
/// (N-1) U + N^2 Q0 I.
RealMatrix chi_matrix(const CollectiveBundle& bundle);

IdentityReport check_identities(const NQuditState& state, const GeneratorBasis& basis);

}  // namespace correlations
}  // namespace sudsq
