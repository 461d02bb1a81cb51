#pragma once

#include <optional>
#include <random>

#include "sudsq/many_body.hpp"

namespace sudsq {

struct LengthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingletNonexistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleGexp : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace models {

/// H = (1/N) sum_k G_k^2; ground space are the su(d) singlets (for N >= d).
ComplexMatrix hamiltonian_sud_singlet(int N, int d, const GeneratorBasis& basis);

/// H = (1/N) sum_k c_k G_k^2.
ComplexMatrix hamiltonian_random_collective(int N, int d, const GeneratorBasis& basis,
                                            const RealVector& c);

/// sign * (1/N)(Jx^2 + Jy^2 + gamma Jz^2); sign +1 antiferromagnetic,
/// -1 ferromagnetic.
ComplexMatrix hamiltonian_spin(int N, double gamma, int sign, const SpinOperators& spin);

/// exp(-H/T)/Tr[exp(-H/T)], computed on the shifted spectrum
/// exp(-(E-E0)/T). T = 0 gives the normalized ground-space projector
/// (degeneracy threshold E - E0 <= 1e-9 max(1,|E0|)).
NQuditState thermal_state(const HermitianEigen& eig, int d, int n_sites, double T);
NQuditState thermal_state(const ComplexMatrix& H, int d, int n_sites, double T);

NQuditState sud_singlet(int N, int d);
NQuditState noisy_singlet(int N, int d, double p_noise);

/// rho_W = (1/(d^3-d)) [(d - Fexp) I + (d Fexp - 1) F].
NQuditState werner_two_qudit(double Fexp, int d);

/// The two-qutrit pseudo-separable PPT-violating state, normalized to unit
/// trace.
NQuditState rho_ps3();

/// Single-particle vertex factors rho_{+-,k} = I/d +- (c_k/2) g_k
/// + (1/2) sum_{r != k} (<G_r>/N) g_r; flagged non-physical when a factor has
/// a negative eigenvalue.
struct VertexFactors {
  ComplexMatrix plus, minus;
  double p = 0;        // mixing weight, 4p(1-p) = Lambda/Lambda_max
  double n_plus = 0;   // Np (possibly non-integer)
  int n_plus_int = 0;  // floor(Np)
  double epsilon = 0;  // Np - floor(Np)
  bool physical = false;
};

VertexFactors vertex_factors(int k, const GeneratorBasis& basis, const RealVector& Gexp, int N);

/// rho_A = p rho_+^(x)N + (1-p) rho_-^(x)N.
NQuditState vertex_state_A(int k, const GeneratorBasis& basis, const RealVector& Gexp, int N);

/// rho_B = rho_+^(x)N+ (x) rho_-^(x)(N-N+), N+ = floor(Np).
NQuditState vertex_state_B(int k, const GeneratorBasis& basis, const RealVector& Gexp, int N);

/// Symmetric Dicke state of N qubits with m excitations (pure state
/// projector).
NQuditState dicke_state(int N, int m);

/// Map a 2N-qubit state supported on the symmetric subspace of each qubit
/// pair to an N-site spin-1 state.
NQuditState spin1_map(const NQuditState& qubit_state);

/// Haar-random pure state projector on dim `dim`.
ComplexMatrix random_pure(Eigen::Index dim, std::mt19937_64& rng);

/// Random full-rank density matrix (Ginibre construction).
NQuditState random_state(int d, int n_sites, std::mt19937_64& rng);

/// Mixture of <= max_terms Haar-random pure product states with
/// Dirichlet-uniform weights.
NQuditState random_separable(int d, int n_sites, std::mt19937_64& rng, int max_terms = 5);

/// Random state projected onto the bosonic (symmetric) subspace and
/// renormalized.
NQuditState random_bosonic(int d, int n_sites, std::mt19937_64& rng);

}  // namespace models
}  // namespace sudsq
