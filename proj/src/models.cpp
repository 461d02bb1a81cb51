#include "sudsq/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sudsq::models {

ComplexMatrix hamiltonian_sud_singlet(int N, int d, const GeneratorBasis& basis) {
  return hamiltonian_random_collective(N, d, basis, RealVector::Ones(basis.size()));
}

ComplexMatrix hamiltonian_random_collective(int N, int d, const GeneratorBasis& basis,
                                            const RealVector& c) {
  if (c.size() != basis.size())
    throw LengthMismatch("hamiltonian_random_collective: coefficient count != d^2-1");
  const Eigen::Index dim = many_body::pow_dim(d, N);
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < basis.size(); ++k) {
    const ComplexMatrix gk = many_body::collective_operator(basis, k, N);
    h += (c(k) / N) * gk * gk;
  }
  return (h + h.adjoint()) / 2.0;
}

ComplexMatrix hamiltonian_spin(int N, double gamma, int sign, const SpinOperators& spin) {
  const ComplexMatrix jx = many_body::collective_operator(spin.jx, N);
  const ComplexMatrix jy = many_body::collective_operator(spin.jy, N);
  const ComplexMatrix jz = many_body::collective_operator(spin.jz, N);
  ComplexMatrix h = (jx * jx + jy * jy + gamma * jz * jz) * (static_cast<double>(sign) / N);
  return (h + h.adjoint()) / 2.0;
}

NQuditState thermal_state(const HermitianEigen& eig, int d, int n_sites, double T) {
  const double e0 = eig.values(0);
  RealVector w(eig.values.size());
  if (T <= 0.0) {
    const double thr = 1e-9 * std::max(1.0, std::abs(e0));
    for (Eigen::Index i = 0; i < w.size(); ++i)
      w(i) = (eig.values(i) - e0 <= thr) ? 1.0 : 0.0;
  } else {
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = std::exp(-(eig.values(i) - e0) / T);
  }
  w /= w.sum();
  ComplexMatrix rho = eig.vectors * w.asDiagonal() * eig.vectors.adjoint();
  return NQuditState(d, n_sites, std::move(rho), true);
}

NQuditState thermal_state(const ComplexMatrix& H, int d, int n_sites, double T) {
  return thermal_state(linalg::eig_hermitian(H), d, n_sites, T);
}

NQuditState sud_singlet(int N, int d) {
  if (N < d) throw SingletNonexistent("sud_singlet: exists only for N >= d");
  const GeneratorBasis b = basis::gellmann(d);
  return thermal_state(hamiltonian_sud_singlet(N, d, b), d, N, 0.0);
}

NQuditState noisy_singlet(int N, int d, double p_noise) {
  if (p_noise < 0.0 || p_noise > 1.0) throw OutOfRange("noisy_singlet: p_noise in [0,1]");
  const NQuditState s = sud_singlet(N, d);
  const Eigen::Index dim = s.dim();
  ComplexMatrix rho = (1.0 - p_noise) * s.rho() +
                      (p_noise / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim);
  return NQuditState(d, N, std::move(rho), true);
}

NQuditState werner_two_qudit(double Fexp, int d) {
  if (Fexp < -1.0 || Fexp > 1.0) throw OutOfRange("werner_two_qudit: Fexp in [-1,1]");
  const ComplexMatrix f = basis::flip_operator(d);
  const double dd = d;
  ComplexMatrix rho = ((dd - Fexp) * ComplexMatrix::Identity(d * d, d * d) +
                       (dd * Fexp - 1.0) * f) /
                      (dd * dd * dd - dd);
  return NQuditState(d, 2, std::move(rho), true);
}

NQuditState rho_ps3() {
  const GeneratorBasis b = basis::gellmann(3);
  const ComplexMatrix eye3 = ComplexMatrix::Identity(3, 3) / 3.0;
  const double s = 1.0 / std::sqrt(3.0);
  ComplexMatrix sum = ComplexMatrix::Zero(9, 9);
  for (const auto& g : b.generators) {
    sum += linalg::kron(eye3 + s * g, eye3 - s * g);
    sum += linalg::kron(eye3 - s * g, eye3 + s * g);
  }
  // 16 unit-trace terms as printed; normalized to a state
  return NQuditState(3, 2, sum / 16.0, true);
}

VertexFactors vertex_factors(int k, const GeneratorBasis& basis, const RealVector& Gexp, int N) {
  const int m = basis.size();
  if (Gexp.size() != m) throw LengthMismatch("vertex_factors: Gexp length != d^2-1");
  if (k < 0 || k >= m) throw IndexOutOfRange("vertex_factors: direction index");
  const double lmax = lambda_max(basis.d);
  const double g2 = Gexp.squaredNorm() / (static_cast<double>(N) * N);
  double lambda = lmax - g2;
  if (lambda < -1e-12) throw InfeasibleGexp("vertex_factors: |Gexp|^2/N^2 > Lambda_max");
  lambda = std::max(lambda, 0.0);
  const double kappa = lambda / lmax;
  const double ck = std::sqrt(lambda + Gexp(k) * Gexp(k) / (static_cast<double>(N) * N));

  // the sign flips the whole traceless part; only then do the mixtures'
  // gamma diagonals reproduce the vertex coordinates for Gexp != 0
  ComplexMatrix bloch = 0.5 * ck * basis[k];
  for (int r = 0; r < m; ++r)
    if (r != k) bloch += 0.5 * (Gexp(r) / N) * basis[r];
  const ComplexMatrix eye = ComplexMatrix::Identity(basis.d, basis.d) / basis.d;

  VertexFactors v;
  v.plus = eye + bloch;
  v.minus = eye - bloch;
  v.p = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - kappa)));
  v.n_plus = N * v.p;
  v.n_plus_int = static_cast<int>(std::floor(v.n_plus + 1e-12));
  v.epsilon = v.n_plus - v.n_plus_int;
  v.physical = linalg::min_eigenvalue(v.plus) >= -1e-9 && linalg::min_eigenvalue(v.minus) >= -1e-9;
  return v;
}

namespace {

ComplexMatrix tensor_power(const ComplexMatrix& a, int n) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = linalg::kron(out, a);
  return out;
}

}  // namespace

NQuditState vertex_state_A(int k, const GeneratorBasis& basis, const RealVector& Gexp, int N) {
  const VertexFactors v = vertex_factors(k, basis, Gexp, N);
  ComplexMatrix rho = v.p * tensor_power(v.plus, N) + (1.0 - v.p) * tensor_power(v.minus, N);
  return NQuditState(basis.d, N, std::move(rho), v.physical);
}

NQuditState vertex_state_B(int k, const GeneratorBasis& basis, const RealVector& Gexp, int N) {
  const VertexFactors v = vertex_factors(k, basis, Gexp, N);
  ComplexMatrix rho =
      linalg::kron(tensor_power(v.plus, v.n_plus_int), tensor_power(v.minus, N - v.n_plus_int));
  return NQuditState(basis.d, N, std::move(rho), v.physical);
}

NQuditState dicke_state(int N, int m) {
  if (m < 0 || m > N) throw OutOfRange("dicke_state: 0 <= m <= N");
  const Eigen::Index dim = many_body::pow_dim(2, N);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  // qubit basis: index bit 0 <-> |1> (m = +1/2), bit 1 <-> |0>
  for (Eigen::Index i = 0; i < dim; ++i) {
    int ones = 0;
    for (int s = 0; s < N; ++s)
      if (!((i >> s) & 1)) ++ones;
    if (ones == m) psi(i) = 1.0;
  }
  psi.normalize();
  return NQuditState(2, N, psi * psi.adjoint(), true);
}

NQuditState spin1_map(const NQuditState& qubit_state) {
  if (qubit_state.d() != 2 || qubit_state.n_sites() % 2 != 0)
    throw UnsupportedInput("spin1_map: input must be an even number of qubits");
  const int n = qubit_state.n_sites() / 2;
  // pair isometry |+1> -> |11>, |0> -> (|01>+|10>)/sqrt(2), |-1> -> |00>
  ComplexMatrix v = ComplexMatrix::Zero(4, 3);
  v(0, 0) = 1.0;
  v(1, 1) = v(2, 1) = 1.0 / std::sqrt(2.0);
  v(3, 2) = 1.0;
  const ComplexMatrix w = tensor_power(v, n);
  const ComplexMatrix p = w * w.adjoint();
  const ComplexMatrix& rho = qubit_state.rho();
  if ((rho - p * rho * p).norm() > 1e-9)
    throw UnsupportedInput("spin1_map: antisymmetric pair component too large");
  return NQuditState(3, n, w.adjoint() * rho * w, qubit_state.physical());
}

ComplexMatrix random_pure(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
  psi.normalize();
  return psi * psi.adjoint();
}

NQuditState random_state(int d, int n_sites, std::mt19937_64& rng) {
  const Eigen::Index dim = many_body::pow_dim(d, n_sites);
  std::normal_distribution<double> gauss;
  ComplexMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return NQuditState(d, n_sites, std::move(rho), true);
}

NQuditState random_separable(int d, int n_sites, std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::exponential_distribution<double> expo(1.0);
  const int terms = nterms(rng);
  RealVector w(terms);
  for (int t = 0; t < terms; ++t) w(t) = expo(rng);
  w /= w.sum();
  const Eigen::Index dim = many_body::pow_dim(d, n_sites);
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (int t = 0; t < terms; ++t) {
    ComplexMatrix prod = ComplexMatrix::Identity(1, 1);
    for (int s = 0; s < n_sites; ++s) prod = linalg::kron(prod, random_pure(d, rng));
    rho += w(t) * prod;
  }
  return NQuditState(d, n_sites, std::move(rho), true);
}

NQuditState random_bosonic(int d, int n_sites, std::mt19937_64& rng) {
  const Eigen::Index dim = many_body::pow_dim(d, n_sites);
  // symmetrizer (1/N!) sum_pi V_pi
  std::vector<int> perm(static_cast<size_t>(n_sites));
  std::iota(perm.begin(), perm.end(), 0);
  ComplexMatrix sym = ComplexMatrix::Zero(dim, dim);
  int count = 0;
  std::vector<Eigen::Index> strides(static_cast<size_t>(n_sites));
  Eigen::Index cur = 1;
  for (int s = n_sites - 1; s >= 0; --s) {
    strides[static_cast<size_t>(s)] = cur;
    cur *= d;
  }
  do {
    for (Eigen::Index i = 0; i < dim; ++i) {
      Eigen::Index j = 0;
      for (int s = 0; s < n_sites; ++s) {
        const Eigen::Index digit = (i / strides[static_cast<size_t>(s)]) % d;
        j += digit * strides[static_cast<size_t>(perm[static_cast<size_t>(s)])];
      }
      sym(j, i) += 1.0;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  sym /= count;

  const NQuditState raw = random_state(d, n_sites, rng);
  ComplexMatrix rho = sym * raw.rho() * sym.adjoint();
  rho /= rho.trace().real();
  return NQuditState(d, n_sites, std::move(rho), true);
}

}  // namespace sudsq::models
