#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sudsq/correlations.hpp"
#include "sudsq/criteria.hpp"
#include "sudsq/models.hpp"

using namespace sudsq;

TEST_CASE("collective Hamiltonians") {
  const GeneratorBasis b3 = basis::gellmann(3);
  // su(3) singlets live only at N divisible by 3: ground energy is zero
  // exactly there
  for (int N : {2, 3, 4, 5, 6}) {
    const double e0 = linalg::eigvals_hermitian(models::hamiltonian_sud_singlet(N, 3, b3))(0);
    if (N % 3 == 0)
      CHECK(std::abs(e0) < 1e-10);
    else
      CHECK(e0 > 1e-6);
  }
  const GeneratorBasis b2 = basis::gellmann(2);
  const ComplexMatrix h22 = models::hamiltonian_sud_singlet(2, 2, b2);
  const HermitianEigen eig = linalg::eig_hermitian(h22);
  CHECK(std::abs(eig.values(0)) < 1e-12);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs((eig.vectors.col(0).adjoint() * psi)(0)) - 1.0) < 1e-10);

  // random-collective with all-ones coefficients reduces to the singlet model
  const RealVector ones = RealVector::Ones(8);
  CHECK((models::hamiltonian_random_collective(3, 3, b3, ones) -
         models::hamiltonian_sud_singlet(3, 3, b3))
            .norm() < 1e-12);
  // a unit coefficient vector picks out one G_k^2
  RealVector e4 = RealVector::Zero(8);
  e4(4) = 1.0;
  const ComplexMatrix g4 = many_body::collective_operator(b3, 4, 3);
  CHECK((models::hamiltonian_random_collective(3, 3, b3, e4) - g4 * g4 / 3.0).norm() < 1e-12);
  CHECK_THROWS_AS(models::hamiltonian_random_collective(3, 3, b3, RealVector::Ones(5)),
                  LengthMismatch);

  // permutation invariance of all Hamiltonian families
  const SpinOperators sp = basis::spin_matrices(3);
  for (const ComplexMatrix& h :
       {models::hamiltonian_sud_singlet(3, 3, b3), models::hamiltonian_spin(3, 0.7, +1, sp),
        models::hamiltonian_spin(3, 0.0, -1, sp)}) {
    const ComplexMatrix v = many_body::swap_operator(3, 3, 0, 2);
    CHECK((v * h * v - h).norm() < 1e-10);
  }
}

TEST_CASE("thermal states") {
  const GeneratorBasis b = basis::gellmann(3);
  const ComplexMatrix h = models::hamiltonian_sud_singlet(3, 3, b);

  // very hot: maximally mixed
  const NQuditState hot = models::thermal_state(h, 3, 3, 1e9);
  CHECK((hot.rho() - ComplexMatrix::Identity(27, 27) / 27.0).norm() < 1e-6);

  // T = 0: the singlet, with vanishing first and second collective moments
  const NQuditState cold = models::thermal_state(h, 3, 3, 0.0);
  for (int k = 0; k < 8; ++k) {
    const ComplexMatrix gk = many_body::collective_operator(b, k, 3);
    CHECK(std::abs(cold.expectation(gk)) < 1e-10);
    CHECK(std::abs(cold.expectation(ComplexMatrix(gk * gk))) < 1e-10);
  }

  // positivity and permutation invariance across a grid
  for (double t : {0.1, 1.0, 10.0}) {
    const NQuditState s = models::thermal_state(h, 3, 3, t);
    CHECK(s.check_positivity() >= -1e-12);
    CHECK(many_body::is_permutation_invariant(s));
  }
}

TEST_CASE("noisy singlet marginal") {
  const GeneratorBasis b = basis::gellmann(3);
  // closed form: 1/d^2 - sum_k (1-p)/(2d(N-1)) g_k (x) g_k, exact whenever the
  // true singlet exists (N divisible by d)
  for (int N : {3, 6}) {
    for (double p : {0.0, 0.3, 0.75}) {
      const NQuditState m = many_body::avg_two_body(models::noisy_singlet(N, 3, p));
      ComplexMatrix closed = ComplexMatrix::Identity(9, 9) / 9.0;
      for (const auto& g : b.generators)
        closed -= (1.0 - p) / (6.0 * (N - 1.0)) * linalg::kron(g, g);
      CHECK((m.rho() - closed).norm() < 1e-9);
      const double fexp = m.expectation(basis::flip_operator(3));
      CHECK(fexp == doctest::Approx((N - 9.0 + p * 8.0) / (3.0 * (N - 1.0))).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(models::sud_singlet(2, 3), SingletNonexistent);
  CHECK_THROWS_AS(models::noisy_singlet(3, 3, 1.5), OutOfRange);
}

TEST_CASE("Werner states") {
  const GeneratorBasis b = basis::gellmann(3);
  CHECK((models::werner_two_qudit(1.0 / 3.0, 3).rho() - ComplexMatrix::Identity(9, 9) / 9.0)
            .norm() < 1e-12);
  const ComplexMatrix f = basis::flip_operator(3);
  for (double fe : {-1.0, -0.3, 0.0, 0.5, 1.0}) {
    const NQuditState w = models::werner_two_qudit(fe, 3);
    CHECK(w.expectation(f) == doctest::Approx(fe).epsilon(1e-10));
    CHECK(std::abs(w.rho().trace().real() - 1.0) < 1e-12);
    // <g_k (x) g_k> equal across k
    const double ref = w.expectation(linalg::kron(b[0], b[0]));
    for (int k = 1; k < 8; ++k)
      CHECK(w.expectation(linalg::kron(b[k], b[k])) == doctest::Approx(ref).epsilon(1e-10));
  }
  CHECK_THROWS_AS(models::werner_two_qudit(1.5, 3), OutOfRange);
}

TEST_CASE("two-qutrit boundary state") {
  const NQuditState s = models::rho_ps3();
  CHECK(s.d() == 3);
  CHECK(s.n_sites() == 2);
  CHECK(std::abs(s.rho().trace().real() - 1.0) < 1e-12);
  CHECK(s.check_positivity() >= -1e-10);
  const ComplexMatrix v = many_body::swap_operator(3, 2, 0, 1);
  CHECK((v * s.rho() * v - s.rho()).norm() < 1e-12);
  CHECK(linalg::min_eigenvalue(many_body::partial_transpose(s, {0})) < -1e-6);
}

TEST_CASE("vertex factors") {
  const GeneratorBasis b = basis::gellmann(3);
  const RealVector zero = RealVector::Zero(8);

  const models::VertexFactors vf = models::vertex_factors(0, b, zero, 4);
  CHECK(vf.p == doctest::Approx(0.5));       // 4p(1-p) = kappa = 1
  CHECK(vf.n_plus == doctest::Approx(2.0));  // N p integer here
  CHECK(vf.n_plus_int == 2);
  CHECK(vf.epsilon == doctest::Approx(0.0));
  // rho_+/- sit on the maximal Bloch sphere: sum_r Tr(rho g_r)^2 = Lambda_max
  for (const ComplexMatrix* f : {&vf.plus, &vf.minus}) {
    double s2 = 0;
    for (int r = 0; r < 8; ++r) {
      const double tr = (*f * b[r]).trace().real();
      s2 += tr * tr;
    }
    CHECK(s2 == doctest::Approx(lambda_max(3)).epsilon(1e-10));
  }
  // Gexp = 0, k = 0: rho_+/- = I/3 +- (1/2) sqrt(4/3) g_0
  const ComplexMatrix expect =
      ComplexMatrix::Identity(3, 3) / 3.0 + 0.5 * std::sqrt(4.0 / 3.0) * b[0];
  CHECK((vf.plus - expect).norm() < 1e-12);
  CHECK_FALSE(models::vertex_state_A(0, b, zero, 4).physical());

  // fully polarized Bloch vector: the polytope collapses, p degenerates
  RealVector gmax = RealVector::Zero(8);
  gmax(2) = 4.0 * std::sqrt(lambda_max(3));
  const models::VertexFactors vc = models::vertex_factors(0, b, gmax, 4);
  CHECK(vc.p == doctest::Approx(1.0));  // kappa = 0
  RealVector gbad = gmax * 1.01;
  CHECK_THROWS_AS(models::vertex_factors(0, b, gbad, 4), InfeasibleGexp);

  // N = 5: N p = 2.5, the B state rounds down
  const models::VertexFactors v5 = models::vertex_factors(0, b, zero, 5);
  CHECK(v5.n_plus_int == 2);
  CHECK(v5.epsilon == doctest::Approx(0.5));
  const NQuditState sb = models::vertex_state_B(0, b, zero, 5);
  CHECK(sb.n_sites() == 5);
}

TEST_CASE("Dicke states and the qubit-pair map") {
  // D_N^(0) = |0...0>, here the m = -N/2 end of the ladder
  const NQuditState d40 = models::dicke_state(4, 0);
  CHECK(std::abs(d40.rho()(15, 15).real() - 1.0) < 1e-12);

  const NQuditState d21 = models::dicke_state(2, 1);
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(1, 1) = bell(1, 2) = bell(2, 1) = bell(2, 2) = 0.5;
  CHECK((d21.rho() - bell).norm() < 1e-12);
  CHECK_THROWS_AS(models::dicke_state(2, 3), OutOfRange);

  // half-filled Dicke state of 8 qubits, mapped pairwise to 4 spin-1 sites,
  // is the ground state of the isotropic ferromagnet
  const NQuditState mapped = models::spin1_map(models::dicke_state(8, 4));
  CHECK(mapped.d() == 3);
  CHECK(mapped.n_sites() == 4);
  const SpinOperators sp = basis::spin_matrices(3);
  const HermitianEigen eig = linalg::eig_hermitian(models::hamiltonian_spin(4, 0.0, -1, sp));
  const Eigen::VectorXcd g = eig.vectors.col(0);
  CHECK((g.adjoint() * mapped.rho() * g)(0).real() >= 1.0 - 1e-8);

  // antisymmetric pair content is rejected
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(models::spin1_map(NQuditState(2, 2, psi * psi.adjoint(), true)),
                  UnsupportedInput);
}

TEST_CASE("random samplers") {
  std::mt19937_64 rng(51);
  for (int rep = 0; rep < 5; ++rep) {
    const NQuditState s = models::random_state(3, 2, rng);
    CHECK(s.check_positivity() >= -1e-12);
    CHECK(std::abs(s.rho().trace().real() - 1.0) < 1e-12);

    const NQuditState sep = models::random_separable(3, 3, rng);
    CHECK(sep.check_positivity() >= -1e-12);

    const NQuditState bos = models::random_bosonic(3, 3, rng);
    CHECK(bos.check_positivity() >= -1e-12);
    CHECK(many_body::is_bosonic(bos));
  }
  // determinism under a fixed seed
  std::mt19937_64 a(7), c(7);
  CHECK((models::random_state(3, 2, a).rho() - models::random_state(3, 2, c).rho()).norm() ==
        0.0);
}
