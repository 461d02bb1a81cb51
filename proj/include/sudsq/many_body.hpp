#pragma once

#include <set>

#include "sudsq/basis.hpp"
#include "sudsq/linalg.hpp"

namespace sudsq {

struct SiteOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyKeepSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSubset : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooFewSites : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense N-qudit density matrix of dim d^N. Hermiticity and unit trace are
/// enforced on construction; positivity only when `physical` is set
/// (pseudo-separable machinery deliberately allows non-positive matrices).
class NQuditState {
 public:
  NQuditState(int d, int n_sites, ComplexMatrix rho, bool physical = false);

  int d() const { return d_; }
  int n_sites() const { return n_; }
  bool physical() const { return physical_; }
  const ComplexMatrix& rho() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }

  double expectation(const ComplexMatrix& op) const {
    return (op * rho_).trace().real();
  }

  /// Smallest eigenvalue of rho; throws InvariantViolation if the physical
  /// flag is set and it is below -1e-9.
  double check_positivity() const;

 private:
  int d_;
  int n_;
  bool physical_;
  ComplexMatrix rho_;
};

namespace many_body {

Eigen::Index pow_dim(int d, int n);

/// op on `site`, identity elsewhere; dim d^N.
ComplexMatrix embed_at_site(const ComplexMatrix& op, int site, int n_sites);

/// G_k = sum_n g_k^(n).
ComplexMatrix collective_operator(const GeneratorBasis& b, int k, int n_sites);
ComplexMatrix collective_operator(const ComplexMatrix& g, int n_sites);

/// Sum over sites of the single-site operator op: sum_n embed(op, n).
ComplexMatrix local_sum(const ComplexMatrix& op, int n_sites);

NQuditState partial_trace(const NQuditState& state, const std::set<int>& keep);

/// Transpose the given subset of sites; subset must be a proper nonempty
/// subset.
ComplexMatrix partial_transpose(const NQuditState& state, const std::set<int>& subset);

/// rho_av2 = (1/(N(N-1))) sum_{i != j} rho_ij.
NQuditState avg_two_body(const NQuditState& state);

/// Unitary permutation operator swapping sites a and b.
ComplexMatrix swap_operator(int d, int n_sites, int a, int b);

/// V rho = rho for all adjacent transpositions (bosonic symmetry).
bool is_bosonic(const NQuditState& state, double tol = 1e-10);

/// V rho V^dag = rho for all adjacent transpositions.
bool is_permutation_invariant(const NQuditState& state, double tol = 1e-10);

}  // namespace many_body
}  // namespace sudsq
