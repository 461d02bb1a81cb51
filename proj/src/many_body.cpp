#include "sudsq/many_body.hpp"

#include <vector>

namespace sudsq {

NQuditState::NQuditState(int d, int n_sites, ComplexMatrix rho, bool physical)
    : d_(d), n_(n_sites), physical_(physical) {
  if (d < 2 || n_sites < 1) throw InvariantViolation("state: d >= 2 and N >= 1 required");
  const Eigen::Index dim = many_body::pow_dim(d, n_sites);
  if (rho.rows() != dim || rho.cols() != dim)
    throw InvariantViolation("state: rho dimension does not match d^N");
  const double ref = std::max(1.0, rho.norm());
  if ((rho - rho.adjoint()).norm() > 1e-10 * ref)
    throw InvariantViolation("state: rho not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
    throw InvariantViolation("state: Tr(rho) != 1");
  rho_ = (rho + rho.adjoint()) / 2.0;
}

double NQuditState::check_positivity() const {
  const double lmin = linalg::min_eigenvalue(rho_);
  if (physical_ && lmin < -1e-9)
    throw InvariantViolation("state: physical flag set but min eigenvalue " +
                             std::to_string(lmin));
  return lmin;
}

namespace many_body {

Eigen::Index pow_dim(int d, int n) {
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  return dim;
}

ComplexMatrix embed_at_site(const ComplexMatrix& op, int site, int n_sites) {
  if (site < 0 || site >= n_sites) throw SiteOutOfRange("embed_at_site: site out of range");
  const Eigen::Index d = op.rows();
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int s = 0; s < n_sites; ++s)
    out = linalg::kron(out, s == site ? op : ComplexMatrix::Identity(d, d));
  return out;
}

ComplexMatrix collective_operator(const ComplexMatrix& g, int n_sites) {
  const Eigen::Index dim = pow_dim(static_cast<int>(g.rows()), n_sites);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (int s = 0; s < n_sites; ++s) out += embed_at_site(g, s, n_sites);
  return out;
}

ComplexMatrix collective_operator(const GeneratorBasis& b, int k, int n_sites) {
  if (k < 0 || k >= b.size()) throw IndexOutOfRange("collective_operator: generator index");
  return collective_operator(b[k], n_sites);
}

ComplexMatrix local_sum(const ComplexMatrix& op, int n_sites) {
  return collective_operator(op, n_sites);
}

namespace {

// site index strides for row-major tensor ordering (site 0 leftmost factor)
std::vector<Eigen::Index> site_strides(int d, int n) {
  std::vector<Eigen::Index> s(static_cast<size_t>(n));
  Eigen::Index cur = 1;
  for (int k = n - 1; k >= 0; --k) {
    s[static_cast<size_t>(k)] = cur;
    cur *= d;
  }
  return s;
}

}  // namespace

NQuditState partial_trace(const NQuditState& state, const std::set<int>& keep) {
  if (keep.empty()) throw EmptyKeepSet("partial_trace: keep set empty");
  const int n = state.n_sites(), d = state.d();
  for (int s : keep)
    if (s < 0 || s >= n) throw SiteOutOfRange("partial_trace: site out of range");
  std::vector<int> kept(keep.begin(), keep.end());
  std::vector<int> traced;
  for (int s = 0; s < n; ++s)
    if (!keep.count(s)) traced.push_back(s);

  const auto strides = site_strides(d, n);
  const Eigen::Index dim_keep = pow_dim(d, static_cast<int>(kept.size()));
  const Eigen::Index dim_tr = pow_dim(d, static_cast<int>(traced.size()));

  auto full_index = [&](const std::vector<int>& sites, Eigen::Index multi) {
    Eigen::Index idx = 0;
    for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
      idx += (multi % d) * strides[static_cast<size_t>(*it)];
      multi /= d;
    }
    return idx;
  };

  const ComplexMatrix& rho = state.rho();
  ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
  for (Eigen::Index c = 0; c < dim_tr; ++c) {
    const Eigen::Index base = full_index(traced, c);
    for (Eigen::Index a = 0; a < dim_keep; ++a) {
      const Eigen::Index ra = base + full_index(kept, a);
      for (Eigen::Index b = 0; b < dim_keep; ++b)
        out(a, b) += rho(ra, base + full_index(kept, b));
    }
  }
  return NQuditState(d, static_cast<int>(kept.size()), std::move(out), state.physical());
}

ComplexMatrix partial_transpose(const NQuditState& state, const std::set<int>& subset) {
  const int n = state.n_sites(), d = state.d();
  if (subset.empty() || static_cast<int>(subset.size()) >= n)
    throw InvalidSubset("partial_transpose: subset must be proper and nonempty");
  for (int s : subset)
    if (s < 0 || s >= n) throw SiteOutOfRange("partial_transpose: site out of range");

  const auto strides = site_strides(d, n);
  const Eigen::Index dim = state.dim();
  // split an index into the subset part and the rest
  auto split = [&](Eigen::Index idx, Eigen::Index& sub, Eigen::Index& rest) {
    sub = 0;
    rest = 0;
    for (int s = 0; s < n; ++s) {
      const Eigen::Index digit = (idx / strides[static_cast<size_t>(s)]) % d;
      if (subset.count(s))
        sub += digit * strides[static_cast<size_t>(s)];
      else
        rest += digit * strides[static_cast<size_t>(s)];
    }
  };
  const ComplexMatrix& rho = state.rho();
  ComplexMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    Eigen::Index rs, rr;
    split(r, rs, rr);
    for (Eigen::Index c = 0; c < dim; ++c) {
      Eigen::Index cs, cr;
      split(c, cs, cr);
      out(cs + rr, rs + cr) = rho(r, c);
    }
  }
  return out;
}

NQuditState avg_two_body(const NQuditState& state) {
  const int n = state.n_sites(), d = state.d();
  if (n < 2) throw TooFewSites("avg_two_body: N >= 2 required");
  const ComplexMatrix f = basis::flip_operator(d);
  ComplexMatrix sum = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const ComplexMatrix rij = partial_trace(state, {i, j}).rho();
      sum += rij + f * rij * f;  // both site orderings
    }
  sum /= n * (n - 1.0);
  return NQuditState(d, 2, std::move(sum), state.physical());
}

ComplexMatrix swap_operator(int d, int n_sites, int a, int b) {
  if (a < 0 || b < 0 || a >= n_sites || b >= n_sites)
    throw SiteOutOfRange("swap_operator: site out of range");
  const auto strides = site_strides(d, n_sites);
  const Eigen::Index dim = pow_dim(d, n_sites);
  ComplexMatrix v = ComplexMatrix::Zero(dim, dim);
  const Eigen::Index sa = strides[static_cast<size_t>(a)], sb = strides[static_cast<size_t>(b)];
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index da = (i / sa) % d, db = (i / sb) % d;
    const Eigen::Index j = i + (db - da) * sa + (da - db) * sb;
    v(j, i) = 1.0;
  }
  return v;
}

bool is_bosonic(const NQuditState& state, double tol) {
  for (int s = 0; s + 1 < state.n_sites(); ++s) {
    const ComplexMatrix v = swap_operator(state.d(), state.n_sites(), s, s + 1);
    if ((v * state.rho() - state.rho()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

bool is_permutation_invariant(const NQuditState& state, double tol) {
  for (int s = 0; s + 1 < state.n_sites(); ++s) {
    const ComplexMatrix v = swap_operator(state.d(), state.n_sites(), s, s + 1);
    if ((v * state.rho() * v.adjoint() - state.rho()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace many_body
}  // namespace sudsq
