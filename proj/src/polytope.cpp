#include "sudsq/polytope.hpp"

#include <cmath>
#include <limits>

#include "sudsq/models.hpp"

namespace sudsq::polytope {

PolytopePoint coordinates(const CollectiveBundle& bundle) {
  const int m = static_cast<int>(bundle.U.rows());
  const double N = bundle.N;
  PolytopePoint p;
  p.d = bundle.d;
  p.N = bundle.N;
  p.coords.resize(m + 1);
  for (int k = 0; k < m; ++k) p.coords(k) = bundle.U(k, k) / (N * N);
  p.coords(m) =
      ((N + bundle.d) * lambda_max(bundle.d) - bundle.C.trace() / N) / (N * (N - 1.0));
  return p;
}

PolytopePoint coordinates(const TwoBodyBundle& bundle, int N) {
  const int m = static_cast<int>(bundle.gammaAv2.rows());
  PolytopePoint p;
  p.d = bundle.d;
  p.N = N;
  p.coords.resize(m + 1);
  for (int k = 0; k < m; ++k) p.coords(k) = bundle.gammaAv2(k, k);
  p.coords(m) = (2.0 / N) * (1.0 - bundle.Fexp);
  return p;
}

PolytopeSpec vertices(const RealVector& Gexp, int N, int d) {
  const int m = d * d - 1;
  if (Gexp.size() != m) throw LengthMismatch("polytope::vertices: Gexp length != d^2-1");
  const double n2 = static_cast<double>(N) * N;
  const double lmax = lambda_max(d);
  double lambda = lmax - Gexp.squaredNorm() / n2;
  if (lambda < -1e-12) throw InfeasibleGexp("polytope::vertices: |Gexp|^2/N^2 > Lambda_max");
  lambda = std::max(lambda, 0.0);

  PolytopeSpec spec;
  spec.d = d;
  spec.N = N;
  spec.Gexp = Gexp;
  spec.Lambda = lambda;
  spec.kappa = lambda / lmax;
  spec.A.reserve(m);
  spec.B.reserve(m);
  RealVector base(m + 1);
  for (int r = 0; r < m; ++r) base(r) = spec.kappa * Gexp(r) * Gexp(r) / n2;
  base(m) = 0.0;
  for (int k = 0; k < m; ++k) {
    const double ck2 = lambda + Gexp(k) * Gexp(k) / n2;
    RealVector a = base;
    a(k) = spec.kappa * ck2;
    RealVector b = -a / (N - 1.0);
    b(m) = lambda / (N - 1.0);
    spec.A.push_back(std::move(a));
    spec.B.push_back(std::move(b));
  }
  return spec;
}

double facet_margin(const PolytopePoint& point, const std::vector<int>& subset_complement) {
  const int m = static_cast<int>(point.coords.size()) - 1;
  double s = point.coords(m);
  for (int k : subset_complement) {
    if (k < 0 || k >= m) throw IndexOutOfRange("facet_margin: generator index");
    s += point.coords(k);
  }
  return static_cast<double>(point.N) * point.N * s;
}

FacetReport min_facet_margin(const PolytopePoint& point) {
  if (point.d > 3) throw UnsupportedDimension("min_facet_margin: facet enumeration only for d <= 3");
  const int m = static_cast<int>(point.coords.size()) - 1;
  FacetReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> subset;
    for (int k = 0; k < m; ++k)
      if (mask & (1u << k)) subset.push_back(k);
    const double margin = facet_margin(point, subset);
    if (margin < rep.min_margin) {
      rep.min_margin = margin;
      rep.worst_subset = subset;
    }
  }
  return rep;
}

double xi_from_point(const PolytopePoint& point) {
  const int m = static_cast<int>(point.coords.size()) - 1;
  double s = point.coords(m);
  for (int k = 0; k < m; ++k)
    if (point.coords(k) < 0) s += point.coords(k);
  return static_cast<double>(point.N) * point.N * s;
}

GeneratorBasis eigenframe_basis(const GeneratorBasis& b, const RealMatrix& U) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es((U + U.transpose()) / 2.0);
  const int m = static_cast<int>(U.rows());
  // SelfAdjointEigenSolver sorts ascending; reverse to descending
  RealMatrix O(m, m);
  for (int k = 0; k < m; ++k) {
    RealVector v = es.eigenvectors().col(m - 1 - k);
    for (int i = 0; i < m; ++i) {
      if (std::abs(v(i)) > 1e-12) {
        if (v(i) < 0) v = -v;
        break;
      }
    }
    O.row(k) = v.transpose();  // bundle matrices transform as O X O^T
  }
  return basis::apply_orthogonal(b, O);
}

double vertex_correspondence_residual(const GeneratorBasis& b, const RealVector& Gexp, int N) {
  const PolytopeSpec spec = vertices(Gexp, N, b.d);
  double worst = 0;
  for (int k = 0; k < b.size(); ++k) {
    const NQuditState sa = models::vertex_state_A(k, b, Gexp, N);
    const NQuditState sb = models::vertex_state_B(k, b, Gexp, N);
    const PolytopePoint pa = coordinates(correlations::collective_bundle(sa, b));
    const PolytopePoint pb = coordinates(correlations::collective_bundle(sb, b));
    worst = std::max(worst, (pa.coords - spec.A[static_cast<size_t>(k)]).norm());
    worst = std::max(worst, (pb.coords - spec.B[static_cast<size_t>(k)]).norm());
  }
  return worst;
}

}  // namespace sudsq::polytope
