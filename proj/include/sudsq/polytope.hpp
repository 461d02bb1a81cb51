#pragma once

#include <vector>

#include "sudsq/correlations.hpp"

namespace sudsq {

struct UnsupportedDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point in the separability polytope: coords = (x_1, ..., x_{d^2-1}, x_{d^2})
/// with x_k = U_kk / N^2 and x_{d^2} = (2/N)(1 - <F>_av2).
struct PolytopePoint {
  int d = 0;
  int N = 0;
  RealVector coords;
};

/// Vertex data of the polytope for a fixed mean Bloch vector <G>/N.
struct PolytopeSpec {
  int d = 0;
  int N = 0;
  RealVector Gexp;
  double Lambda = 0;  // Lambda_max - |<G>|^2/N^2
  double kappa = 0;   // Lambda / Lambda_max
  std::vector<RealVector> A;  // A_k, k = 1..d^2-1
  std::vector<RealVector> B;  // B_k
};

struct FacetReport {
  std::vector<int> worst_subset;
  double min_margin = 0;
};

namespace polytope {

/// Polytope coordinates of a state through its collective bundle.
PolytopePoint coordinates(const CollectiveBundle& bundle);

/// Same point from the averaged two-body marginal (x_k are the diagonal of
/// gamma_av2 in the same generator frame).
PolytopePoint coordinates(const TwoBodyBundle& bundle, int N);

PolytopeSpec vertices(const RealVector& Gexp, int N, int d);

/// Facet margin N^2 (x_{d^2} + sum_{k in I'} x_k) for the complement-indexed
/// facet; negative margin = outside the polytope.
double facet_margin(const PolytopePoint& point, const std::vector<int>& subset_complement);

/// min over all 2^(d^2-1) facets; enumeration guarded to d <= 3.
FacetReport min_facet_margin(const PolytopePoint& point);

/// N^2 (x_{d^2} + sum_{x_k < 0} x_k): the tightest facet margin, equal to
/// the squeezing parameter of the underlying state.
double xi_from_point(const PolytopePoint& point);

/// Rotate the generator basis into the eigenframe of U (eigenvalues
/// descending; each eigenvector's first nonzero component made positive).
GeneratorBasis eigenframe_basis(const GeneratorBasis& b, const RealMatrix& U);

/// || polytope point of vertex_state_A(k) - A_k || and likewise for B;
/// returns the max over both families.
double vertex_correspondence_residual(const GeneratorBasis& b, const RealVector& Gexp, int N);

}  // namespace polytope
}  // namespace sudsq
