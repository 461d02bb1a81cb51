#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "sudsq/criteria.hpp"
#include "sudsq/polytope.hpp"

namespace sudsq {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace io {

using json = nlohmann::json;  // std::map-backed: keys come out sorted

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

/// State file: {"d":int,"n":int,"rho":[[[re,im],...],...]} row-major.
json state_to_json(const NQuditState& s);
NQuditState state_from_json(const json& j);
NQuditState load_state(const std::string& path);
void save_state(const NQuditState& s, const std::string& path);

json basis_to_json(const GeneratorBasis& b);

json report_to_json(const CriterionReport& r);

json bundle_to_json(const CollectiveBundle& b);

json point_to_json(const PolytopePoint& p);

/// polytope CLI payload: Lambda, kappa, vertex lists, and per-vertex
/// residuals of the normalization constraint Lambda = N x_{d^2} + sum x_k.
json polytope_to_json(const PolytopeSpec& spec);

}  // namespace io
}  // namespace sudsq
