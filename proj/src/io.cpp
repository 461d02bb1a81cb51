#include "sudsq/io.hpp"

#include <fstream>

namespace sudsq::io {

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected non-empty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j.at(static_cast<size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError("matrix: ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& e = row.at(static_cast<size_t>(k));
      if (!e.is_array() || e.size() != 2) throw ParseError("matrix: entries must be [re,im]");
      m(i, k) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

json state_to_json(const NQuditState& s) {
  return json{{"d", s.d()}, {"n", s.n_sites()}, {"rho", matrix_to_json(s.rho())}};
}

NQuditState state_from_json(const json& j) {
  if (!j.contains("d") || !j.contains("n") || !j.contains("rho"))
    throw ParseError("state: required keys d, n, rho");
  const int d = j.at("d").get<int>();
  const int n = j.at("n").get<int>();
  return NQuditState(d, n, matrix_from_json(j.at("rho")), true);
}

NQuditState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("state file is not valid JSON: ") + e.what());
  }
  return state_from_json(j);
}

void save_state(const NQuditState& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << state_to_json(s).dump(2) << '\n';
}

json basis_to_json(const GeneratorBasis& b) {
  json gens = json::array();
  for (const auto& g : b.generators) gens.push_back(matrix_to_json(g));
  return json{{"d", b.d},
              {"kind", b.kind == BasisKind::SuD ? "sud" : "ud"},
              {"generators", std::move(gens)}};
}

json report_to_json(const CriterionReport& r) {
  json details = json::object();
  for (const auto& [key, val] : r.details) details[key] = val;
  json ev = json::array();
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) ev.push_back(r.eigenvalues(i));
  return json{{"name", r.name},       {"value", r.value},         {"detected", r.detected},
              {"boundary", r.boundary}, {"eigenvalues", std::move(ev)},
              {"details", std::move(details)}};
}

namespace {

json real_matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_vector_to_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

json bundle_to_json(const CollectiveBundle& b) {
  return json{{"N", b.N},
              {"d", b.d},
              {"Q0", b.Q0},
              {"Gexp", real_vector_to_json(b.Gexp)},
              {"C", real_matrix_to_json(b.C)},
              {"gamma", real_matrix_to_json(b.gamma)},
              {"Q", real_matrix_to_json(b.Q)},
              {"U", real_matrix_to_json(b.U)}};
}

json point_to_json(const PolytopePoint& p) {
  return json{{"d", p.d}, {"N", p.N}, {"coords", real_vector_to_json(p.coords)}};
}

json polytope_to_json(const PolytopeSpec& spec) {
  json a = json::array(), bjs = json::array(), residuals = json::array();
  const int m = spec.d * spec.d - 1;
  auto residual = [&](const RealVector& v) {
    return std::abs(spec.N * v(m) + v.head(m).sum() - spec.Lambda);
  };
  for (const auto& v : spec.A) {
    a.push_back(real_vector_to_json(v));
    residuals.push_back(residual(v));
  }
  for (const auto& v : spec.B) {
    bjs.push_back(real_vector_to_json(v));
    residuals.push_back(residual(v));
  }
  return json{{"Lambda", spec.Lambda},
              {"kappa", spec.kappa},
              {"N", spec.N},
              {"d", spec.d},
              {"Gexp", real_vector_to_json(spec.Gexp)},
              {"vertices", json{{"A", std::move(a)}, {"B", std::move(bjs)}}},
              {"constraint_residuals", std::move(residuals)}};
}

}  // namespace sudsq::io
