#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "sudsq/io.hpp"
#include "sudsq/models.hpp"
#include "sudsq/scan.hpp"

namespace {

using namespace sudsq;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file: " + out_path);
  out << text;
}

int run_evaluate(const std::string& state_path, const std::string& out_path) {
  const NQuditState state = io::load_state(state_path);
  state.check_positivity();
  const int d = state.d(), n = state.n_sites();
  const GeneratorBasis b = basis::gellmann(d);
  const SpinOperators sp = basis::spin_matrices(d);
  const NQuditState rho2 = n == 2 ? state : many_body::avg_two_body(state);

  const CollectiveBundle bundle = correlations::collective_bundle(state, b);
  io::json rep;
  rep["xi_sud"] = io::report_to_json(criteria::xi_sud_collective(bundle));
  rep["xi_sud_two_body"] = io::report_to_json(criteria::xi_sud_two_body(rho2, n, b));
  rep["xi_spin"] = io::report_to_json(criteria::xi_spin(rho2, n, sp));
  rep["spin_squeezing"] = io::report_to_json(criteria::spin_squeezing_set(state, sp));
  rep["ppt"] = io::report_to_json(criteria::ppt_all_bipartitions(state));
  rep["ccnr"] = io::report_to_json(criteria::ccnr(rho2));
  rep["polytope_point"] = io::point_to_json(polytope::coordinates(bundle));
  emit(out_path, rep.dump(2) + "\n");
  return 0;
}

int run_scan(const ScanConfig& cfg, const std::string& out_path) {
  const ScanResult res = scan::limit_temperature(cfg);
  io::json rep;
  rep["model"] = cfg.model.model;
  rep["N"] = cfg.model.N;
  rep["d"] = cfg.model.d;
  rep["gamma"] = cfg.model.gamma;
  rep["criterion"] =
      cfg.criterion == Criterion::Sud ? "sud" : (cfg.criterion == Criterion::Spin ? "spin" : "ppt");
  rep["limit_temperature"] = res.limit_temperature;
  rep["detected_at_tmin"] = res.detected_at_tmin;
  rep["warnings"] = res.warnings;
  emit(out_path, rep.dump(2) + "\n");
  return 0;
}

int run_polytope(int n, int d, const std::string& state_path, const std::string& out_path) {
  RealVector gexp = RealVector::Zero(d * d - 1);
  io::json rep;
  if (!state_path.empty()) {
    const NQuditState state = io::load_state(state_path);
    n = state.n_sites();
    d = state.d();
    const CollectiveBundle b = correlations::collective_bundle(state, basis::gellmann(d));
    gexp = b.Gexp;
    rep["point"] = io::point_to_json(polytope::coordinates(b));
  }
  rep.update(io::polytope_to_json(polytope::vertices(gexp, n, d)));
  emit(out_path, rep.dump(2) + "\n");
  return 0;
}

int run_selftest(std::uint64_t seed) {
  const scan::SelfTestResult res = scan::selftest(seed);
  for (const auto& [name, ok] : res.checks)
    std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
  std::cout << (res.pass ? "selftest: pass" : "selftest: FAIL") << '\n';
  return res.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"su(d)-squeezing entanglement criteria for N-qudit systems"};
  app.require_subcommand(1);

  std::string state_path, out_path;
  ScanConfig cfg;
  cfg.model.model = "sud-singlet";
  cfg.model.N = 4;
  std::string criterion = "sud";
  std::uint64_t seed = 1;
  int table_id = 1;
  int poly_n = 4, poly_d = 3;

  auto* ev = app.add_subcommand("evaluate", "criterion battery for a state file");
  ev->add_option("--state", state_path, "state JSON file")->required();
  ev->add_option("--out", out_path, "output path (default stdout)");

  auto* sc = app.add_subcommand("scan", "limit temperature of a thermal family");
  sc->add_option("--model", cfg.model.model,
                 "sud-singlet | random-collective | spin | spin-ferro");
  sc->add_option("--N", cfg.model.N, "number of sites");
  sc->add_option("--d", cfg.model.d, "local dimension");
  sc->add_option("--gamma", cfg.model.gamma, "spin model anisotropy");
  sc->add_option("--criterion", criterion, "sud | spin | ppt");
  sc->add_option("--tmin", cfg.tmin, "grid lower end");
  sc->add_option("--tmax", cfg.tmax, "grid upper end");
  sc->add_option("--grid", cfg.grid, "geometric grid points");
  sc->add_option("--tol", cfg.tol, "bisection width");
  sc->add_option("--seed", cfg.model.seed, "random-collective coefficient seed");
  sc->add_option("--out", out_path, "output path (default stdout)");

  auto* tb = app.add_subcommand("table", "limit-temperature table as CSV");
  tb->add_option("--id", table_id, "table id: 1, 2 or 3")->required();
  tb->add_option("--out", out_path, "output path (default stdout)");

  auto* fg = app.add_subcommand("fig3", "thermal-state U_kk diagonals as CSV");
  fg->add_option("--out", out_path, "output path (default stdout)");

  auto* po = app.add_subcommand("polytope", "vertex/facet report");
  po->add_option("--N", poly_n, "number of sites");
  po->add_option("--d", poly_d, "local dimension");
  po->add_option("--state", state_path, "optional state file fixing <G> and the point");
  po->add_option("--out", out_path, "output path (default stdout)");

  auto* st = app.add_subcommand("selftest", "run the module invariant suite");
  st->add_option("--seed", seed, "rng seed for sampled checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ev->parsed()) return run_evaluate(state_path, out_path);
    if (sc->parsed()) {
      cfg.criterion = scan::parse_criterion(criterion);
      return run_scan(cfg, out_path);
    }
    if (tb->parsed()) {
      emit(out_path, scan::table_csv(table_id));
      return 0;
    }
    if (fg->parsed()) {
      emit(out_path, scan::fig3_csv());
      return 0;
    }
    if (po->parsed()) return run_polytope(poly_n, poly_d, state_path, out_path);
    if (st->parsed()) return run_selftest(seed);
  } catch (const InvalidScanConfig& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
