#include "sudsq/scan.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "sudsq/models.hpp"
#include "sudsq/polytope.hpp"

namespace sudsq::scan {

namespace {

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

/// Shared thermal-scan machinery: H is diagonalized once; for the moment-based
/// criteria every needed operator A is reduced to the vector diag(U' A U), so
/// a temperature point costs a handful of dot products. Only PPT materializes
/// the density matrix.
class ThermalEvaluator {
 public:
  ThermalEvaluator(const ComplexMatrix& H, int d, int N, Criterion crit)
      : d_(d), n_(N), crit_(crit), eig_(linalg::eig_hermitian(H)) {
    if (crit_ == Criterion::Sud) {
      const GeneratorBasis b = basis::gellmann(d_);
      std::vector<ComplexMatrix> singles(b.generators.begin(), b.generators.end());
      precompute(singles);
      q0_ = 2.0 / d_;
    } else if (crit_ == Criterion::Spin) {
      const SpinOperators s = basis::spin_matrices(d_);
      precompute({s.jx, s.jy, s.jz});
      const double j = s.j();
      q0_ = j * (j + 1.0) / 3.0;
    }
  }

  RealVector weights(double T) const {
    const double e0 = eig_.values(0);
    RealVector w(eig_.values.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = std::exp(-(eig_.values(i) - e0) / T);
    return w / w.sum();
  }

  CriterionReport report(double T) const {
    if (crit_ == Criterion::Ppt) {
      const RealVector w = weights(T);
      ComplexMatrix rho = eig_.vectors * w.asDiagonal() * eig_.vectors.adjoint();
      return criteria::ppt_all_bipartitions(NQuditState(d_, n_, std::move(rho), true),
                                            criteria::kDetectTol, true);
    }
    if (crit_ == Criterion::Sud) return criteria::xi_sud_collective(bundle<CollectiveBundle>(T));
    SpinBundle b = bundle<SpinBundle>(T);
    b.Jexp = gexp_last_;
    return criteria::spin_squeezing_set(b);
  }

  bool detected(double T) const { return report(T).detected; }

 private:
  void precompute(const std::vector<ComplexMatrix>& singles) {
    const int m = static_cast<int>(singles.size());
    const ComplexMatrix& u = eig_.vectors;
    std::vector<ComplexMatrix> gu(static_cast<size_t>(m));
    gdiag_.resize(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
      const ComplexMatrix gk = many_body::collective_operator(singles[static_cast<size_t>(k)], n_);
      gu[static_cast<size_t>(k)] = gk * u;
      gdiag_[static_cast<size_t>(k)] =
          u.conjugate().cwiseProduct(gu[static_cast<size_t>(k)]).colwise().sum().real();
    }
    cdiag_.assign(static_cast<size_t>(m), std::vector<RealVector>(static_cast<size_t>(m)));
    qdiag_ = cdiag_;
    for (int k = 0; k < m; ++k) {
      for (int l = k; l < m; ++l) {
        cdiag_[static_cast<size_t>(k)][static_cast<size_t>(l)] = gu[static_cast<size_t>(k)]
                                                                     .conjugate()
                                                                     .cwiseProduct(gu[static_cast<size_t>(l)])
                                                                     .colwise()
                                                                     .sum()
                                                                     .real();
        const ComplexMatrix anti =
            0.5 * (singles[static_cast<size_t>(k)] * singles[static_cast<size_t>(l)] +
                   singles[static_cast<size_t>(l)] * singles[static_cast<size_t>(k)]);
        const ComplexMatrix lu = many_body::local_sum(anti, n_) * u;
        qdiag_[static_cast<size_t>(k)][static_cast<size_t>(l)] =
            u.conjugate().cwiseProduct(lu).colwise().sum().real();
      }
    }
  }

  template <typename Bundle>
  Bundle bundle(double T) const {
    const RealVector w = weights(T);
    const int m = static_cast<int>(gdiag_.size());
    Bundle b;
    b.N = n_;
    b.d = d_;
    b.Q0 = q0_;
    RealVector gexp(m);
    for (int k = 0; k < m; ++k) gexp(k) = gdiag_[static_cast<size_t>(k)].dot(w);
    b.C.resize(m, m);
    b.Q.resize(m, m);
    for (int k = 0; k < m; ++k) {
      for (int l = k; l < m; ++l) {
        b.C(k, l) = b.C(l, k) = cdiag_[static_cast<size_t>(k)][static_cast<size_t>(l)].dot(w);
        const double q = qdiag_[static_cast<size_t>(k)][static_cast<size_t>(l)].dot(w) / n_;
        b.Q(k, l) = b.Q(l, k) = q - (k == l ? q0_ : 0.0);
      }
    }
    b.gamma = b.C - gexp * gexp.transpose();
    b.U = b.gamma + b.C / (n_ - 1.0) -
          (static_cast<double>(n_) * n_ / (n_ - 1.0)) *
              (b.Q + q0_ * RealMatrix::Identity(m, m));
    fill_exp(b, gexp);
    gexp_last_ = gexp;
    return b;
  }

  static void fill_exp(CollectiveBundle& b, const RealVector& gexp) { b.Gexp = gexp; }
  static void fill_exp(SpinBundle& b, const RealVector& gexp) { b.Jexp = gexp; }

  int d_, n_;
  Criterion crit_;
  HermitianEigen eig_;
  double q0_ = 0;
  std::vector<RealVector> gdiag_;
  std::vector<std::vector<RealVector>> cdiag_, qdiag_;
  mutable RealVector gexp_last_;
};

}  // namespace

ComplexMatrix build_hamiltonian(const ModelSpec& spec) {
  if (spec.N < 2 || spec.d < 2) throw ModelBuildError("build_hamiltonian: need N >= 2, d >= 2");
  if (spec.model == "sud-singlet")
    return models::hamiltonian_sud_singlet(spec.N, spec.d, basis::gellmann(spec.d));
  if (spec.model == "random-collective") {
    const int m = spec.d * spec.d - 1;
    RealVector c(m);
    if (!spec.c.empty()) {
      if (static_cast<int>(spec.c.size()) != m)
        throw ModelBuildError("build_hamiltonian: coefficient count != d^2-1");
      for (int k = 0; k < m; ++k) c(k) = spec.c[static_cast<size_t>(k)];
    } else {
      std::mt19937_64 rng(spec.seed);
      std::uniform_real_distribution<double> uni(-1.0, 1.0);
      for (int k = 0; k < m; ++k) c(k) = uni(rng);
    }
    return models::hamiltonian_random_collective(spec.N, spec.d, basis::gellmann(spec.d), c);
  }
  if (spec.model == "spin")
    return models::hamiltonian_spin(spec.N, spec.gamma, +1, basis::spin_matrices(spec.d));
  if (spec.model == "spin-ferro")
    return models::hamiltonian_spin(spec.N, spec.gamma, -1, basis::spin_matrices(spec.d));
  throw ModelBuildError("build_hamiltonian: unknown model '" + spec.model + "'");
}

Criterion parse_criterion(const std::string& tag) {
  if (tag == "sud") return Criterion::Sud;
  if (tag == "spin") return Criterion::Spin;
  if (tag == "ppt") return Criterion::Ppt;
  throw InvalidScanConfig("criterion must be sud | spin | ppt");
}

ScanResult limit_temperature(const ScanConfig& config) {
  if (!(config.tmin > 0) || !(config.tmin < config.tmax) || !(config.tol > 0) || config.grid < 2)
    throw InvalidScanConfig("limit_temperature: need 0 < tmin < tmax, tol > 0, grid >= 2");
  const ComplexMatrix h = build_hamiltonian(config.model);
  const ThermalEvaluator eval(h, config.model.d, config.model.N, config.criterion);

  ScanResult res;
  const double ratio = config.tmax / config.tmin;
  res.grid_T.resize(static_cast<size_t>(config.grid));
  res.detected.resize(static_cast<size_t>(config.grid));
  for (int i = 0; i < config.grid; ++i) {
    const double t =
        config.tmin * std::pow(ratio, static_cast<double>(i) / (config.grid - 1));
    res.grid_T[static_cast<size_t>(i)] = t;
    res.detected[static_cast<size_t>(i)] = eval.detected(t) ? 1 : 0;
  }
  res.detected_at_tmin = res.detected[0] != 0;

  int last = -1;
  for (int i = 0; i < config.grid; ++i)
    if (res.detected[static_cast<size_t>(i)]) last = i;
  // non-monotone pattern: an undetected point below the highest detected one
  for (int i = 0; i < last; ++i) {
    if (!res.detected[static_cast<size_t>(i)]) {
      res.warnings.push_back("non-monotone detection on the grid near T=" +
                             fmt6(res.grid_T[static_cast<size_t>(i)]));
      break;
    }
  }
  if (!res.detected_at_tmin) {
    res.limit_temperature = 0;
    return res;
  }
  if (last == config.grid - 1) {
    res.warnings.push_back("still detected at tmax; limit temperature >= tmax");
    res.limit_temperature = config.tmax;
    return res;
  }
  double lo = res.grid_T[static_cast<size_t>(last)], hi = res.grid_T[static_cast<size_t>(last) + 1];
  while (hi - lo > config.tol) {
    const double mid = 0.5 * (lo + hi);
    (eval.detected(mid) ? lo : hi) = mid;
  }
  res.limit_temperature = 0.5 * (lo + hi);
  return res;
}

CriterionReport evaluate_thermal(const ModelSpec& spec, Criterion criterion, double T) {
  const ComplexMatrix h = build_hamiltonian(spec);
  return ThermalEvaluator(h, spec.d, spec.N, criterion).report(T);
}

std::string table_csv(int id) {
  std::ostringstream out;
  if (id == 1) {
    out << "N,T_sud,T_spin,T_ppt\n";
    for (int n = 2; n <= 6; ++n) {
      ScanConfig cfg;
      cfg.model = {"sud-singlet", n, 3, 0.0, {}, 0};
      out << n;
      for (Criterion c : {Criterion::Sud, Criterion::Spin, Criterion::Ppt}) {
        cfg.criterion = c;
        out << ',' << fmt6(limit_temperature(cfg).limit_temperature);
      }
      out << '\n';
    }
  } else if (id == 2 || id == 3) {
    out << "gamma,T_spin,T_sud\n";
    const std::vector<double> gammas =
        id == 2 ? std::vector<double>{0.0, 0.5, 1.0} : std::vector<double>{0.0, 0.25, 0.5, 0.75};
    for (double g : gammas) {
      ScanConfig cfg;
      cfg.model = {id == 2 ? "spin" : "spin-ferro", 6, 3, g, {}, 0};
      out << fmt6(g);
      for (Criterion c : {Criterion::Spin, Criterion::Sud}) {
        cfg.criterion = c;
        out << ',' << fmt6(limit_temperature(cfg).limit_temperature);
      }
      out << '\n';
    }
  } else {
    throw InvalidScanConfig("table id must be 1, 2 or 3");
  }
  return out.str();
}

std::string fig3_csv() {
  const int n = 4, d = 3;
  const GeneratorBasis b = basis::anticomm_d3();
  std::ostringstream out;
  out << "model,k,u_kk\n";
  const struct {
    const char* model;
    double gamma, T;
  } rows[] = {{"sud-singlet", 0.0, 1.0}, {"spin", 1.0, 0.5}, {"spin-ferro", 0.0, 0.5}};
  for (const auto& r : rows) {
    const ModelSpec spec{r.model, n, d, r.gamma, {}, 0};
    const NQuditState rho = models::thermal_state(build_hamiltonian(spec), d, n, r.T);
    const CollectiveBundle bun = correlations::collective_bundle(rho, b);
    for (int k = 0; k < b.size(); ++k)
      out << r.model << ',' << (k + 1) << ',' << fmt6(bun.U(k, k)) << '\n';
  }
  return out.str();
}

SelfTestResult selftest(std::uint64_t seed) {
  SelfTestResult res;
  auto check = [&res](const std::string& name, auto&& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    res.checks.emplace_back(name, ok);
    if (!ok) res.pass = false;
  };
  std::mt19937_64 rng(seed);

  check("generator-basis-orthonormality", [] {
    for (int d = 2; d <= 5; ++d) basis::validate(basis::gellmann(d));
    basis::validate(basis::anticomm_d3());
    return true;
  });
  check("spin-algebra", [] {
    for (int d = 2; d <= 4; ++d) basis::validate(basis::spin_matrices(d));
    return true;
  });
  check("flip-operator-involution", [] {
    const ComplexMatrix f = basis::flip_operator(3);
    return (f * f - ComplexMatrix::Identity(9, 9)).norm() < 1e-12;
  });
  check("correlation-identities", [&rng] {
    const GeneratorBasis b = basis::gellmann(3);
    for (int rep = 0; rep < 3; ++rep) {
      const NQuditState s = models::random_state(3, 3, rng);
      const IdentityReport rep3 = correlations::check_identities(s, b);
      if (rep3.u_vs_gamma_av2 > 1e-8 || rep3.trace_c_vs_flip > 1e-8 ||
          rep3.cross_correlation > 1e-8)
        return false;
    }
    return true;
  });
  check("singlet-squeezing-value", [] {
    const GeneratorBasis b = basis::gellmann(3);
    const NQuditState s = models::sud_singlet(3, 3);
    const CriterionReport r = criteria::xi_sud_collective(correlations::collective_bundle(s, b));
    return std::abs(r.value - (-12.0)) < 1e-8;  // -2N(d-1), forced by Tr(gamma)=0 and U <= 0
  });
  check("squeezing-form-agreement", [&rng] {
    const GeneratorBasis b = basis::gellmann(3);
    for (int rep = 0; rep < 3; ++rep) {
      const NQuditState s = models::random_state(3, 3, rng);
      const CriterionReport r = criteria::xi_sud_collective(correlations::collective_bundle(s, b));
      for (const auto& [key, val] : r.details)
        if (key == "form_residual" && std::abs(val) > 1e-8) return false;
    }
    return true;
  });
  check("separable-soundness-sample", [&rng] {
    const GeneratorBasis b = basis::gellmann(3);
    const SpinOperators sp = basis::spin_matrices(3);
    for (int rep = 0; rep < 10; ++rep) {
      const NQuditState s = models::random_separable(3, 3, rng);
      if (criteria::xi_sud_collective(correlations::collective_bundle(s, b)).value < -1e-9)
        return false;
      if (criteria::spin_squeezing_set(s, sp).value < -1e-9) return false;
    }
    return true;
  });
  check("polytope-constraint", [&rng] {
    const GeneratorBasis b = basis::gellmann(3);
    for (int rep = 0; rep < 3; ++rep) {
      const NQuditState s = models::random_state(3, 4, rng);
      const CollectiveBundle bun = correlations::collective_bundle(s, b);
      const PolytopePoint p = polytope::coordinates(bun);
      const double lambda =
          lambda_max(3) - bun.Gexp.squaredNorm() / (static_cast<double>(bun.N) * bun.N);
      const int m = static_cast<int>(p.coords.size()) - 1;
      const double lhs = bun.N * p.coords(m) + p.coords.head(m).sum();
      if (std::abs(lhs - lambda) > 1e-9) return false;
    }
    return true;
  });
  check("vertex-correspondence", [] {
    const GeneratorBasis b = basis::gellmann(3);
    return polytope::vertex_correspondence_residual(b, RealVector::Zero(8), 4) < 1e-9;
  });
  check("ps3-battery", [] {
    const NQuditState s = models::rho_ps3();
    if (linalg::min_eigenvalue(s.rho()) < -1e-10) return false;
    const CriterionReport xi =
        criteria::xi_sud_collective(correlations::collective_bundle(s, basis::gellmann(3)));
    if (std::abs(xi.value) > 1e-9) return false;
    const CriterionReport ppt = criteria::ppt_all_bipartitions(s);
    const CriterionReport cc = criteria::ccnr(s);
    return ppt.detected && std::abs(cc.value) < 1e-8;
  });
  return res;
}

}  // namespace sudsq::scan
