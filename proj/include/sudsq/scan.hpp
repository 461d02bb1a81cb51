#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sudsq/criteria.hpp"

namespace sudsq {

struct ModelBuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidScanConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hamiltonian selection, mirroring the CLI model spec.
struct ModelSpec {
  std::string model;  // sud-singlet | random-collective | spin | spin-ferro
  int N = 0;
  int d = 3;
  double gamma = 0;       // spin / spin-ferro anisotropy
  std::vector<double> c;  // random-collective coefficients; drawn from seed if empty
  std::uint64_t seed = 0;
};

enum class Criterion { Sud, Spin, Ppt };

struct ScanConfig {
  ModelSpec model;
  Criterion criterion = Criterion::Sud;
  double tmin = 1e-3;
  double tmax = 20.0;
  int grid = 200;     // geometric grid points
  double tol = 1e-3;  // bisection width
};

struct ScanResult {
  double limit_temperature = 0;
  bool detected_at_tmin = false;
  std::vector<double> grid_T;
  std::vector<char> detected;
  std::vector<std::string> warnings;  // non-monotone detection patterns etc.
};

namespace scan {

ComplexMatrix build_hamiltonian(const ModelSpec& spec);

Criterion parse_criterion(const std::string& tag);

/// Detection boundary in T for a thermal family: H eigendecomposed once,
/// detection evaluated on the geometric grid, then bisected between the
/// highest detected point and its undetected successor.
ScanResult limit_temperature(const ScanConfig& config);

/// Single thermal-state evaluation at temperature T.
CriterionReport evaluate_thermal(const ModelSpec& spec, Criterion criterion, double T);

std::string table_csv(int id);

std::string fig3_csv();

struct SelfTestResult {
  bool pass = true;
  std::vector<std::pair<std::string, bool>> checks;
};

SelfTestResult selftest(std::uint64_t seed);

}  // namespace scan
}  // namespace sudsq
