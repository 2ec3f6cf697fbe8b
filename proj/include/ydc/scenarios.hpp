#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ydc/centers.hpp"

namespace ydc {

inline constexpr const char* kReportSchema = "ydcenter.report/1";
inline constexpr const char* kInputSchema = "ydcenter.input/1";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  std::string scenario;  // uqsl2 | sweedler | weyl | double | axioms | custom
  int n = 3;
  std::optional<std::pair<int, int>> q_spec;  // q = zeta_m^e
  std::string gamma = "1", xi = "0";
  std::string pairing;  // <x*, x>; empty means 1/(q - q^-1)
  int degree = 0;       // 0 picks the scenario default
  int vars = 1;
  std::set<std::string> checks;  // empty runs every suite
  std::string input;             // custom: JSON input file
};

struct ScenarioResult {
  nlohmann::ordered_json report;
  bool ok() const { return report.value("ok", false); }
  std::string text() const;
};

// Suites a scenario understands, in execution order.
std::vector<std::string> suites(const std::string& scenario);
// Fills defaults and rejects invalid settings with an explanation.
void validate(ScenarioConfig& cfg);
ScenarioResult run(ScenarioConfig cfg);

// Custom inputs: a QT Hopf algebra K, a Hopf algebra H in K-mod and an
// H-module algebra A, each given by a presentation and generator data.
ScenarioResult run_custom(const nlohmann::json& input, const ScenarioConfig& cfg);
nlohmann::ordered_json export_input(const ModuleAlgebra& a, const std::vector<std::string>& h_names = {});

// Parses q = zeta_m^e (or the default root for n) and returns it together
// with the name used for the field generator in reports.
std::pair<Scalar, std::string> scenario_q(const ScenarioConfig& cfg);

// sum_k gamma^-k [l+k-1 choose k]_{q^2} q^{-2(kl + k(k+1)/2)} (1-q^2)^k y^k (x) u^{k+l}
// inside R_B(A) for the nilpotent line H of order n acting on k[u].
// Empty when a term leaves the truncation of A.
std::optional<Vec> z_element(int n, const Scalar& q, const Scalar& gamma, int l, const BasedAlgebra& H, const BasedAlgebra& A);

}  // namespace ydc
