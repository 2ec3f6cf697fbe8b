#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "ydc/kernels.hpp"
#include "ydc/scenarios.hpp"

using namespace ydc;

namespace {

std::optional<std::pair<int, int>> parse_q(const std::string& s) {
  static const std::regex re(R"(\s*(\d+)\s*:\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ConfigError("--q expects m:e, got '" + s + "'");
  return std::make_pair(std::stoi(m[1]), std::stoi(m[2]));
}

std::set<std::string> parse_checks(const std::string& s) {
  std::set<std::string> r;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) r.insert(item);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centers of algebras in braided categories of Yetter-Drinfeld modules"};
  app.require_subcommand(1);

  ScenarioConfig cfg;
  std::string q, checks, out, export_path;
  bool json = false;
  int jobs = 1;

  auto common = [&](CLI::App* s) {
    s->add_flag("--json", json, "emit the JSON report");
    s->add_option("--jobs", jobs, "worker threads for the parallel kernels")->check(CLI::PositiveNumber);
    s->add_option("--checks", checks, "comma-separated suites to run");
    s->add_option("-o,--output", out, "write the report to a file");
  };
  auto with_q = [&](CLI::App* s) {
    s->add_option("--n", cfg.n, "order of q^2");
    s->add_option("--q", q, "q = zeta_m^e, given as m:e");
  };

  auto* uq = app.add_subcommand("uqsl2", "center of R_B(k[u]) over the nilpotent line, with the u_q(sl2) action");
  with_q(uq);
  uq->add_option("--gamma", cfg.gamma, "action of x on u");
  uq->add_option("--degree", cfg.degree, "truncation degree D of k[u]");
  uq->add_option("--pairing", cfg.pairing, "value of <x*, x>");
  uq->add_option("--export-input", export_path, "write the input data as a custom input file");
  common(uq);

  auto* sw = app.add_subcommand("sweedler", "center of k[u] over Sweedler's Hopf algebra");
  sw->add_option("--xi", cfg.xi, "R-matrix parameter");
  sw->add_option("--gamma", cfg.gamma, "action of x on u");
  sw->add_option("--degree", cfg.degree, "truncation degree");
  common(sw);

  auto* wy = app.add_subcommand("weyl", "centralizer of k[d] in the truncated Weyl algebra");
  wy->add_option("--vars", cfg.vars, "number of variables");
  wy->add_option("--degree", cfg.degree, "truncation degree");
  common(wy);

  auto* db = app.add_subcommand("double", "braided Drinfeld double of the nilpotent line");
  with_q(db);
  db->add_option("--pairing", cfg.pairing, "value of <x*, x>");
  common(db);

  auto* ax = app.add_subcommand("axioms", "property suites over all constructions");
  with_q(ax);
  ax->add_option("--degree", cfg.degree, "truncation degree of the module algebras");
  common(ax);

  auto* cu = app.add_subcommand("custom", "center for user-supplied (K, R, H, A) data");
  cu->add_option("input", cfg.input, "JSON input file")->required()->check(CLI::ExistingFile);
  common(cu);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.scenario = app.get_subcommands().front()->get_name();
    if (!q.empty()) cfg.q_spec = parse_q(q);
    cfg.checks = parse_checks(checks);
    kernels::set_threads(jobs);

    ScenarioResult res;
    if (cfg.scenario == "custom") {
      validate(cfg);
      std::ifstream f(cfg.input);
      nlohmann::json in;
      try {
        in = nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError("input: " + std::string(e.what()));
      }
      res = run_custom(in, cfg);
    } else {
      res = run(cfg);
    }
    if (!export_path.empty()) {
      validate(cfg);
      auto [qv, var] = scenario_q(cfg);
      Scalar q2 = qv * qv;
      auto H = nilpotent_line_hopf(rmatrix_cyclic(cfg.n, qv), cfg.n, qv);
      auto A = module_algebra_polynomial(H, parse_scalar(cfg.gamma, qv), q2, cfg.degree);
      std::ofstream(export_path) << export_input(*A, {"y"}).dump(2) << "\n";
    }

    std::string text = json ? res.report.dump(2) + "\n" : res.text();
    if (out.empty())
      std::cout << text;
    else
      std::ofstream(out) << text;
    return res.ok() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
