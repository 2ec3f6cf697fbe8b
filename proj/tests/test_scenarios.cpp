#include <doctest.h>

#include "ydc/scenarios.hpp"

using namespace ydc;

namespace {

ScenarioConfig config(std::string scenario) {
  ScenarioConfig c;
  c.scenario = std::move(scenario);
  return c;
}

std::string suites_of(const ScenarioResult& r) {
  std::string s;
  for (const auto& c : r.report["checks"]) s += c["suite"].get<std::string>() + ";";
  return s;
}

}  // namespace

TEST_CASE("invalid configurations are rejected") {
  auto c = config("uqsl2");
  c.n = 2;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.n = 3;
  c.degree = 4;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.degree = 0;
  c.checks = {"nonsense"};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.checks.clear();
  c.q_spec = std::make_pair(5, 1);  // q^2 has order 5, not 3
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.q_spec.reset();
  c.gamma = "1 +";
  CHECK_THROWS_AS(run(c), ConfigError);
  auto unknown = config("nope");
  CHECK_THROWS_AS(validate(unknown), ConfigError);
  auto w = config("weyl");
  w.vars = 0;
  CHECK_THROWS_AS(validate(w), ConfigError);
  c = config("uqsl2");
  validate(c);
  CHECK(c.degree == 8);
}

TEST_CASE("uqsl2 report") {
  auto c = config("uqsl2");
  c.checks = {"center", "oracle", "structure", "compare"};
  auto r = run(c);
  INFO(r.text());
  CHECK(r.ok());
  auto j = r.report;
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["values"]["center"] == "k[z]");
  CHECK(j["centers"]["Z_B(A)"]["generators"].size() == 1);
  CHECK(j["centers"]["Z_B(A)"]["structure"][0]["H"]["x"] == "1");
  CHECK(j["conclusions"][0] == "centers distinguishable ⇒ not Morita equivalent");
  CHECK(suites_of(r) == "center;center;oracle;structure;compare;");
  // identical configurations give byte-identical reports
  CHECK(run(c).report.dump() == j.dump());
}

TEST_CASE("gamma = 0 and a non-default q") {
  auto c = config("uqsl2");
  c.gamma = "0";
  c.q_spec = std::make_pair(3, 2);
  c.checks = {"center", "oracle"};
  auto r = run(c);
  INFO(r.text());
  CHECK(r.ok());
  CHECK(r.report["field"]["generator"] == "z");
  CHECK(r.report["values"]["center"] == "H ⊗ k[u^3]");
  CHECK(r.report["centers"]["Z_B(A)"]["dim"] == 9);
}

TEST_CASE("report basis re-verifies after parsing") {
  auto c = config("uqsl2");
  c.gamma = "2";
  c.checks = {"center"};
  auto r = run(c);
  nlohmann::json j = nlohmann::json::parse(r.report.dump());

  auto [q, var] = scenario_q(c);
  auto qt = rmatrix_cyclic(3, q);
  auto H = nilpotent_line_hopf(qt, 3, q);
  auto A = module_algebra_polynomial(H, Scalar(2), q * q, 8);
  auto rb = rb_algebra(*A, {"y"});
  const auto& R = rb.alg;
  std::vector<Vec> basis;
  for (const auto& b : j["centers"]["Z_B(A)"]["basis"]) {
    Vec v;
    for (const auto& t : b["terms"]) {
      auto i = R.space()->find(t[0].get<std::string>());
      REQUIRE(i.has_value());
      v.add(*i, parse_scalar(t[1].get<std::string>(), Scalar::zeta(*q.field(), 1), var));
    }
    basis.push_back(v);
  }
  CHECK(basis == b_center(*A, {"y"}).basis);
  auto psi = yd_braiding(rb.mod, rb.mod);
  std::size_t d = R.dim();
  for (const auto& v : basis)
    for (const auto& s : R.generators()) {
      Product lhs = R.mul(v, s);
      Product rhs = R.mul_at(psi.apply(tensor_vec(v, s, d)), 1, 1);
      if (lhs.overflow || rhs.overflow) continue;
      CHECK(lhs.value == rhs.value);
    }
}

TEST_CASE("custom inputs reproduce the built-in result") {
  auto c = config("uqsl2");
  c.gamma = "1";
  c.degree = 7;
  c.checks = {"center"};
  auto builtin = run(c);
  auto [q, var] = scenario_q(c);
  auto H = nilpotent_line_hopf(rmatrix_cyclic(3, q), 3, q);
  auto A = module_algebra_polynomial(H, Scalar(1), q * q, 7);
  auto input = nlohmann::json::parse(export_input(*A, {"y"}).dump());
  auto cc = config("custom");
  cc.input = "exported";
  auto custom = run_custom(input, cc);
  INFO(custom.text());
  CHECK(custom.ok());
  CHECK(custom.report["centers"]["Z_B(A)"].dump() == builtin.report["centers"]["Z_B(A)"].dump());

  SUBCASE("a non-coassociative coproduct aborts with a witness") {
    input["K"]["delta"][0] = nlohmann::json::parse(R"([["1", ["g"], ["g", "g"]]])");
    auto bad = run_custom(input, cc);
    CHECK_FALSE(bad.ok());
    REQUIRE(bad.report.contains("aborted"));
    CHECK(bad.report["aborted"]["stage"] == "K");
    CHECK(bad.report["aborted"]["check"] == "coassociativity");
    CHECK_FALSE(bad.report["aborted"]["witness"].get<std::string>().empty());
    CHECK(bad.report["centers"].empty());
  }
  SUBCASE("unknown generators are input errors") {
    input["A"]["h_action"][0][0] = nlohmann::json::parse(R"([["1", ["w"]]])");
    CHECK_THROWS_AS(run_custom(input, cc), ConfigError);
  }
}

TEST_CASE("custom input with H = k and A = k") {
  auto cc = config("custom");
  cc.input = "trivial";
  auto r = run_custom(nlohmann::json{{"schema", kInputSchema}}, cc);
  INFO(r.text());
  CHECK(r.ok());
  CHECK(r.report["centers"]["Z_B(A)"]["dim"] == 1);
  CHECK(r.report["centers"]["Z_B(A)"]["basis"][0]["expr"] == "1");
  CHECK_THROWS_AS(run_custom(nlohmann::json{{"schema", "other"}}, cc), ConfigError);
}

TEST_CASE("other scenarios run green") {
  auto s = config("sweedler");
  s.xi = "1";
  s.gamma = "2";
  auto rs = run(s);
  INFO(rs.text());
  CHECK(rs.ok());
  CHECK(rs.report["values"]["center"] == "k[u^2]");

  auto w = config("weyl");
  w.degree = 6;
  auto rw = run(w);
  INFO(rw.text());
  CHECK(rw.ok());
  CHECK(rw.report["centers"]["Cent(k[d])"]["dim"] == 6);

  auto d = config("double");
  auto rd = run(d);
  INFO(rd.text());
  CHECK(rd.ok());

  // another normalisation of the pairing keeps the double a Hopf algebra
  d.pairing = "1";
  auto rp = run(d);
  INFO(rp.text());
  CHECK(rp.ok());
  CHECK(rp.report["conclusions"].size() == 1);

  auto a = config("axioms");
  a.degree = 3;
  a.checks = {"qt", "yd"};
  auto ra = run(a);
  INFO(ra.text());
  CHECK(ra.ok());
}
