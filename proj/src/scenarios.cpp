#include "ydc/scenarios.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "ydc/kernels.hpp"

namespace ydc {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kFullSweep = std::numeric_limits<std::size_t>::max();

const std::map<std::string, std::vector<std::string>>& suite_table() {
  static const std::map<std::string, std::vector<std::string>> t = {
      {"uqsl2", {"axioms", "center", "oracle", "structure", "double", "smash", "compare", "stability"}},
      {"sweedler", {"axioms", "center", "compare", "stability"}},
      {"weyl", {"axioms", "formula", "center"}},
      {"double", {"axioms", "relations", "iso", "modules"}},
      {"axioms", {"qt", "braiding", "hopf", "module", "yd", "associativity"}},
      {"custom", {"axioms", "center"}},
  };
  return t;
}

struct Run {
  const ScenarioConfig& cfg;
  std::string var = "q";
  json j;

  explicit Run(const ScenarioConfig& c) : cfg(c) {
    j["schema"] = kReportSchema;
    j["scenario"] = c.scenario;
    j["config"] = json::object();
    j["field"] = json::object();
    j["checks"] = json::array();
    j["centers"] = json::object();
    j["values"] = json::object();
    j["conclusions"] = json::array();
  }
  bool want(const std::string& s) const { return cfg.checks.empty() || cfg.checks.count(s) > 0; }
  void add(const std::string& suite, const CheckReport& r) {
    json x;
    x["suite"] = suite;
    json body = r.to_json();
    for (const auto& el : body.items()) x[el.key()] = el.value();
    j["checks"].push_back(std::move(x));
  }
  void center(const std::string& key, const CenterResult& c) { j["centers"][key] = c.to_json(var); }
  void field(const Scalar& q) {
    int m = q.field() ? q.field()->conductor() : 1;
    j["field"] = {{"conductor", m}, {"generator", var}, {"q", q.str(var)}};
  }
  void conclude(std::string s) { j["conclusions"].push_back(std::move(s)); }
  ScenarioResult finish() {
    bool ok = !j.contains("aborted");
    for (const auto& c : j["checks"]) ok = ok && c["ok"].get<bool>();
    j["ok"] = ok;
    return {std::move(j)};
  }
};

Scalar literal(const std::string& text, const Scalar& gen, const std::string& flag, std::string_view var = "q") {
  try {
    return parse_scalar(text, gen, var);
  } catch (const std::exception& e) {
    throw ConfigError(flag + ": cannot read '" + text + "': " + e.what());
  }
}

std::string q_text(const ScenarioConfig& cfg) {
  if (!cfg.q_spec) return "default";
  return std::to_string(cfg.q_spec->first) + ":" + std::to_string(cfg.q_spec->second);
}

std::optional<std::size_t> monomial(const BasedAlgebra& a, const std::vector<int>& e) {
  const auto& ex = a.exponents();
  for (std::size_t i = 0; i < ex.size(); ++i)
    if (ex[i] == e) return i;
  return std::nullopt;
}

std::size_t gen_index(const BasedAlgebra& a, std::size_t g) { return a.generators().at(g).lead(); }

Vec from_coordinates(const std::optional<std::vector<Scalar>>& x) {
  Vec r;
  if (x)
    for (std::size_t i = 0; i < x->size(); ++i) r.add(i, (*x)[i]);
  return r;
}

// ---- nilpotent line over kZ_n acting on k[u] ----

ScenarioResult run_uqsl2(const ScenarioConfig& cfg) {
  Run r(cfg);
  auto [q, var] = scenario_q(cfg);
  r.var = var;
  int n = cfg.n, D = cfg.degree;
  Scalar gamma = literal(cfg.gamma, q, "--gamma");
  Scalar q2 = q * q;
  r.j["config"] = {{"n", n}, {"q", q_text(cfg)}, {"gamma", gamma.str(var)}, {"degree", D}};
  r.field(q);

  auto qt = rmatrix_cyclic(n, q);
  auto H = nilpotent_line_hopf(qt, n, q);
  auto A = module_algebra_polynomial(H, gamma, q2, D);
  const auto& HA = H->alg;
  const auto& AA = A->alg;
  std::size_t da = AA.dim();
  auto yu = [&](int i, int j) { return *monomial(HA, {i}) * da + *monomial(AA, {j}); };

  if (r.want("axioms")) {
    r.add("axioms", check_qt(*qt));
    r.add("axioms", check_braided_hopf(*H));
    r.add("axioms", check_module_algebra(*A));
    r.add("axioms", check_yd_algebra(rb_algebra(*A, {"y"})));
  }
  bool need = false;
  for (const char* s : {"center", "oracle", "structure", "double", "smash", "compare", "stability"}) need = need || r.want(s);
  if (!need) return r.finish();

  CenterResult c = b_center(*A, {"y"});
  const auto& R = c.ambient;
  std::optional<Vec> z;
  if (!gamma.is_zero()) z = z_element(n, q, gamma, 1, HA, AA);

  if (r.want("center")) {
    r.add("center", c.report);
    r.center("Z_B(A)", c);
    CheckReport e;
    e.subject = "center against the closed form";
    if (gamma.is_zero()) {
      std::vector<Vec> expect;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k * n <= c.safe_degree; ++k) expect.push_back(Vec::basis(yu(i, k * n)));
      e.add("basis is span{y^i u^(kn)}", c.basis == rref(expect), "", "dim " + std::to_string(c.dim()));
      r.j["values"]["center"] = "H ⊗ k[u^" + std::to_string(n) + "]";
    } else {
      std::vector<Vec> powers{R.one()};
      for (int l = 1; l <= c.safe_degree; ++l) {
        auto zl = z_element(n, q, gamma, l, HA, AA);
        if (zl && R.degree(*zl) <= c.safe_degree) powers.push_back(*zl);
      }
      e.add("basis is span{z_l} inside the window", c.basis == rref(powers), "", "dim " + std::to_string(c.dim()));
      bool good = true;
      int certified = 1;
      std::string wit;
      Vec zp = *z;
      for (int l = 2; l <= D && good; ++l) {
        Product p = R.mul(zp, *z);
        if (p.overflow) break;
        auto zl = z_element(n, q, gamma, l, HA, AA);
        if (!zl || p.value != *zl) {
          good = false;
          wit = "l = " + std::to_string(l);
        }
        zp = p.value;
        certified = l;
      }
      e.add("z^l = z_l", good, wit, "certified up to l = " + std::to_string(certified));
      // z_l past the certified powers are only reachable through overflowing
      // products, so they show up as extra generators
      std::vector<Vec> late;
      for (int l = certified + 1; l <= c.safe_degree; ++l)
        if (auto zl = z_element(n, q, gamma, l, HA, AA)) late.push_back(*zl);
      bool gens = !c.generators.empty() && c.generators[0] == *z;
      for (std::size_t i = 1; i < c.generators.size(); ++i) gens = gens && in_span(rref(late), c.generators[i]);
      e.add("generated by z and uncertifiable z_l", gens, "",
            std::to_string(c.generators.size()) + " generator(s)");
      r.j["values"]["center"] = "k[z]";
      r.j["values"]["z"] = z->str(*R.space(), var);
    }
    r.add("center", e);
  }

  if (r.want("oracle")) {
    auto sol = recurrence_oracle(n, q, gamma, c.safe_degree);
    CheckReport o;
    o.subject = "recurrence oracle";
    o.add("solution space equals the center", recurrence_in_ambient(sol, HA, AA) == c.basis, "",
          "dim " + std::to_string(sol.basis.size()));
    r.add("oracle", o);
  }

  if (r.want("structure") && z) {
    auto rb = rb_algebra(*A, {"y"});
    std::size_t dr = R.dim(), g = gen_index(qt->K, 0), x = gen_index(HA, 0);
    CheckReport s;
    s.subject = "YD structure of z";
    s.add("g.z = q^2 z", c.ambient_kmod.rho[g].apply(*z) == q2 * *z);
    s.add("a(x ⊗ z) = gamma 1", rb.mod.action.apply(tensor_vec(Vec::basis(x), *z, dr)) == gamma * R.one());
    Vec expect, zp = R.one();
    bool exact = true;
    for (int i = 0; i < n && exact; ++i) {
      Product p = R.mul(zp, *z);
      exact = !p.overflow;
      zp = p.value;
      Scalar coef = gamma.inverse().pow(i) * (Scalar(1) - q2).pow(i) * q2.pow(-(i * (i + 1) / 2 + i));
      expect += coef * tensor_vec(Vec::basis(*monomial(HA, {i})), zp, dr);
    }
    Vec co = rb.mod.coaction.apply(*z);
    if (exact)
      s.add("coaction series", co == expect);
    else
      r.conclude("coaction series not compared: z^n leaves the truncation");
    r.j["values"]["coaction(z)"] = co.str(*tensor(HA.space(), R.space()), var);
    r.add("structure", s);
  }

  if (r.want("double")) {
    Scalar c0 = (q - q.inverse()).inverse();
    Scalar pv = cfg.pairing.empty() ? c0 : literal(cfg.pairing, q, "--pairing");
    auto dual = nilpotent_line_hopf(qt, n, q, 1, "x*");
    auto p = make_pairing(H, dual, {{pv}});
    r.add("double", check_pairing(p));
    auto d = drinfeld_double(p);
    const auto& Dd = d.alg();
    r.add("double", check_hopf_laws(Dd.name(), Dd, d.hopf->delta, d.hopf->counit, d.hopf->antipode,
                                    d.hopf->antipode_inv, flip(Dd.space(), Dd.space())));
    if (pv == c0) {
      auto u = uqsl2(n, q);
      r.add("double", double_iso_uqsl2(d, *u));
      if (z && c.module) {
        auto m = phi_functor(*c.module, d);
        r.add("double", check_double_module(m, d));
        Product z2 = R.mul(*z, *z);
        auto zc = coordinates(c.basis, *z), z2c = coordinates(c.basis, z2.value), one = coordinates(c.basis, R.one());
        if (!z2.overflow && zc && z2c && one) {
          CheckReport v;
          v.subject = "u_q(sl2) on the center";
          Vec zv = from_coordinates(zc), z2v = from_coordinates(z2c), ov = from_coordinates(one);
          v.add("e.z = -q gamma^-1 z^2", m.word({1, 0}).apply(zv) == -q * gamma.inverse() * z2v);
          v.add("f.z = gamma", m.word({2}).apply(zv) == gamma * ov);
          v.add("k.z = q^2 z", m.word({1}).apply(zv) == q2 * zv);
          r.add("double", v);
        } else {
          r.conclude("u_q(sl2) values not compared: z^2 lies outside the certified window");
        }
      }
    } else {
      r.conclude("non-default pairing: comparison with u_q(sl2) skipped");
    }
  }

  if (r.want("smash")) r.add("smash", cross_check_smash(*A, c));

  if (r.want("compare")) {
    Scalar other = gamma.is_zero() ? Scalar(1) : Scalar(0);
    auto c2 = b_center(*module_algebra_polynomial(H, other, q2, D), {"y"});
    auto cmp = compare_centers(c, c2);
    CheckReport cr;
    cr.subject = "center comparison";
    cr.add("gamma = " + gamma.str(var) + " against gamma = " + other.str(var) + " is distinguishable",
           cmp.outcome == CenterComparison::Distinguishable, "", cmp.reason);
    r.add("compare", cr);
    r.j["values"]["comparison"] = {{"outcome", to_string(cmp.outcome)}, {"reason", cmp.reason}, {"signatures", cmp.signatures}};
    if (cmp.outcome == CenterComparison::Distinguishable)
      r.conclude("centers distinguishable ⇒ not Morita equivalent");
    else
      r.conclude("centers not distinguished; no Morita conclusion");
  }

  if (r.want("stability")) {
    auto big = b_center(*module_algebra_polynomial(H, gamma, q2, D + 2), {"y"});
    r.add("stability", check_stability(c, big));
  }
  return r.finish();
}

// ---- Sweedler's algebra acting on k[u] ----

ScenarioResult run_sweedler(const ScenarioConfig& cfg) {
  Run r(cfg);
  int D = cfg.degree;
  Scalar xi = literal(cfg.xi, Scalar(1), "--xi", "_"), gamma = literal(cfg.gamma, Scalar(1), "--gamma", "_");
  r.j["config"] = {{"xi", xi.str()}, {"gamma", gamma.str()}, {"degree", D}};
  r.field(Scalar(1));
  auto make = [&](const Scalar& x, const Scalar& g, int deg) {
    auto qt = rmatrix_sweedler(x);
    return module_algebra_polynomial(trivial_hopf(qt), g, Scalar(-1), deg);
  };
  auto A = make(xi, gamma, D);
  const auto& qt = *A->H->qt;
  if (r.want("axioms")) {
    r.add("axioms", check_qt(qt));
    r.add("axioms", check_braided_hopf(*A->H));
    r.add("axioms", check_module_algebra(*A));
    r.add("axioms", check_braiding(qt, A->kmod, A->kmod, A->kmod));
  }
  if (!r.want("center") && !r.want("compare") && !r.want("stability")) return r.finish();

  auto c = b_center(*A);
  const auto& sp = *c.ambient.space();
  std::vector<Vec> expect;
  for (int k = 0; 2 * k <= c.safe_degree; ++k)
    expect.push_back(Vec::basis(*sp.find(k ? "u^" + std::to_string(2 * k) : "1")));
  expect = rref(expect);
  if (r.want("center")) {
    r.add("center", c.report);
    r.center("Z_B(A)", c);
    CheckReport e;
    e.subject = "center against k[u^2]";
    e.add("basis is span{u^(2k)}", c.basis == expect, "", "dim " + std::to_string(c.dim()));
    std::size_t g = *qt.K.space()->find("g"), x = *qt.K.space()->find("x");
    if (auto i = sp.find("u^2")) {
      Vec u2 = Vec::basis(*i);
      e.add("g.u^2 = u^2", c.ambient_kmod.rho[g].apply(u2) == u2);
      e.add("x.u^2 = 0", c.ambient_kmod.rho[x].apply(u2).is_zero());
    }
    auto l = left_center(A->alg, qt, A->kmod);
    e.add("left center in K-mod agrees", l.basis == c.basis);
    r.add("center", e);
    r.j["values"]["center"] = "k[u^2]";
  }
  if (r.want("compare")) {
    CheckReport cr;
    cr.subject = "parameter sweep";
    for (long x : {0, 1, 2})
      for (long g : {0, 1, 2}) {
        auto other = b_center(*make(Scalar(x), Scalar(g), D));
        auto cmp = compare_centers(c, other);
        std::string name = "xi = " + std::to_string(x) + ", gamma = " + std::to_string(g);
        cr.add(name + ": same center", other.basis == c.basis && cmp.outcome == CenterComparison::IsomorphicAsGraded, "",
               to_string(cmp.outcome));
      }
    r.add("compare", cr);
  }
  if (r.want("stability")) r.add("stability", check_stability(c, b_center(*make(xi, gamma, D + 2))));
  return r.finish();
}

// ---- Weyl algebra as a Heisenberg double ----

ScenarioResult run_weyl(const ScenarioConfig& cfg) {
  Run r(cfg);
  int vars = cfg.vars, D = cfg.degree;
  r.j["config"] = {{"vars", vars}, {"degree", D}};
  r.field(Scalar(1));
  std::vector<std::string> xn, dn;
  for (int i = 1; i <= vars; ++i) {
    xn.push_back("x" + std::to_string(i));
    dn.push_back("d" + std::to_string(i));
  }
  std::vector<std::vector<Scalar>> delta(vars, std::vector<Scalar>(vars, Scalar(0)));
  for (int i = 0; i < vars; ++i) delta[i][i] = Scalar(1);
  auto pairing = [&](int deg) { return make_pairing(polynomial_hopf(vars, deg, xn), polynomial_hopf(vars, deg, dn), delta); };
  auto p = pairing(D);
  auto heis = heisenberg_double(p);
  const auto& W = heis.alg;

  if (r.want("axioms")) {
    r.add("axioms", check_braided_hopf(*p.H));
    r.add("axioms", check_braided_hopf(*p.Hdual));
    r.add("axioms", check_pairing(p));
    int small = std::min(D, 4);
    auto rep = check_associative(small == D ? W : heisenberg_double(pairing(small)).alg);
    for (auto& e : rep.entries) e.note = "truncation " + std::to_string(small);
    r.add("axioms", rep);
  }
  if (r.want("formula")) {
    r.add("formula", check_heisenberg_formula(p, heis, generator_pairs(heis)));
    CheckReport cr;
    cr.subject = "commutators";
    for (int i = 0; i < vars; ++i)
      for (int j = 0; j < vars; ++j) {
        Vec x = W.generators()[vars + i], d = W.generators()[j];
        Vec comm = W.mul_exact(x, d) - W.mul_exact(d, x);
        cr.add("[" + xn[i] + ", " + dn[j] + "] = " + (i == j ? "1" : "0"), comm == (i == j ? W.one() : Vec()));
      }
    r.add("formula", cr);
  }
  if (r.want("center")) {
    std::vector<Vec> S(W.generators().begin(), W.generators().begin() + vars);
    auto c = centralizer(W, S, braid_flip(W.dim()), Side::Left);
    c.name = "Cent(k[d])";
    // a centralizer of a subalgebra, so only closure is certified
    auto bad = kernels::first_failure(c.dim() * c.dim(), [&](std::size_t t) {
      Product p = W.mul(c.basis[t / c.dim()], c.basis[t % c.dim()]);
      return p.overflow || W.degree(p.value) > c.safe_degree || c.contains(p.value);
    });
    c.algebra_closed = !bad;
    c.report.subject = c.name;
    c.report.add("closed under the product", !bad);
    r.add("center", c.report);
    r.center("Cent(k[d])", c);
    std::vector<Vec> expect;
    std::size_t dh = heis.dim_h, hu = p.H->alg.unit_index();
    for (std::size_t a = 0; a < heis.dim_a; ++a)
      if (p.Hdual->alg.degree(a) <= c.safe_degree) expect.push_back(Vec::basis(heis.position[a * dh + hu]));
    CheckReport e;
    e.subject = "centralizer of the d-subalgebra";
    e.add("equals k[d] inside the window", c.basis == rref(expect), "", "dim " + std::to_string(c.dim()));
    r.add("center", e);
    r.j["values"]["center"] = "k[d]";
  }
  return r.finish();
}

// ---- the Drinfeld double and u_q(sl2) ----

ScenarioResult run_double(const ScenarioConfig& cfg) {
  Run r(cfg);
  auto [q, var] = scenario_q(cfg);
  r.var = var;
  int n = cfg.n;
  Scalar q2 = q * q, c0 = (q - q.inverse()).inverse();
  Scalar pv = cfg.pairing.empty() ? c0 : literal(cfg.pairing, q, "--pairing");
  r.j["config"] = {{"n", n}, {"q", q_text(cfg)}, {"pairing", pv.str(var)}};
  r.field(q);
  auto qt = rmatrix_cyclic(n, q);
  auto H = nilpotent_line_hopf(qt, n, q);
  auto dual = nilpotent_line_hopf(qt, n, q, 1, "x*");
  auto p = make_pairing(H, dual, {{pv}});
  auto d = drinfeld_double(p);
  const auto& Dd = d.alg();

  if (r.want("axioms")) {
    r.add("axioms", check_pairing(p));
    r.add("axioms", check_hopf_laws(Dd.name(), Dd, d.hopf->delta, d.hopf->counit, d.hopf->antipode,
                                    d.hopf->antipode_inv, flip(Dd.space(), Dd.space())));
  }
  if (r.want("relations")) {
    Vec xs = Dd.generators()[0], g = Dd.generators()[1], x = Dd.generators()[2];
    CheckReport rel;
    rel.subject = "defining relations";
    rel.add("x* x - q^2 x x* = c (1 - g^-2)",
            Dd.mul_exact(xs, x) - q2 * Dd.mul_exact(x, xs) == pv * (Dd.one() - Dd.power(g, n - 2)));
    rel.add("g x = q^-2 x g", Dd.mul_exact(g, x) == q2.inverse() * Dd.mul_exact(x, g));
    rel.add("g x* = q^2 x* g", Dd.mul_exact(g, xs) == q2 * Dd.mul_exact(xs, g));
    rel.add("x^n = x*^n = 0, g^n = 1", Dd.power(x, n).is_zero() && Dd.power(xs, n).is_zero() && Dd.power(g, n) == Dd.one());
    rel.add("dimension n^3", Dd.dim() == static_cast<std::size_t>(n * n * n), "", std::to_string(Dd.dim()));
    r.add("relations", rel);
  }
  if (r.want("iso")) {
    if (pv != c0 || n < 3) {
      r.conclude("comparison with u_q(sl2) needs n >= 3 and the default pairing; skipped");
    } else {
      auto u = uqsl2(n, q);
      const auto& U = u->alg;
      r.add("iso", check_hopf_laws(U.name(), U, u->delta, u->counit, u->antipode, u->antipode_inv,
                                   flip(U.space(), U.space())));
      r.add("iso", double_iso_uqsl2(d, *u));
    }
  }
  if (r.want("modules")) {
    auto A = module_algebra_polynomial(H, Scalar(1), q2, n + 1);
    r.add("modules", check_double_module(phi_functor(adjoint_algebra(H).mod, d), d));
    r.add("modules", check_double_module(phi_functor(rb_algebra(*A).mod, d), d));
    r.add("modules", check_double_module(phi_functor(trivial_yd(H), d), d));
  }
  return r.finish();
}

// ---- property suites ----

ScenarioResult run_axioms(const ScenarioConfig& cfg) {
  Run r(cfg);
  auto [q, var] = scenario_q(cfg);
  r.var = var;
  int n = cfg.n, D = cfg.degree;
  Scalar q2 = q * q;
  r.j["config"] = {{"n", n}, {"q", q_text(cfg)}, {"degree", D}};
  r.field(q);
  auto qt = rmatrix_cyclic(n, q);
  auto H = nilpotent_line_hopf(qt, n, q);
  auto dual = nilpotent_line_hopf(qt, n, q, 1, "x*");
  auto A0 = module_algebra_polynomial(H, Scalar(0), q2, D);
  auto A1 = module_algebra_polynomial(H, Scalar(1), q2, D);
  auto p = make_pairing(H, dual, {{(q - q.inverse()).inverse()}});
  std::vector<QTPtr> sweedler;
  std::vector<ModAlgPtr> sweedler_mod;
  for (long xi : {0, 1, 2}) {
    sweedler.push_back(rmatrix_sweedler(Scalar(xi)));
    sweedler_mod.push_back(module_algebra_polynomial(trivial_hopf(sweedler.back()), Scalar(1), Scalar(-1), D));
  }
  auto ad = adjoint_algebra(H);
  auto rb0 = rb_algebra(*A0), rb1 = rb_algebra(*A1);

  if (r.want("qt")) {
    r.add("qt", check_qt(*qt));
    for (const auto& s : sweedler) r.add("qt", check_qt(*s));
  }
  if (r.want("braiding")) {
    r.add("braiding", check_braiding(*qt, H->kmod, A1->kmod, dual->kmod));
    for (const auto& a : sweedler_mod) r.add("braiding", check_braiding(*a->H->qt, a->kmod, a->kmod, a->kmod));
    r.add("braiding", check_yd_braiding(ad.mod, rb1.mod, rb0.mod));
    r.add("braiding", check_yd_braiding(rb1.mod, ad.mod, rb1.mod));
  }
  if (r.want("hopf")) {
    r.add("hopf", check_braided_hopf(*H));
    r.add("hopf", check_braided_hopf(*dual));
    r.add("hopf", check_braided_hopf(*trivial_hopf(qt)));
    r.add("hopf", check_braided_hopf(*polynomial_hopf(2, D, {"a", "b"})));
    r.add("hopf", check_braided_hopf(*bosonize_yd(ad.mod).hopf));
    auto d = drinfeld_double(p);
    const auto& Dd = d.alg();
    r.add("hopf", check_hopf_laws(Dd.name(), Dd, d.hopf->delta, d.hopf->counit, d.hopf->antipode,
                                  d.hopf->antipode_inv, flip(Dd.space(), Dd.space())));
    if (n >= 3) {
      auto u = uqsl2(n, q);
      r.add("hopf", check_hopf_laws(u->alg.name(), u->alg, u->delta, u->counit, u->antipode, u->antipode_inv,
                                    flip(u->alg.space(), u->alg.space())));
    }
  }
  if (r.want("module")) {
    r.add("module", check_module_algebra(*A0));
    r.add("module", check_module_algebra(*A1));
    r.add("module", check_module_algebra(*unit_module_algebra(H)));
    r.add("module", check_module_algebra(*coregular_module(p)));
    for (const auto& a : sweedler_mod) r.add("module", check_module_algebra(*a));
  }
  if (r.want("yd")) {
    r.add("yd", check_yd_algebra(ad));
    r.add("yd", check_braided_commutative(ad));
    r.add("yd", check_yd_algebra(rb0));
    r.add("yd", check_yd_algebra(rb1));
    r.add("yd", check_yd(trivial_yd(H)));
    r.add("yd", check_yd(phi_transport(*A1).module));
    r.add("yd", check_yd(bosonize_yd(rb1.mod).module));
    r.add("yd", check_lax_structure(regular_module(H), module_of(*A1), module_of(*A0)));
  }
  if (r.want("associativity")) {
    std::vector<BasedAlgebra> algs{qt->K, H->alg, dual->alg, A1->alg, ad.alg, rb1.alg, smash_product(*A1).alg,
                                   heisenberg_double(p).alg, drinfeld_double(p).alg(), bosonize_yd(ad.mod).hopf->alg};
    for (const auto& s : sweedler) algs.push_back(s->K);
    if (n >= 3) algs.push_back(uqsl2(n, q)->alg);
    for (const auto& a : algs) r.add("associativity", check_associative(a, kFullSweep));
  }
  return r.finish();
}

// ---- custom inputs ----

const char* kind_name(PowerKind k) {
  switch (k) {
    case PowerKind::Nilpotent: return "nilpotent";
    case PowerKind::Cyclic: return "cyclic";
    default: return "free";
  }
}

struct Writer {
  int conductor = 1;

  std::string scalar(const Scalar& s) {
    if (s.field() && !s.is_rational()) conductor = std::max(conductor, s.field()->conductor());
    return s.str("q");
  }
  static json word(const BasedAlgebra& a, const std::vector<int>& w) {
    json j = json::array();
    for (int g : w) j.push_back(a.generator_names().at(g));
    return j;
  }
  json element(const BasedAlgebra& a, const Vec& v) {
    json j = json::array();
    for (const auto& [i, c] : v) j.push_back({scalar(c), word(a, a.words().at(i))});
    return j;
  }
  json tensor_element(const BasedAlgebra& a, const BasedAlgebra& b, const Vec& v) {
    json j = json::array();
    for (const auto& [t, c] : v)
      j.push_back({scalar(c), word(a, a.words().at(t / b.dim())), word(b, b.words().at(t % b.dim()))});
    return j;
  }
  json presentation(const BasedAlgebra& a) {
    if (!a.presentation()) throw std::invalid_argument("algebra " + a.name() + " has no presentation to export");
    const auto& p = *a.presentation();
    json j;
    j["name"] = a.name();
    j["generators"] = p.generators;
    json pw = json::array();
    for (const auto& r : p.powers) pw.push_back({{"kind", kind_name(r.kind)}, {"order", r.order}});
    j["powers"] = pw;
    if (!p.weights.empty()) j["weights"] = p.weights;
    j["truncation"] = p.truncation;
    json sw = json::array();
    for (const auto& s : p.swaps) {
      json rhs = json::array();
      for (const auto& t : s.rhs) rhs.push_back({scalar(t.coeff), word(a, t.word)});
      sw.push_back({{"left", p.generators.at(s.left)}, {"right", p.generators.at(s.right)}, {"rhs", rhs}});
    }
    j["swaps"] = sw;
    return j;
  }
  json k_action(const BasedAlgebra& K, const KModule& m, const BasedAlgebra& V) {
    json j = json::array();
    for (const auto& kg : K.generators()) {
      json row = json::array();
      for (const auto& vg : V.generators()) row.push_back(element(V, m.rho.at(kg.lead()).apply(vg)));
      j.push_back(row);
    }
    return j;
  }
};

struct Reader {
  Scalar gen;

  Scalar scalar(const nlohmann::json& s) const { return literal(s.get<std::string>(), gen, "input"); }

  static std::vector<int> word(const BasedAlgebra& a, const nlohmann::json& w) {
    std::vector<int> r;
    const auto& names = a.generator_names();
    for (const auto& x : w) {
      auto it = std::find(names.begin(), names.end(), x.get<std::string>());
      if (it == names.end()) throw ConfigError("input: unknown generator '" + x.get<std::string>() + "' of " + a.name());
      r.push_back(static_cast<int>(it - names.begin()));
    }
    return r;
  }
  static Vec word_value(const BasedAlgebra& a, const std::vector<int>& w) {
    Vec v;
    for (const auto& [e, c] : normal_form(*a.presentation(), w)) {
      auto i = monomial(a, e);
      if (!i) throw ConfigError("input: a word of " + a.name() + " leaves the truncation");
      v.axpy(c, Vec::basis(*i));
    }
    return v;
  }
  Vec element(const BasedAlgebra& a, const nlohmann::json& terms) const {
    Vec v;
    for (const auto& t : terms) v.axpy(scalar(t.at(0)), word_value(a, word(a, t.at(1))));
    return v;
  }
  Vec tensor_element(const BasedAlgebra& a, const BasedAlgebra& b, const nlohmann::json& terms) const {
    Vec v;
    for (const auto& t : terms)
      v.axpy(scalar(t.at(0)), tensor_vec(word_value(a, word(a, t.at(1))), word_value(b, word(b, t.at(2))), b.dim()));
    return v;
  }
  Presentation presentation(const nlohmann::json& j) const {
    Presentation p;
    p.name = j.value("name", std::string("A"));
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("powers")) {
      std::string k = r.at("kind").get<std::string>();
      PowerKind kind = k == "nilpotent" ? PowerKind::Nilpotent : k == "cyclic" ? PowerKind::Cyclic : PowerKind::Free;
      if (k != "nilpotent" && k != "cyclic" && k != "free") throw ConfigError("input: unknown power rule '" + k + "'");
      p.powers.push_back({kind, r.value("order", 0)});
    }
    if (j.contains("weights")) p.weights = j["weights"].get<std::vector<int>>();
    p.truncation = j.value("truncation", -1);
    auto index = [&](const nlohmann::json& name) {
      auto it = std::find(p.generators.begin(), p.generators.end(), name.get<std::string>());
      if (it == p.generators.end()) throw ConfigError("input: unknown generator '" + name.get<std::string>() + "'");
      return static_cast<int>(it - p.generators.begin());
    };
    for (const auto& s : j.value("swaps", nlohmann::json::array())) {
      SwapRule rule;
      rule.left = index(s.at("left"));
      rule.right = index(s.at("right"));
      for (const auto& t : s.at("rhs")) {
        Term term;
        term.coeff = scalar(t.at(0));
        for (const auto& g : t.at(1)) term.word.push_back(index(g));
        rule.rhs.push_back(std::move(term));
      }
      p.swaps.push_back(std::move(rule));
    }
    if (auto err = p.check(); !err.empty()) throw ConfigError("input: presentation " + p.name + ": " + err);
    return p;
  }
  std::vector<std::vector<Vec>> images(const BasedAlgebra& src, const BasedAlgebra& dst, const nlohmann::json& j) const {
    std::vector<std::vector<Vec>> r;
    for (const auto& row : j) {
      std::vector<Vec> imgs;
      for (const auto& e : row) imgs.push_back(element(dst, e));
      if (imgs.size() != dst.generators().size()) throw ConfigError("input: action table of " + dst.name() + " has wrong width");
      r.push_back(std::move(imgs));
    }
    if (r.size() != src.generators().size()) throw ConfigError("input: action table needs one row per generator of " + src.name());
    return r;
  }
};

// Returns false and records the abort when the suite fails.
bool gate(Run& r, const std::string& stage, const CheckReport& rep) {
  r.add("axioms", rep);
  if (rep.ok()) return true;
  const auto* f = rep.first_failure();
  r.j["aborted"] = {{"stage", stage}, {"subject", rep.subject}, {"check", f->name}, {"witness", f->witness}};
  return false;
}

}  // namespace

std::vector<std::string> suites(const std::string& scenario) {
  auto it = suite_table().find(scenario);
  return it == suite_table().end() ? std::vector<std::string>{} : it->second;
}

void validate(ScenarioConfig& cfg) {
  const auto& table = suite_table();
  if (!table.count(cfg.scenario)) throw ConfigError("unknown scenario '" + cfg.scenario + "'");
  auto known = suites(cfg.scenario);
  for (const auto& c : cfg.checks)
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      std::string list;
      for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
      throw ConfigError("--checks: '" + c + "' is not a suite of " + cfg.scenario + " (" + list + ")");
    }
  auto degree_default = [&](int d) {
    if (cfg.degree == 0) cfg.degree = d;
    if (cfg.degree < 1 || cfg.degree > 64) throw ConfigError("--degree must lie in [1, 64]");
  };
  const auto& s = cfg.scenario;
  if (s == "uqsl2") {
    if (cfg.n < 3) throw ConfigError("--n must be at least 3 for uqsl2");
    degree_default(2 * cfg.n + 2);
    if (cfg.degree < cfg.n + 2)
      throw ConfigError("--degree must be at least n + 2 = " + std::to_string(cfg.n + 2) +
                        " so that a power of z is certifiable");
  } else if (s == "double" || s == "axioms") {
    if (cfg.n < 2) throw ConfigError("--n must be at least 2");
    degree_default(4);
  } else if (s == "sweedler") {
    degree_default(8);
    if (cfg.degree < 2) throw ConfigError("--degree must be at least 2 so that u^2 is visible");
  } else if (s == "weyl") {
    if (cfg.vars < 1 || cfg.vars > 3) throw ConfigError("--vars must lie in [1, 3]");
    degree_default(8);
  } else if (s == "custom") {
    if (cfg.input.empty()) throw ConfigError("custom needs an input file");
  }
  if (s == "uqsl2" || s == "double" || s == "axioms") scenario_q(cfg);
}

std::pair<Scalar, std::string> scenario_q(const ScenarioConfig& cfg) {
  int n = cfg.n;
  Scalar q;
  if (cfg.q_spec) {
    auto [m, e] = *cfg.q_spec;
    if (m < 2 || m > CycField::kMaxConductor)
      throw ConfigError("--q: conductor must lie in [2, " + std::to_string(CycField::kMaxConductor) + "]");
    q = Scalar::zeta(CycField::get(m), e);
    if (multiplicative_order(q * q, 2L * m) != n)
      throw ConfigError("--q " + std::to_string(m) + ":" + std::to_string(e) + ": q^2 must have order n = " +
                        std::to_string(n));
  } else {
    q = q_root(CycField::get(n % 2 ? n : 2 * n), n);
  }
  std::string var = q.field() && q == Scalar::zeta(*q.field(), 1) ? "q" : "z";
  return {q, var};
}

std::optional<Vec> z_element(int n, const Scalar& q, const Scalar& gamma, int l, const BasedAlgebra& H,
                             const BasedAlgebra& A) {
  Scalar q2 = q * q;
  Vec z;
  for (int k = 0; k < n; ++k) {
    Scalar c = gamma.inverse().pow(k) * q_binomial(l + k - 1, k, q2) * q2.pow(-(k * l + k * (k + 1) / 2)) *
               (Scalar(1) - q2).pow(k);
    if (c.is_zero()) continue;
    auto h = monomial(H, {k}), a = monomial(A, {k + l});
    if (!h || !a) return std::nullopt;
    z.add(*h * A.dim() + *a, c);
  }
  return z;
}

json export_input(const ModuleAlgebra& a, const std::vector<std::string>& h_names) {
  Writer w;
  const auto& H = *a.H;
  const auto& qt = *H.qt;
  const auto& K = qt.K;
  json k;
  k["name"] = qt.name;
  k["presentation"] = w.presentation(K);
  json kd = json::array(), kc = json::array(), ks = json::array();
  for (const auto& g : K.generators()) {
    kd.push_back(w.tensor_element(K, K, qt.delta.apply(g)));
    kc.push_back(w.scalar(qt.counit.apply(g).get(0)));
    ks.push_back(w.element(K, qt.antipode.apply(g)));
  }
  k["delta"] = kd;
  k["counit"] = kc;
  k["antipode"] = ks;
  k["R"] = w.tensor_element(K, K, qt.R);

  json h;
  h["name"] = H.name;
  h["presentation"] = w.presentation(H.alg);
  h["k_action"] = w.k_action(K, H.kmod, H.alg);
  json hd = json::array(), hc = json::array(), hs = json::array();
  for (const auto& g : H.alg.generators()) {
    hd.push_back(w.tensor_element(H.alg, H.alg, H.delta.apply(g)));
    hc.push_back(w.scalar(H.counit.apply(g).get(0)));
    hs.push_back(w.element(H.alg, H.antipode.apply(g)));
  }
  h["delta"] = hd;
  h["counit"] = hc;
  h["antipode"] = hs;
  if (!h_names.empty()) h["names_in_center"] = h_names;

  json m;
  m["name"] = a.name;
  m["presentation"] = w.presentation(a.alg);
  m["k_action"] = w.k_action(K, a.kmod, a.alg);
  json ha = json::array();
  for (const auto& hg : H.alg.generators()) {
    json row = json::array();
    for (const auto& ag : a.alg.generators()) row.push_back(w.element(a.alg, a.act(hg, ag)));
    ha.push_back(row);
  }
  m["h_action"] = ha;

  json j;
  j["schema"] = kInputSchema;
  j["field"] = {{"conductor", w.conductor}, {"generator", "q"}};
  j["K"] = k;
  j["H"] = h;
  j["A"] = m;
  return j;
}

ScenarioResult run_custom(const nlohmann::json& in, const ScenarioConfig& cfg) {
  Run r(cfg);
  if (in.value("schema", std::string()) != kInputSchema)
    throw ConfigError(std::string("input: schema must be ") + kInputSchema);
  int m = in.contains("field") ? in["field"].value("conductor", 1) : 1;
  if (m < 1 || m > CycField::kMaxConductor) throw ConfigError("input: unsupported conductor");
  Reader rd{m > 1 ? Scalar::zeta(CycField::get(m), 1) : Scalar(1)};
  r.j["config"] = {{"input", cfg.input}};
  r.j["field"] = {{"conductor", m}, {"generator", "q"}};

  try {
    QTPtr qt = trivial_qt();
    if (in.contains("K")) {
      const auto& k = in["K"];
      BasedAlgebra K = build(rd.presentation(k.at("presentation")));
      std::vector<Vec> delta, antipode;
      std::vector<Scalar> counit;
      for (const auto& e : k.at("delta")) delta.push_back(rd.tensor_element(K, K, e));
      for (const auto& e : k.at("counit")) counit.push_back(rd.scalar(e));
      for (const auto& e : k.at("antipode")) antipode.push_back(rd.element(K, e));
      if (delta.size() != K.generators().size() || counit.size() != delta.size() || antipode.size() != delta.size())
        throw ConfigError("input: K needs delta, counit and antipode for every generator");
      Vec R = rd.tensor_element(K, K, k.at("R"));
      qt = make_qt(k.value("name", std::string("K")), K, delta, counit, antipode, R);
    }
    if (r.want("axioms") && !gate(r, "K", check_qt(*qt))) return r.finish();

    HopfPtr H;
    std::vector<std::string> h_names;
    if (in.contains("H")) {
      const auto& h = in["H"];
      BasedAlgebra alg = build(rd.presentation(h.at("presentation")));
      auto kimg = rd.images(qt->K, alg, h.at("k_action"));
      LinearMap kact = extend_action(qt->K, qt->delta, qt->counit, alg, flip(qt->K.space(), alg.space()), kimg);
      KModule km = kmodule_from_action(*qt, alg.space(), kact);
      if (r.want("axioms") && !gate(r, "H", check_kmodule(*qt, km, alg.name()))) return r.finish();
      HopfGeneratorData data;
      for (const auto& e : h.at("delta")) data.delta.push_back(rd.tensor_element(alg, alg, e));
      for (const auto& e : h.at("counit")) data.counit.push_back(rd.scalar(e));
      for (const auto& e : h.at("antipode")) data.antipode.push_back(rd.element(alg, e));
      if (data.delta.size() != alg.generators().size() || data.counit.size() != data.delta.size() ||
          data.antipode.size() != data.delta.size())
        throw ConfigError("input: H needs delta, counit and antipode for every generator");
      if (h.contains("names_in_center")) h_names = h["names_in_center"].get<std::vector<std::string>>();
      H = make_braided_hopf(h.value("name", std::string("H")), qt, std::move(alg), std::move(km), data);
    } else {
      H = trivial_hopf(qt);
    }
    if (r.want("axioms") && !gate(r, "H", check_braided_hopf(*H))) return r.finish();

    ModAlgPtr A;
    if (in.contains("A")) {
      const auto& a = in["A"];
      BasedAlgebra alg = build(rd.presentation(a.at("presentation")));
      auto kimg = rd.images(qt->K, alg, a.at("k_action"));
      auto himg = rd.images(H->alg, alg, a.at("h_action"));
      A = make_module_algebra(a.value("name", std::string("A")), H, std::move(alg), kimg, himg);
    } else {
      A = unit_module_algebra(H);
    }
    if (r.want("axioms") && !gate(r, "A", check_module_algebra(*A))) return r.finish();

    if (r.want("center")) {
      auto c = b_center(*A, h_names);
      r.add("center", c.report);
      r.center("Z_B(A)", c);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    r.j["aborted"] = {{"stage", "construction"}, {"subject", "input"}, {"check", "build"}, {"witness", e.what()}};
  }
  return r.finish();
}

ScenarioResult run(ScenarioConfig cfg) {
  validate(cfg);
  const auto& s = cfg.scenario;
  if (s == "uqsl2") return run_uqsl2(cfg);
  if (s == "sweedler") return run_sweedler(cfg);
  if (s == "weyl") return run_weyl(cfg);
  if (s == "double") return run_double(cfg);
  if (s == "axioms") return run_axioms(cfg);
  throw ConfigError("custom scenarios run through run_custom with a parsed input");
}

std::string ScenarioResult::text() const {
  std::ostringstream os;
  const auto& j = report;
  os << "scenario " << j["scenario"].get<std::string>();
  for (const auto& el : j["config"].items()) os << "  " << el.key() << "=" << (el.value().is_string() ? el.value().get<std::string>() : el.value().dump());
  os << "\n";
  for (const auto& c : j["checks"]) {
    os << "[" << c["suite"].get<std::string>() << "] " << c["subject"].get<std::string>() << ": "
       << (c["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    for (const auto& e : c["checks"]) {
      bool pass = e["pass"].get<bool>();
      if (pass && c["ok"].get<bool>()) continue;
      os << "    [" << (pass ? "pass" : "FAIL") << "] " << e["name"].get<std::string>();
      if (e.contains("note")) os << " (" << e["note"].get<std::string>() << ")";
      if (e.contains("witness")) os << "  witness: " << e["witness"].get<std::string>();
      os << "\n";
    }
  }
  for (const auto& el : j["centers"].items()) {
    const auto& c = el.value();
    os << "center " << el.key() << " in " << c["ambient"]["name"].get<std::string>() << ": dim " << c["dim"].dump()
       << ", safe degree " << c["safe_degree"].dump() << "\n";
    for (const auto& g : c["generators"]) os << "  generator " << g["expr"].get<std::string>() << "\n";
    if (c.contains("structure"))
      for (const auto& s : c["structure"]) {
        os << "  on " << s["element"].get<std::string>() << ":\n";
        for (const auto& a : s["K"].items()) os << "    " << a.key() << " . = " << a.value().get<std::string>() << "\n";
        for (const auto& a : s["H"].items()) os << "    " << a.key() << " . = " << a.value().get<std::string>() << "\n";
        os << "    coaction = " << s["coaction"].get<std::string>() << "\n";
      }
  }
  for (const auto& el : j["values"].items())
    if (el.value().is_string()) os << el.key() << " = " << el.value().get<std::string>() << "\n";
  for (const auto& c : j["conclusions"]) os << c.get<std::string>() << "\n";
  if (j.contains("aborted"))
    os << "aborted at " << j["aborted"]["stage"].get<std::string>() << ": " << j["aborted"]["subject"].get<std::string>()
       << " / " << j["aborted"]["check"].get<std::string>() << "  witness: " << j["aborted"]["witness"].get<std::string>()
       << "\n";
  os << (j["ok"].get<bool>() ? "all checks passed" : "FAILED") << "\n";
  return os.str();
}

}  // namespace ydc
