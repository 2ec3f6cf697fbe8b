#include <doctest.h>

#include "ydc/constructions.hpp"

using namespace ydc;

namespace {

struct Line {
  Scalar q;
  QTPtr qt;
  HopfPtr H, dual;
};

Line line(int n) {
  Line s;
  s.q = q_root(n % 2 ? CycField::get(n) : CycField::get(2 * n), n);
  s.qt = rmatrix_cyclic(n, s.q);
  s.H = nilpotent_line_hopf(s.qt, n, s.q);
  s.dual = nilpotent_line_hopf(s.qt, n, s.q, 1, "x*");
  return s;
}

DualPairing line_pairing(const Line& s) {
  Scalar c = (s.q - s.q.inverse()).inverse();
  return make_pairing(s.H, s.dual, {{c}});
}

std::size_t at(const BasedAlgebra& a, const std::string& label) {
  auto i = a.space()->find(label);
  REQUIRE_MESSAGE(i.has_value(), label);
  return *i;
}

Vec el(const BasedAlgebra& a, const std::string& label) { return Vec::basis(at(a, label)); }

}  // namespace

TEST_CASE("R_B(A) for k[u] over the nilpotent line") {
  int n = 3;
  auto s = line(n);
  Scalar q2 = s.q * s.q, gamma(1);
  auto A = module_algebra_polynomial(s.H, gamma, q2, 4);
  auto r = rb_algebra(*A, {"y"});
  const auto& R = r.alg;
  CHECK(R.dim() == std::size_t(n * 5));
  Vec y = el(R, "y"), u = el(R, "u");
  CHECK(R.power(y, n).is_zero());
  CHECK(R.mul_exact(u, y) == q2.inverse() * R.mul_exact(y, u));

  std::size_t dr = R.dim(), x = 1;
  auto act = [&](const Vec& v) { return r.mod.action.apply(tensor_vec(Vec::basis(x), v, dr)); };
  Vec expect = (Scalar(1) - q2.pow(-2)) * el(R, "y u") + gamma * R.one();
  CHECK(act(u) == expect);
  CHECK(act(y) == (Scalar(1) - q2) * el(R, "y^2"));
  CHECK(r.mod.coaction.apply(y) == tensor_vec(s.H->alg.one(), y, dr) + tensor_vec(Vec::basis(x), R.one(), dr));
  CHECK(r.mod.coaction.apply(u) == tensor_vec(s.H->alg.one(), u, dr));

  auto rep = check_yd_algebra(r);
  INFO(rep.text());
  CHECK(rep.ok());
}

TEST_CASE("R_B(A) is a YD algebra for several gamma") {
  auto s = line(3);
  for (long gamma : {0, 2}) {
    auto A = module_algebra_polynomial(s.H, Scalar(gamma), s.q * s.q, 3);
    auto rep = check_yd_algebra(rb_algebra(*A));
    INFO(rep.text());
    CHECK(rep.ok());
  }
}

TEST_CASE("adjoint algebra agrees with R_B of the unit") {
  for (int n : {2, 3, 4}) {
    auto s = line(n);
    auto ad = adjoint_algebra(s.H);
    auto r = rb_algebra(*unit_module_algebra(s.H));
    CHECK(ad.mod.action.columns() == r.mod.action.columns());
    CHECK(ad.mod.coaction.columns() == r.mod.coaction.columns());
    for (std::size_t i = 0; i < ad.alg.dim(); ++i)
      for (std::size_t j = 0; j < ad.alg.dim(); ++j) CHECK(ad.alg.product(i, j) == r.alg.product(i, j));
    // x acting on 1 gives eps(x) = 0
    std::size_t d = ad.alg.dim();
    CHECK(ad.mod.action.column(1 * d + ad.alg.unit_index()).is_zero());
    for (std::size_t h = 0; h < d; ++h) CHECK(ad.mod.action.column(ad.alg.unit_index() * d + h) == Vec::basis(h));
    auto rep = check_yd_algebra(ad);
    INFO(rep.text());
    CHECK(rep.ok());
  }
}

TEST_CASE("adjoint algebra is braided commutative") {
  for (int n : {3, 4}) {
    auto s = line(n);
    auto rep = check_braided_commutative(adjoint_algebra(s.H));
    INFO(rep.text());
    CHECK(rep.ok());
  }
  // R_B(A) with gamma = 1 is not
  auto s = line(3);
  auto A = module_algebra_polynomial(s.H, Scalar(1), s.q * s.q, 3);
  CHECK_FALSE(check_braided_commutative(rb_algebra(*A)).ok());
}

TEST_CASE("lax monoidal structure of R") {
  auto s = line(3);
  auto A = module_algebra_polynomial(s.H, Scalar(1), s.q * s.q, 2);
  HModule v = module_of(*A), h = regular_module(s.H);
  auto rep = check_lax_structure(v, h, v);
  INFO(rep.text());
  CHECK(rep.ok());
  auto rep2 = check_lax_structure(h, v, v);
  INFO(rep2.text());
  CHECK(rep2.ok());
}

TEST_CASE("pairing of the nilpotent line with its dual") {
  for (int n : {2, 3, 4}) {
    auto s = line(n);
    auto p = line_pairing(s);
    auto rep = check_pairing(p);
    INFO(rep.text());
    CHECK(rep.ok());
    Scalar c = (s.q - s.q.inverse()).inverse();
    CHECK(p(Vec::basis(1), Vec::basis(1)) == c);
  }
  // a degenerate value is caught
  auto s = line(3);
  CHECK_FALSE(check_pairing(make_pairing(s.H, s.dual, {{Scalar(0)}})).ok());
}

TEST_CASE("coregular module algebras") {
  auto s = line(3);
  auto p = line_pairing(s);
  auto m = coregular_module(p);
  auto rep = check_module_algebra(*m);
  INFO(rep.text());
  CHECK(rep.ok());
  Scalar c = (s.q - s.q.inverse()).inverse();
  CHECK(m->act(Vec::basis(1), Vec::basis(1)) == Vec::basis(m->alg.unit_index(), c));
  for (std::size_t f = 0; f < m->alg.dim(); ++f) CHECK(m->act(s.H->alg.one(), Vec::basis(f)) == Vec::basis(f));

  auto X = polynomial_hopf(2, 4, {"x1", "x2"});
  auto Dd = polynomial_hopf(2, 4, {"d1", "d2"});
  auto w = make_pairing(X, Dd, {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
  auto wrep = check_pairing(w);
  INFO(wrep.text());
  CHECK(wrep.ok());
  auto wm = coregular_module(w);
  auto rep2 = check_module_algebra(*wm);
  INFO(rep2.text());
  CHECK(rep2.ok());
  CHECK(wm->act(el(X->alg, "x1"), el(wm->alg, "d1")) == wm->alg.one());
  CHECK(wm->act(el(X->alg, "x1"), el(wm->alg, "d2")).is_zero());
  CHECK(wm->act(el(X->alg, "x1"), el(wm->alg, "d1^2")) == Scalar(2) * el(wm->alg, "d1"));
}

TEST_CASE("smash product A # H") {
  auto s = line(3);
  Scalar gamma(1), q2 = s.q * s.q;
  auto A = module_algebra_polynomial(s.H, gamma, q2, 4);
  auto sp = smash_product(*A);
  const auto& B = sp.alg;
  auto rep = check_associative(B);
  INFO(rep.text());
  CHECK(rep.ok());
  std::size_t da = A->alg.dim(), dh = s.H->alg.dim();
  auto emb = [&](std::size_t a, std::size_t h) { return sp.from_tensor(Vec::basis(a * dh + h)); };
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < da; ++b) {
      if (A->alg.overflows(a, b)) continue;
      Vec ab = A->alg.product(a, b);
      Vec expect;
      for (const auto& [i, c] : ab) expect.axpy(c, emb(i, 0));
      Product p = B.mul(emb(a, 0), emb(b, 0));
      if (!p.overflow) CHECK(p.value == expect);
    }
  // (1 # x)(u # 1) = gamma + q^-2 u # x
  std::size_t u = at(A->alg, "u");
  CHECK(B.mul_exact(emb(0, 1), emb(u, 0)) == gamma * B.one() + q2.inverse() * emb(u, 1));
  CHECK(B.power(emb(0, 1), 3).is_zero());
}

TEST_CASE("phi transport of R_B(A)") {
  auto s = line(3);
  auto A = module_algebra_polynomial(s.H, Scalar(1), s.q * s.q, 3);
  auto t = phi_transport(*A);
  std::size_t da = A->alg.dim(), dh = s.H->alg.dim();
  CHECK(compose(t.phi_inv, t.phi) == LinearMap::identity(t.phi.domain()));
  CHECK(compose(t.phi, t.phi_inv) == LinearMap::identity(t.phi_inv.domain()));
  for (std::size_t a = 0; a < da; ++a) CHECK(t.phi.column(a) == Vec::basis(a * dh));
  CHECK(t.module.action == t.closed_form.action);
  CHECK(t.module.coaction == t.closed_form.coaction);
  auto rep = check_yd(t.module);
  INFO(rep.text());
  CHECK(rep.ok());
}

TEST_CASE("braided Drinfeld double of the nilpotent line") {
  for (int n : {2, 3}) {
    auto s = line(n);
    auto d = drinfeld_double(line_pairing(s));
    const auto& D = d.alg();
    CHECK(D.dim() == std::size_t(n * n * n));
    auto rep = check_hopf_laws(D.name(), D, d.hopf->delta, d.hopf->counit, d.hopf->antipode, d.hopf->antipode_inv,
                               flip(D.space(), D.space()));
    INFO(rep.text());
    CHECK(rep.ok());
    auto arep = check_associative(D);
    INFO(arep.text());
    CHECK(arep.ok());
    Vec xs = D.generators()[0], g = D.generators()[1], x = D.generators()[2];
    Scalar q2 = s.q * s.q;
    Scalar c = (s.q - s.q.inverse()).inverse();
    Vec lhs = D.mul_exact(xs, x) - q2 * D.mul_exact(x, xs);
    CHECK(lhs == c * (D.one() - D.power(g, n - 2)));
    CHECK(D.mul_exact(g, x) == q2.inverse() * D.mul_exact(x, g));
    CHECK(D.mul_exact(g, xs) == q2 * D.mul_exact(xs, g));
  }
}

TEST_CASE("u_q(sl2) and the isomorphism with the double") {
  for (int n : {3, 5}) {
    auto s = line(n);
    auto u = uqsl2(n, s.q);
    const auto& U = u->alg;
    CHECK(U.dim() == std::size_t(n * n * n));
    auto rep = check_hopf_laws(U.name(), U, u->delta, u->counit, u->antipode, u->antipode_inv,
                               flip(U.space(), U.space()), 27);
    INFO(rep.text());
    CHECK(rep.ok());
    Vec f = U.generators()[0], k = U.generators()[1], e = U.generators()[2];
    Scalar q2 = s.q * s.q;
    CHECK(U.mul_exact(k, e) == q2 * U.mul_exact(e, k));
    CHECK(U.mul_exact(k, f) == q2.inverse() * U.mul_exact(f, k));
    std::size_t d = U.dim();
    CHECK(u->delta.apply(f) == tensor_vec(U.power(k, n - 1), f, d) + tensor_vec(f, U.one(), d));
    if (n == 3) {
      auto dbl = drinfeld_double(line_pairing(s));
      auto iso = double_iso_uqsl2(dbl, *u);
      INFO(iso.text());
      CHECK(iso.ok());
    }
  }
}

TEST_CASE("wrong generator images are rejected") {
  auto s = line(3);
  auto u = uqsl2(3, s.q);
  auto dbl = drinfeld_double(line_pairing(s));
  const auto& U = u->alg;
  // x* -> e without the k^-1 twist breaks the cross relation
  auto rep = check_algebra_map("bad", dbl.alg(), {U.generators()[2], U.generators()[1], U.generators()[0]}, U);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("Heisenberg double") {
  auto s = line(3);
  auto p = line_pairing(s);
  auto heis = heisenberg_double(p);
  CHECK(heis.full());
  auto arep = check_associative(heis.alg);
  INFO(arep.text());
  CHECK(arep.ok());
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < heis.alg.dim(); ++i)
    for (std::size_t j = 0; j < heis.alg.dim(); ++j) all.emplace_back(i, j);
  auto rep = check_heisenberg_formula(p, heis, all);
  INFO(rep.text());
  CHECK(rep.ok());

  for (int vars : {1, 2}) {
    std::vector<std::string> xn, dn;
    for (int i = 1; i <= vars; ++i) {
      xn.push_back("x" + std::to_string(i));
      dn.push_back("d" + std::to_string(i));
    }
    auto X = polynomial_hopf(vars, 4, xn);
    auto Dd = polynomial_hopf(vars, 4, dn);
    std::vector<std::vector<Scalar>> delta(vars, std::vector<Scalar>(vars, Scalar(0)));
    for (int i = 0; i < vars; ++i) delta[i][i] = Scalar(1);
    auto w = make_pairing(X, Dd, delta);
    auto weyl = heisenberg_double(w);
    const auto& W = weyl.alg;
    auto wrep = check_associative(W);
    INFO(wrep.text());
    CHECK(wrep.ok());
    auto frep = check_heisenberg_formula(w, weyl, generator_pairs(weyl));
    INFO(frep.text());
    CHECK(frep.ok());
    for (int i = 0; i < vars; ++i)
      for (int j = 0; j < vars; ++j) {
        Vec x = W.generators()[vars + i], d = W.generators()[j];
        Vec comm = W.mul_exact(x, d) - W.mul_exact(d, x);
        CHECK(comm == (i == j ? W.one() : Vec()));
      }
  }
}

TEST_CASE("YD modules as modules over the double") {
  auto s = line(3);
  auto d = drinfeld_double(line_pairing(s));
  auto A = module_algebra_polynomial(s.H, Scalar(1), s.q * s.q, 4);
  auto r = rb_algebra(*A);
  auto m = phi_functor(r.mod, d);
  auto rep = check_double_module(m, d);
  INFO(rep.text());
  CHECK(rep.ok());
  auto ad = phi_functor(adjoint_algebra(s.H).mod, d);
  auto rep2 = check_double_module(ad, d);
  INFO(rep2.text());
  CHECK(rep2.ok());
  auto k = phi_functor(trivial_yd(s.H), d);
  CHECK(k.gens[0] == LinearMap::zero(k.space, k.space));

  // (x* x - q^2 x x*) acts as (1 - g^-2)/(q - q^-1), with g^-2 = g for n = 3
  Scalar q2 = s.q * s.q, c = (s.q - s.q.inverse()).inverse();
  std::vector<Vec> lhs, rhs;
  LinearMap xsx = m.word({0, 2}), xxs = m.word({2, 0}), g = m.word({1});
  for (std::size_t i = 0; i < m.space->dim(); ++i) {
    lhs.push_back(xsx.column(i) - q2 * xxs.column(i));
    rhs.push_back(c * (Vec::basis(i) - g.column(i)));
  }
  CHECK(lhs == rhs);
}

TEST_CASE("double construction needs finite components") {
  auto X = polynomial_hopf(1, 3, {"x"});
  auto Dd = polynomial_hopf(1, 3, {"d"});
  CHECK_THROWS(drinfeld_double(make_pairing(X, Dd, {{Scalar(1)}})));
}
