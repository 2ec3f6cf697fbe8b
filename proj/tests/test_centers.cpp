#include <doctest.h>

#include "ydc/centers.hpp"

using namespace ydc;

namespace {

struct Six {
  int n;
  Scalar q, gamma;
  QTPtr qt;
  HopfPtr H;
  ModAlgPtr A;
};

Six six(int n, long gamma, int D) {
  Six s;
  s.n = n;
  s.q = q_root(CycField::get(n), n);
  s.gamma = Scalar(gamma);
  s.qt = rmatrix_cyclic(n, s.q);
  s.H = nilpotent_line_hopf(s.qt, n, s.q);
  s.A = module_algebra_polynomial(s.H, s.gamma, s.q * s.q, D);
  return s;
}

// y^i u^j in R_B(A), indexed as h * dim A + a.
Vec yu(const Six& s, int i, int j, const Scalar& c = Scalar(1)) {
  return Vec::basis(static_cast<std::size_t>(i) * s.A->alg.dim() + static_cast<std::size_t>(j), c);
}

// sum_k gamma^-k [l+k-1 choose k]_{q^2} q^{-2(k l + C(k+1,2))} (1-q^2)^k y^k u^{k+l}
Vec z_closed(const Six& s, int l) {
  Scalar q2 = s.q * s.q;
  Vec z;
  for (int k = 0; k < s.n; ++k) {
    Scalar c = s.gamma.inverse().pow(k) * q_binomial(l + k - 1, k, q2) * q2.pow(-(k * l + k * (k + 1) / 2)) *
               (Scalar(1) - q2).pow(k);
    z += yu(s, k, k + l, c);
  }
  return z;
}

}  // namespace

TEST_CASE("B-center for gamma = 0 is H (x) k[u^n]") {
  for (int n : {3, 5}) {
    int D = 2 * n + 2;
    auto s = six(n, 0, D);
    auto c = b_center(*s.A, {"y"});
    INFO(c.report.text());
    CHECK(c.report.ok());
    CHECK(c.safe_degree == D - 1);
    std::vector<Vec> expect;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k * n <= c.safe_degree; ++k) expect.push_back(yu(s, i, k * n));
    CHECK(c.basis == rref(expect));
    CHECK(c.commutative);
    CHECK(c.generators.size() == 2);
  }
}

TEST_CASE("B-center for gamma != 0 is k[z]") {
  for (long gamma : {1, 2}) {
    int n = 3, D = 2 * n + 2;
    auto s = six(n, gamma, D);
    auto c = b_center(*s.A, {"y"});
    INFO(c.report.text());
    CHECK(c.report.ok());
    Vec z = z_closed(s, 1);
    // the closed form of z at l = 1
    Scalar q2 = s.q * s.q;
    Vec z2;
    for (int i = 0; i < n; ++i)
      z2 += yu(s, i, i + 1, s.gamma.inverse().pow(i) * q2.pow(-(i * (i + 1) / 2 + i)) * (Scalar(1) - q2).pow(i));
    CHECK(z == z2);
    const auto& R = c.ambient;
    // z_l whose terms fit in the window; vanishing q-binomials shorten some
    std::vector<Vec> powers{R.one()};
    for (int l = 1; l <= c.safe_degree; ++l)
      if (R.degree(z_closed(s, l)) <= c.safe_degree) powers.push_back(z_closed(s, l));
    CHECK(c.basis == rref(powers));
    REQUIRE(c.generators.size() == 1);
    CHECK(c.generators[0] == z);
    for (int l = 2; R.degree(z_closed(s, l)) <= D; ++l) {
      Product p = R.mul(R.power(z, l - 1), z);
      REQUIRE_FALSE(p.overflow);
      CHECK(p.value == z_closed(s, l));
    }
  }
}

TEST_CASE("recurrence oracle agrees with the generic solver") {
  for (int n : {3, 5})
    for (long gamma : {0, 1, 2}) {
      if (n == 5 && gamma == 2) continue;
      int D = 2 * n + 2;
      auto s = six(n, gamma, D);
      auto c = b_center(*s.A);
      auto sol = recurrence_oracle(n, s.q, s.gamma, c.safe_degree);
      CHECK(recurrence_in_ambient(sol, s.H->alg, s.A->alg) == c.basis);
    }
  // gamma = 0: lambda_{i,j} is free exactly when n divides j
  auto s = six(3, 0, 8);
  auto sol = recurrence_oracle(3, s.q, Scalar(0), 7);
  CHECK(sol.basis.size() == 9);
  for (const auto& v : sol.basis) CHECK((v.lead() % 8) % 3 == 0);
}

TEST_CASE("YD structure of Z_B(A) for gamma != 0") {
  int n = 3;
  auto s = six(n, 1, 2 * n + 2);
  auto c = b_center(*s.A, {"y"});
  REQUIRE(c.module.has_value());
  Scalar q2 = s.q * s.q;
  Vec z = z_closed(s, 1);
  const auto& R = c.ambient;
  std::size_t dr = R.dim();
  CHECK(c.ambient_kmod.rho[1].apply(z) == q2 * z);
  YDAlgebra r = rb_algebra(*s.A, {"y"});
  CHECK(r.mod.action.apply(tensor_vec(Vec::basis(1), z, dr)) == s.gamma * R.one());
  Vec expect;
  for (int i = 0; i < n; ++i) {
    Scalar coef = s.gamma.inverse().pow(i) * (Scalar(1) - q2).pow(i) * q2.pow(-(i * (i + 1) / 2 + i));
    expect += coef * tensor_vec(Vec::basis(i), R.power(z, i + 1), dr);
  }
  CHECK(r.mod.coaction.apply(z) == expect);
}

TEST_CASE("center through the smash product") {
  for (long gamma : {0, 1}) {
    auto s = six(3, gamma, 6);
    auto c = b_center(*s.A);
    auto rep = cross_check_smash(*s.A, c);
    INFO(rep.text());
    CHECK(rep.ok());
  }
}

TEST_CASE("Z_B(k) is H") {
  for (int n : {3, 4}) {
    Scalar q = q_root(n % 2 ? CycField::get(n) : CycField::get(2 * n), n);
    auto H = nilpotent_line_hopf(rmatrix_cyclic(n, q), n, q);
    auto c = b_center(*unit_module_algebra(H));
    INFO(c.report.text());
    CHECK(c.report.ok());
    CHECK(c.dim() == H->alg.dim());
    CHECK(c.safe_degree == -1);
  }
}

TEST_CASE("Sweedler: center is k[u^2] for every xi, gamma") {
  std::optional<CenterResult> first;
  for (long xi : {0, 1, 2})
    for (long gamma : {0, 1, 2}) {
      auto qt = rmatrix_sweedler(Scalar(xi));
      auto H = trivial_hopf(qt);
      auto A = module_algebra_polynomial(H, Scalar(gamma), Scalar(-1), 8);
      auto c = b_center(*A);
      INFO(c.report.text());
      CHECK(c.report.ok());
      std::vector<Vec> expect;
      for (int k = 0; 2 * k <= c.safe_degree; ++k) expect.push_back(Vec::basis(*c.ambient.space()->find(k ? "u^" + std::to_string(2 * k) : "1")));
      CHECK(c.basis == rref(expect));
      std::size_t g = *qt->K.space()->find("g"), x = *qt->K.space()->find("x");
      Vec u2 = Vec::basis(*c.ambient.space()->find("u^2"));
      CHECK(c.ambient_kmod.rho[g].apply(u2) == u2);
      CHECK(c.ambient_kmod.rho[x].apply(u2).is_zero());
      // the same via the left center of A in K-mod
      auto l = left_center(A->alg, *qt, A->kmod);
      CHECK(l.basis == rref(expect));
      if (!first)
        first = c;
      else
        CHECK(compare_centers(*first, c).outcome == CenterComparison::IsomorphicAsGraded);
    }
}

TEST_CASE("Weyl algebra: centralizer of k[d] is k[d]") {
  for (int vars : {1, 2}) {
    std::vector<std::string> xn, dn;
    for (int i = 1; i <= vars; ++i) {
      xn.push_back("x" + std::to_string(i));
      dn.push_back("d" + std::to_string(i));
    }
    std::vector<std::vector<Scalar>> delta(vars, std::vector<Scalar>(vars, Scalar(0)));
    for (int i = 0; i < vars; ++i) delta[i][i] = Scalar(1);
    auto p = make_pairing(polynomial_hopf(vars, 8, xn), polynomial_hopf(vars, 8, dn), delta);
    auto heis = heisenberg_double(p);
    const auto& W = heis.alg;
    std::vector<Vec> S(W.generators().begin(), W.generators().begin() + vars);
    auto c = centralizer(W, S, braid_flip(W.dim()), Side::Left);
    CHECK(c.safe_degree == 7);
    std::vector<Vec> expect;
    std::size_t dh = heis.dim_h, hu = p.H->alg.unit_index();
    for (std::size_t a = 0; a < heis.dim_a; ++a)
      if (p.Hdual->alg.degree(a) <= 7) expect.push_back(Vec::basis(heis.position[a * dh + hu]));
    CHECK(c.basis == rref(expect));
  }
}

TEST_CASE("centralizer edge cases") {
  auto s = six(3, 1, 4);
  auto r = rb_algebra(*s.A);
  auto psi = yd_braiding(r.mod, r.mod);
  auto all = centralizer(r.alg, {r.alg.one()}, psi, Side::Left);
  CHECK(all.dim() == r.alg.dim());
  CHECK_THROWS(centralizer(r.alg, {}, psi, Side::Left));
  CHECK_THROWS(centralizer(r.alg, {r.alg.one()}, LinearMap::identity(r.alg.space()), Side::Left));
  // a commutative algebra under the flip is its own center
  auto P = polynomial_hopf(2, 4, {"a", "b"});
  auto c = centralizer(P->alg, {P->alg.generators()[0], P->alg.generators()[1]}, braid_flip(P->alg.dim()), Side::Right);
  CHECK(c.dim() == filtration_part(c, 3).size());
  CHECK(c.dim() == 10);
}

TEST_CASE("centers are stable under enlarging the truncation") {
  for (long gamma : {0, 1}) {
    auto small = b_center(*six(3, gamma, 8).A);
    auto big = b_center(*six(3, gamma, 10).A);
    auto rep = check_stability(small, big);
    INFO(rep.text());
    CHECK(rep.ok());
  }
}

TEST_CASE("compare_centers") {
  auto c0 = b_center(*six(3, 0, 8).A);
  auto c1 = b_center(*six(3, 1, 8).A);
  auto c2 = b_center(*six(3, 2, 8).A);
  auto r = compare_centers(c0, c1);
  CHECK(r.outcome == CenterComparison::Distinguishable);
  CHECK(r.signatures["first"][0]["dim"] == 3);
  CHECK(r.signatures["second"][0]["dim"] == 1);
  CHECK(compare_centers(c1, c1).outcome == CenterComparison::IsomorphicAsGraded);
  CHECK(compare_centers(c1, c2).outcome == CenterComparison::IsomorphicAsGraded);
}

TEST_CASE("center JSON") {
  auto c = b_center(*six(3, 1, 6).A, {"y"});
  auto j = c.to_json();
  CHECK(j["dim"] == c.dim());
  CHECK(j["generators"].size() == 1);
  CHECK(j["generators"][0]["terms"][0][0] == "u");
}

TEST_CASE("u_q(sl2) acts on the center through the double") {
  int n = 3;
  for (long gamma : {1, 2}) {
    auto s = six(n, gamma, 2 * n + 2);
    auto c = b_center(*s.A, {"y"});
    REQUIRE(c.module.has_value());
    auto dual = nilpotent_line_hopf(s.qt, n, s.q, 1, "x*");
    auto d = drinfeld_double(make_pairing(s.H, dual, {{(s.q - s.q.inverse()).inverse()}}));
    auto m = phi_functor(*c.module, d);
    auto rep = check_double_module(m, d);
    INFO(rep.text());
    CHECK(rep.ok());
    const auto& R = c.ambient;
    auto co = [&](const Vec& v) {
      auto x = coordinates(c.basis, v);
      REQUIRE(x.has_value());
      Vec r;
      for (std::size_t i = 0; i < x->size(); ++i) r.add(i, (*x)[i]);
      return r;
    };
    Vec z = z_closed(s, 1), zc = co(z), z2c = co(R.power(z, 2)), one = co(R.one());
    // e = pi(g x*), f = pi(x), k = pi(g)
    CHECK(m.word({1, 0}).apply(zc) == -s.q * s.gamma.inverse() * z2c);
    CHECK(m.word({2}).apply(zc) == s.gamma * one);
    CHECK(m.word({1}).apply(zc) == s.q * s.q * zc);
  }
}
