#include <doctest.h>

#include "ydc/braided_hopf.hpp"

using namespace ydc;

namespace {

// Module with basis e_i of weight w_i: g.e_i = q^{2 w_i} e_i.
KModule weight_module(const QTHopf& qt, const Scalar& q, const std::vector<int>& weights, const std::string& name) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < weights.size(); ++i) labels.push_back(name + std::to_string(i));
  auto s = BasedSpace::make(name, labels);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < weights.size(); ++i) cols.push_back(Vec::basis(i, (q * q).pow(weights[i])));
  return kmodule_from_generators(qt, s, {LinearMap(s, s, cols)});
}

// Two-dimensional Sweedler module: g = diag(1, -1), x maps e0 -> e1.
KModule sweedler_module(const QTHopf& qt) {
  auto s = BasedSpace::make("S", {"e0", "e1"});
  LinearMap g(s, s, {Vec::basis(0), Vec::basis(1, Scalar(-1))});
  LinearMap x(s, s, {Vec::basis(1), Vec()});
  return kmodule_from_generators(qt, s, {g, x});
}

void check_hexagons(const QTHopf& qt, const KModule& u, const KModule& v, const KModule& w) {
  std::size_t du = u.space->dim(), dv = v.space->dim(), dw = w.space->dim();
  KModule uv = tensor_kmodule(qt, u, v), vw = tensor_kmodule(qt, v, w);
  LinearMap p_uv_w = braiding(qt, uv, w);
  LinearMap p_u_vw = braiding(qt, u, vw);
  LinearMap p_uw = braiding(qt, u, w), p_vw = braiding(qt, v, w), p_uv = braiding(qt, u, v);
  for (std::size_t i = 0; i < du * dv * dw; ++i) {
    Vec e = Vec::basis(i);
    Vec lhs = p_uv_w.apply(e);
    Vec rhs = apply_at(p_uw, apply_at(p_vw, e, du, 1), 1, dv);
    CHECK(lhs == rhs);
    Vec lhs2 = p_u_vw.apply(e);
    Vec rhs2 = apply_at(p_uw, apply_at(p_uv, e, 1, dw), dv, 1);
    CHECK(lhs2 == rhs2);
  }
}

}  // namespace

TEST_CASE("cyclic R-matrices are quasitriangular") {
  for (int n : {3, 5}) {
    Scalar q = q_root(CycField::get(n), n);
    auto qt = rmatrix_cyclic(n, q);
    auto rep = check_qt(*qt);
    INFO(rep.text());
    CHECK(rep.ok());
    // Closed form of the inverse.
    Vec rinv;
    std::size_t d = qt->K.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rinv.add(i * d + j, Scalar::rational(1, n) * (q * q).pow(static_cast<long>(i) * j));
    CHECK(qt->R_inv == rinv);
  }
}

TEST_CASE("Sweedler R-matrices are quasitriangular") {
  for (int xi : {0, 1, 2}) {
    auto qt = rmatrix_sweedler(Scalar(xi));
    auto rep = check_qt(*qt);
    INFO(rep.text());
    CHECK(rep.ok());
  }
}

TEST_CASE("diagonal braiding matches the weight formula") {
  int n = 5;
  Scalar q = q_root(CycField::get(n), n);
  auto qt = rmatrix_cyclic(n, q);
  std::vector<int> wv{0, -1, 2}, ww{1, -1};
  KModule v = weight_module(*qt, q, wv, "v"), w = weight_module(*qt, q, ww, "w");
  LinearMap psi = braiding(*qt, v, w);
  for (std::size_t i = 0; i < wv.size(); ++i)
    for (std::size_t j = 0; j < ww.size(); ++j)
      CHECK(psi.column(i * ww.size() + j) == Vec::basis(j * wv.size() + i, (q * q).pow(wv[i] * ww[j])));
}

TEST_CASE("braiding inverse, naturality and hexagons") {
  int n = 3;
  Scalar q = q_root(CycField::get(n), n);
  auto qt = rmatrix_cyclic(n, q);
  KModule a = weight_module(*qt, q, {0, 1}, "a"), b = weight_module(*qt, q, {-1, 2}, "b"),
          c = weight_module(*qt, q, {1}, "c");
  LinearMap psi = braiding(*qt, a, b);
  LinearMap inv = braiding_inv(*qt, a, b);
  CHECK(compose(inv, psi) == LinearMap::identity(tensor(a.space, b.space)));
  CHECK(compose(psi, inv) == LinearMap::identity(tensor(b.space, a.space)));
  check_hexagons(*qt, a, b, c);

  // Naturality for a weight-preserving map f : a -> a2.
  KModule a2 = weight_module(*qt, q, {1, 0, 1}, "a2");
  Vec f1 = Vec::basis(0);
  f1.add(2, Scalar(1));
  LinearMap f(a.space, a2.space, {Vec::basis(1), f1});
  REQUIRE(is_kmodule_map(a, a2, f));
  LinearMap idb = LinearMap::identity(b.space);
  CHECK(compose(braiding(*qt, a2, b), tensor_map(f, idb)) == compose(tensor_map(idb, f), psi));

  auto sw = rmatrix_sweedler(Scalar(1));
  KModule s = sweedler_module(*sw);
  CHECK(check_kmodule(*sw, s, "S").ok());
  KModule triv = trivial_kmodule(*sw, BasedSpace::make("t", {"t0"}));
  check_hexagons(*sw, s, s, triv);
  check_hexagons(*sw, s, triv, s);
  LinearMap ps = braiding(*sw, s, s);
  CHECK(compose(braiding_inv(*sw, s, s), ps) == LinearMap::identity(tensor(s.space, s.space)));
  // The braiding is a K-module map.
  KModule ss = tensor_kmodule(*sw, s, s);
  CHECK(is_kmodule_map(ss, ss, ps));
}

TEST_CASE("trivial K gives the flip") {
  auto qt = trivial_qt();
  auto s = BasedSpace::make("s", {"a", "b"});
  KModule m = trivial_kmodule(*qt, s);
  CHECK(braiding(*qt, m, m) == flip(s, s));
  CHECK(check_qt(*qt).ok());
}

TEST_CASE("K braiding: inverse, naturality and hexagons") {
  Scalar q = q_root(CycField::get(3), 3);
  auto qt = rmatrix_cyclic(3, q);
  auto H = nilpotent_line_hopf(qt, 3, q);
  auto A = module_algebra_polynomial(H, Scalar(1), q * q, 3);
  auto rep = check_braiding(*qt, H->kmod, A->kmod, H->kmod);
  INFO(rep.text());
  CHECK(rep.ok());
  auto sq = rmatrix_sweedler(Scalar(2));
  auto S = module_algebra_polynomial(trivial_hopf(sq), Scalar(1), Scalar(-1), 3);
  auto srep = check_braiding(*sq, S->kmod, S->kmod, S->kmod);
  INFO(srep.text());
  CHECK(srep.ok());
}
