#include <doctest.h>

#include "ydc/braided_hopf.hpp"

using namespace ydc;

namespace {

struct Setup {
  Scalar q;
  QTPtr qt;
  HopfPtr H;
};

Setup cyclic_setup(int n) {
  Scalar q = q_root(CycField::get(n), n);
  auto qt = rmatrix_cyclic(n, q);
  return {q, qt, nilpotent_line_hopf(qt, n, q)};
}

}  // namespace

TEST_CASE("nilpotent line is a braided Hopf algebra") {
  for (int n : {3, 5}) {
    auto s = cyclic_setup(n);
    auto rep = check_braided_hopf(*s.H);
    INFO(rep.text());
    CHECK(rep.ok());
    auto dual = nilpotent_line_hopf(s.qt, n, s.q, 1, "x*");
    auto rep2 = check_braided_hopf(*dual);
    INFO(rep2.text());
    CHECK(rep2.ok());
  }
}

TEST_CASE("closed-form coproduct equals the braided multiplicative extension") {
  for (int n : {3, 4, 5}) {
    Scalar q = q_root(n % 2 ? CycField::get(n) : CycField::get(2 * n), n);
    auto qt = rmatrix_cyclic(n, q);
    for (int w : {-1, 1, 2}) {
      auto closed = nilpotent_line_hopf(qt, n, q, w);
      std::size_t x = 1, d = n;
      HopfGeneratorData data;
      Vec dx;
      dx.add(x * d, 1);
      dx.add(x, 1);
      data.delta = {dx};
      data.counit = {Scalar(0)};
      data.antipode = {Vec::basis(x, Scalar(-1))};
      auto generic = make_braided_hopf("generic", qt, closed->alg, closed->kmod, data);
      CHECK(generic->delta == closed->delta);
      CHECK(generic->antipode == closed->antipode);
      CHECK(generic->counit == closed->counit);
    }
  }
}

TEST_CASE("truncated polynomial Hopf algebra") {
  auto h = polynomial_hopf(2, 4, {"x1", "x2"});
  auto rep = check_braided_hopf(*h);
  INFO(rep.text());
  CHECK(rep.ok());
  auto x2 = *h->alg.space()->find("x1^2");
  auto x1 = *h->alg.space()->find("x1");
  // Delta(x1^2) = x1^2 (x) 1 + 2 x1 (x) x1 + 1 (x) x1^2
  CHECK(h->delta.column(x2).get(x1 * h->alg.dim() + x1) == Scalar(2));
}

TEST_CASE("module algebra k[u] over the nilpotent line") {
  for (int n : {3, 5}) {
    auto s = cyclic_setup(n);
    for (long gamma : {0, 1, 2}) {
      int D = 2 * n + 2;
      auto A = module_algebra_polynomial(s.H, Scalar(gamma), s.q * s.q, D);
      auto rep = check_module_algebra(*A);
      INFO(rep.text());
      CHECK(rep.ok());
      // x.u^j = gamma [j]_{q^-2} u^{j-1}, and g.u^j = q^{2j} u^j
      Scalar qm2 = (s.q * s.q).inverse();
      Vec x = Vec::basis(1);
      for (int j = 1; j <= D; ++j) {
        std::size_t uj = *A->alg.space()->find(j == 1 ? "u" : "u^" + std::to_string(j));
        std::size_t uj1 = j == 1 ? A->alg.unit_index() : *A->alg.space()->find(j == 2 ? "u" : "u^" + std::to_string(j - 1));
        CHECK(A->act(x, Vec::basis(uj)) == Vec::basis(uj1, Scalar(gamma) * q_integer(j, qm2)));
        CHECK(A->kmod.rho[1].column(uj) == Vec::basis(uj, (s.q * s.q).pow(j)));
      }
    }
  }
}

TEST_CASE("Sweedler module algebra k[u]") {
  for (long xi : {0, 1, 2})
    for (long gamma : {0, 1, 2}) {
      auto qt = rmatrix_sweedler(Scalar(xi));
      auto H = trivial_hopf(qt);
      auto A = module_algebra_polynomial(H, Scalar(gamma), Scalar(-1), 8);
      auto rep = check_module_algebra(*A);
      INFO(rep.text());
      CHECK(rep.ok());
      std::size_t kx = *qt->K.space()->find("x");
      for (int i = 1; i <= 8; ++i) {
        std::size_t ui = *A->alg.space()->find(i == 1 ? "u" : "u^" + std::to_string(i));
        std::size_t ui1 = i == 1 ? A->alg.unit_index() : *A->alg.space()->find(i == 2 ? "u" : "u^" + std::to_string(i - 1));
        Vec expect = i % 2 ? Vec::basis(ui1, Scalar(gamma)) : Vec();
        CHECK(A->kmod.rho[kx].column(ui) == expect);
      }
    }
}

TEST_CASE("an action violating g^n = 1 is reported") {
  auto s = cyclic_setup(3);
  auto A = module_algebra_polynomial(s.H, Scalar(1), Scalar(2), 4);
  CHECK_FALSE(check_module_algebra(*A).ok());
}
