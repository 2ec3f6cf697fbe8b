#include <doctest.h>

#include "ydc/algebra.hpp"

using namespace ydc;

namespace {

Presentation quantum_plane(const Scalar& q, int n) {
  Presentation p;
  p.name = "plane";
  p.generators = {"x", "y"};
  p.powers = {{PowerKind::Nilpotent, n}, {PowerKind::Nilpotent, n}};
  p.swaps = {{1, 0, {{q, {0, 1}}}}};  // y x = q x y
  return p;
}

std::size_t idx(const BasedAlgebra& a, const std::string& l) {
  auto i = a.space()->find(l);
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace

TEST_CASE("quantum plane structure constants match the closed form") {
  Scalar q = Scalar::zeta(CycField::get(5));
  int n = 4;
  BasedAlgebra a = build(quantum_plane(q, n));
  CHECK(a.dim() == 16);
  CHECK(check_associative(a).ok());
  const auto& e = a.exponents();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      int x = e[i][0] + e[j][0], y = e[i][1] + e[j][1];
      Vec expect;
      if (x < n && y < n) {
        std::size_t k = idx(a, monomial_label({"x", "y"}, {x, y}));
        expect.add(k, q.pow(static_cast<long>(e[i][1]) * e[j][0]));
      }
      CHECK(a.product(i, j) == expect);
      CHECK_FALSE(a.overflows(i, j));
    }
}

TEST_CASE("Sweedler algebra") {
  Presentation p;
  p.name = "T";
  p.generators = {"g", "x"};
  p.powers = {{PowerKind::Cyclic, 2}, {PowerKind::Nilpotent, 2}};
  p.swaps = {{1, 0, {{Scalar(-1), {0, 1}}}}};
  BasedAlgebra a = build(p);
  CHECK(a.dim() == 4);
  CHECK(check_associative(a).ok());
  std::size_t g = idx(a, "g"), x = idx(a, "x"), gx = idx(a, "g x");
  CHECK(a.product(x, g) == Vec::basis(gx, Scalar(-1)));
  CHECK(a.product(g, g) == a.one());
  CHECK(a.product(x, x).is_zero());
}

TEST_CASE("truncated Weyl algebra flags overflow instead of dropping terms") {
  Presentation p;
  p.name = "W";
  p.generators = {"x", "d"};
  p.powers = {{PowerKind::Free, 0}, {PowerKind::Free, 0}};
  p.swaps = {{1, 0, {{Scalar(1), {0, 1}}, {Scalar(1), {}}}}};  // d x = x d + 1
  p.truncation = 4;
  BasedAlgebra a = build(p);
  CHECK(check_associative(a).ok());
  std::size_t x = idx(a, "x"), d = idx(a, "d"), xd = idx(a, "x d");
  Vec expect = Vec::basis(xd);
  expect.add(a.unit_index(), Scalar(1));
  CHECK(a.product(d, x) == expect);
  std::size_t d2 = idx(a, "d^2"), x3 = idx(a, "x^3");
  // d^2 x^3 has top term x^3 d^2 of degree 5.
  CHECK(a.overflows(d2, x3));
  // The lower-order terms are still reported.
  CHECK_FALSE(a.product(d2, x3).is_zero());
  CHECK_FALSE(a.overflows(d, x3));
  BasedAlgebra t = truncate(a, 2);
  CHECK(t.dim() == 6);
  CHECK(t.overflows(idx(t, "d"), idx(t, "x^2")));
}

TEST_CASE("group algebra of Z_n") {
  BasedAlgebra k = group_algebra({5});
  CHECK(k.dim() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(k.product(i, j) == Vec::basis((i + j) % 5));
}

TEST_CASE("malformed presentations are rejected") {
  Presentation p;
  p.name = "bad";
  p.generators = {"a", "b"};
  p.powers = {{PowerKind::Nilpotent, 2}, {PowerKind::Nilpotent, 2}};
  p.swaps = {{1, 0, {{Scalar(1), {1, 0}}}}};  // b a -> b a does not decrease
  CHECK_THROWS_AS(build(p), std::invalid_argument);
  p.swaps = {{0, 1, {}}};
  CHECK_THROWS_AS(build(p), std::invalid_argument);
  p.swaps.clear();
  p.powers[0] = {PowerKind::Free, 0};
  CHECK_THROWS_AS(build(p), std::invalid_argument);  // free without truncation
}

TEST_CASE("normal form of words") {
  Scalar q = Scalar::zeta(CycField::get(5));
  auto nf = normal_form(quantum_plane(q, 3), {1, 1, 0});  // y y x = q^2 x y^2
  REQUIRE(nf.size() == 1);
  CHECK(nf.begin()->first == std::vector<int>{1, 2});
  CHECK(nf.begin()->second == q * q);
}
