#include <doctest.h>

#include "ydc/linspace.hpp"

using namespace ydc;

namespace {

SpacePtr space(const std::string& name, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(name + std::to_string(i));
  return BasedSpace::make(name, labels);
}

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  std::size_t i = 0;
  for (long x : xs) v.add(i++, Scalar(x));
  return v;
}

}  // namespace

TEST_CASE("tensor spaces flatten lexicographically") {
  auto v = space("v", 2), w = space("w", 3);
  auto vw = tensor(v, w);
  CHECK(vw->dim() == 6);
  CHECK(vw->label(4) == "v1⊗w1");
  for (std::size_t i = 0; i < vw->dim(); ++i) CHECK(vw->find(vw->label(i)) == i);
  CHECK_FALSE(vw->find("nope").has_value());
}

TEST_CASE("vectors never store zeros") {
  Vec a = Vec::basis(3, Scalar(2));
  a.add(3, Scalar(-2));
  CHECK(a.is_zero());
  CHECK(a.nnz() == 0);
}

TEST_CASE("apply_at matches the materialised tensor map") {
  auto u = space("u", 2), v = space("v", 3), w = space("w", 2);
  LinearMap f(v, v, {vec({1, 2}), vec({0, 0, 5}), vec({-1, 0, 1})});
  LinearMap full = tensor_map(tensor_map(LinearMap::identity(u), f), LinearMap::identity(w));
  for (std::size_t i = 0; i < full.domain()->dim(); ++i)
    CHECK(apply_at(f, Vec::basis(i), u->dim(), w->dim()) == full.column(i));
}

TEST_CASE("flip is an involution") {
  auto v = space("v", 2), w = space("w", 3);
  CHECK(compose(flip(w, v), flip(v, w)) == LinearMap::identity(tensor(v, w)));
}

TEST_CASE("kernel and rank") {
  auto d = space("d", 4), c = space("c", 2);
  // rows: x0 + x1 = 0, x2 - x3 = 0
  LinearMap f(d, c, {vec({1}), vec({1}), vec({0, 1}), vec({0, -1})});
  auto k = kernel(f);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(f.apply(v).is_zero());
  CHECK(rank(f) + k.size() == 4);
}

TEST_CASE("rref is canonical") {
  std::vector<Vec> a{vec({1, 2, 3}), vec({0, 1, 1})};
  std::vector<Vec> b{vec({1, 3, 4}), vec({2, 5, 7})};
  CHECK(rref(a) == rref(b));
  auto r = rref(a);
  CHECK(r[0].get(0) == Scalar(1));
  CHECK(r[1].get(0).is_zero());
}

TEST_CASE("intersection of subspaces") {
  std::vector<Vec> u{vec({1, 0, 0}), vec({0, 1, 0})};
  std::vector<Vec> w{vec({0, 1, 0}), vec({0, 0, 1})};
  auto i = intersect({u, w});
  REQUIRE(i.size() == 1);
  CHECK(i[0] == vec({0, 1}));
}

TEST_CASE("solve and inverse over a cyclotomic field") {
  Scalar q = Scalar::zeta(CycField::get(5));
  auto s = space("s", 2);
  Vec c0, c1;
  c0.add(0, q);
  c0.add(1, Scalar(1));
  c1.add(0, Scalar(1));
  c1.add(1, q * q);
  LinearMap f(s, s, {c0, c1});
  LinearMap g = inverse(f);
  CHECK(compose(g, f) == LinearMap::identity(s));
  CHECK(compose(f, g) == LinearMap::identity(s));
  Vec b = vec({1, 1});
  auto x = solve(f, b);
  REQUIRE(x);
  CHECK(f.apply(*x) == b);
  LinearMap sing(s, s, {vec({1, 1}), vec({1, 1})});
  CHECK_THROWS(inverse(sing));
  CHECK_FALSE(solve(sing, vec({1, 0})).has_value());
}

TEST_CASE("coordinates in an rref basis") {
  auto basis = rref({vec({1, 1, 0}), vec({0, 1, 1})});
  Vec v = vec({2, 5, 3});
  auto c = coordinates(basis, v);
  REQUIRE(c);
  Vec back;
  for (std::size_t i = 0; i < basis.size(); ++i) back.axpy((*c)[i], basis[i]);
  CHECK(back == v);
  CHECK_FALSE(in_span(basis, vec({1, 0, 0})));
}
