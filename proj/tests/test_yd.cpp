#include <doctest.h>

#include "ydc/yd.hpp"

using namespace ydc;

namespace {

// H with coaction Delta and braided adjoint action h1 v' S(h2').
YDModule adjoint_yd(const HopfPtr& H) {
  const auto& A = H->alg;
  std::size_t d = A.dim();
  LinearMap psi = H->psi();
  YDModule m;
  m.name = "ad";
  m.H = H;
  m.kmod = H->kmod;
  m.coaction = H->delta;
  m.action = LinearMap::from_columns(tensor(A.space(), A.space()), A.space(), [&](std::size_t i) {
    Vec x = apply_at(H->delta, Vec::basis(i), 1, d);
    x = apply_at(psi, x, d, 1);
    x = apply_at(H->antipode, x, d * d, 1);
    x = A.mul_at(x, 1, d).value;
    return A.mul_at(x, 1, 1).value;
  });
  return m;
}

HopfPtr line(int n, Scalar* q_out = nullptr) {
  Scalar q = q_root(n % 2 ? CycField::get(n) : CycField::get(2 * n), n);
  if (q_out) *q_out = q;
  return nilpotent_line_hopf(rmatrix_cyclic(n, q), n, q);
}

}  // namespace

TEST_CASE("trivial YD module") {
  auto H = line(3);
  auto k = trivial_yd(H);
  auto rep = check_yd(k);
  INFO(rep.text());
  CHECK(rep.ok());
}

TEST_CASE("braided adjoint module is Yetter-Drinfeld") {
  for (int n : {2, 3, 4}) {
    auto H = line(n);
    auto ad = adjoint_yd(H);
    auto rep = check_yd(ad);
    INFO(rep.text());
    CHECK(rep.ok());
  }
}

TEST_CASE("YD compatibility failure is reported") {
  auto H = line(3);
  auto ad = adjoint_yd(H);
  // regular coaction with the trivial action is not YD
  ad.action = LinearMap::from_columns(ad.action.domain(), ad.space(), [&](std::size_t i) {
    return H->counit.column(i / 3).get(0) * Vec::basis(i % 3);
  });
  CHECK_FALSE(check_yd(ad).ok());
}

TEST_CASE("YD braiding: inverse, hexagons, linearity") {
  for (int n : {2, 3}) {
    auto H = line(n);
    auto ad = adjoint_yd(H);
    auto k = trivial_yd(H);
    auto rep = check_yd_braiding(ad, ad, ad);
    INFO(rep.text());
    CHECK(rep.ok());
    auto rep2 = check_yd_braiding(k, ad, ad);
    INFO(rep2.text());
    CHECK(rep2.ok());
    auto t = yd_tensor(ad, k);
    auto rep3 = check_yd(t);
    INFO(rep3.text());
    CHECK(rep3.ok());
    CHECK(yd_braiding(ad, k) == flip(ad.space(), k.space()));
  }
}

TEST_CASE("tensor product of YD modules") {
  auto H = line(3);
  auto ad = adjoint_yd(H);
  auto rep = check_yd(yd_tensor(ad, ad));
  INFO(rep.text());
  CHECK(rep.ok());
}

TEST_CASE("bosonization gives the Taft algebra") {
  for (int n : {2, 3, 4}) {
    Scalar q;
    auto H = line(n, &q);
    auto b = bosonize_yd(trivial_yd(H));
    const auto& B = b.hopf->alg;
    CHECK(B.dim() == std::size_t(n * n));
    auto rep = check_hopf_laws(b.hopf->name, B, b.hopf->delta, b.hopf->counit, b.hopf->antipode,
                               b.hopf->antipode_inv, flip(B.space(), B.space()));
    INFO(rep.text());
    CHECK(rep.ok());
    std::size_t dk = n;
    Vec x = Vec::basis(1 * dk + 0), g = Vec::basis(0 * dk + 1);
    CHECK(B.mul_exact(g, x) == (q * q).inverse() * B.mul_exact(x, g));
    CHECK(B.power(x, n).is_zero());
    CHECK(B.power(g, n) == B.one());
    // Delta(x) = x (x) 1 + g^{-1} (x) x in Taft form
    std::size_t d = B.dim();
    Vec dx = b.hopf->delta.apply(x);
    Vec expect = tensor_vec(x, B.one(), d) + tensor_vec(B.power(g, n - 1), x, d);
    CHECK(dx == expect);
  }
}

TEST_CASE("bosonized module is an ordinary YD module") {
  for (int n : {2, 3}) {
    auto H = line(n);
    auto b = bosonize_yd(adjoint_yd(H));
    auto rep = check_yd(b.module);
    INFO(rep.text());
    CHECK(rep.ok());
  }
}
