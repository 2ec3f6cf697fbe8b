#include <doctest.h>

#include "ydc/scalar.hpp"

using namespace ydc;

namespace {

std::vector<Scalar> samples(const CycField& f) {
  Scalar z = Scalar::zeta(f);
  return {Scalar(0), Scalar(1), Scalar(-3), Scalar::rational(2, 7), z, z * z - Scalar(1),
          Scalar::rational(1, 3) * z.pow(3) + z + Scalar(5), Scalar(1) - z.pow(5)};
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  auto phi6 = cyclotomic_polynomial(6);
  REQUIRE(phi6.size() == 3);
  CHECK(phi6[0] == 1);
  CHECK(phi6[1] == -1);
  CHECK(phi6[2] == 1);
  auto phi12 = cyclotomic_polynomial(12);
  std::vector<mpq_class> expect{1, 0, -1, 0, 1};
  CHECK(phi12 == expect);
  // Phi_105 is the first with a coefficient of absolute value 2.
  auto phi105 = cyclotomic_polynomial(105);
  bool has_two = false;
  for (const auto& c : phi105) has_two = has_two || c == -2;
  CHECK(has_two);
  CHECK(CycField::get(105).degree() == 48);
}

TEST_CASE("zeta_3 arithmetic") {
  const auto& f = CycField::get(3);
  Scalar z = Scalar::zeta(f);
  CHECK(z * z == -Scalar(1) - z);
  CHECK(z.pow(3) == Scalar(1));
  CHECK(z.inverse() == z * z);
  CHECK(multiplicative_order(z, 10) == 3);
  CHECK(Scalar(1) + z + z * z == Scalar(0));
}

TEST_CASE("field axioms on samples") {
  for (int m : {3, 5, 8, 12, 100}) {
    const auto& f = CycField::get(m);
    auto s = samples(f);
    for (const auto& a : s) {
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
      for (const auto& b : s) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : s) {
          CHECK((a + b) * c == a * c + b * c);
          CHECK((a * b) * c == a * (b * c));
        }
      }
    }
  }
}

TEST_CASE("roots of unity have the right order") {
  for (int m : {3, 4, 5, 7, 9, 10, 12, 101}) {
    Scalar z = Scalar::zeta(CycField::get(m));
    CHECK(multiplicative_order(z, 2 * m) == m);
  }
}

TEST_CASE("conductor bounds") {
  CHECK_THROWS_AS(CycField::get(0), std::invalid_argument);
  CHECK_THROWS_AS(CycField::get(CycField::kMaxConductor + 1), std::invalid_argument);
  CHECK_NOTHROW(CycField::get(120));
}

TEST_CASE("q_root selection") {
  Scalar q3 = q_root(CycField::get(3), 3);
  CHECK(q3 == Scalar::zeta(CycField::get(3)));
  CHECK(multiplicative_order(q3 * q3, 3) == 3);
  Scalar q4 = q_root(CycField::get(8), 4);
  CHECK(multiplicative_order(q4 * q4, 4) == 4);
  CHECK_THROWS_AS(q_root(CycField::get(4), 3), std::invalid_argument);
}

TEST_CASE("q-binomials agree with the Pascal recurrence") {
  for (int m : {3, 5, 7}) {
    Scalar q = Scalar::zeta(CycField::get(m));
    for (const Scalar& t : {q * q, q.inverse(), Scalar(2)}) {
      for (int r = 1; r <= 9; ++r)
        for (int k = 1; k < r; ++k)
          CHECK(q_binomial(r, k, t) == q_binomial(r - 1, k - 1, t) + t.pow(k) * q_binomial(r - 1, k, t));
      CHECK(q_binomial(6, 0, t) == Scalar(1));
      CHECK(q_binomial(6, 6, t) == Scalar(1));
    }
  }
  // At t = 1 the ordinary binomials come back.
  CHECK(q_binomial(6, 3, Scalar(1)) == Scalar(20));
}

TEST_CASE("q-binomial at a root of unity vanishes in the middle") {
  Scalar q = Scalar::zeta(CycField::get(3));
  Scalar t = q * q;
  CHECK(q_binomial(3, 1, t).is_zero());
  CHECK(q_binomial(3, 2, t).is_zero());
  CHECK(q_binomial(4, 1, t) == Scalar(1));
}

TEST_CASE("parsing scalar literals") {
  Scalar q = Scalar::zeta(CycField::get(5));
  CHECK(parse_scalar("1 - q^2", q) == Scalar(1) - q * q);
  CHECK(parse_scalar("1/(q - q^-1)", q) * (q - q.inverse()) == Scalar(1));
  CHECK(parse_scalar("3/2*q", q) == Scalar::rational(3, 2) * q);
  CHECK(parse_scalar("2q^3 - (1 + q)^2", q) == Scalar(2) * q.pow(3) - (Scalar(1) + q) * (Scalar(1) + q));
  CHECK(parse_scalar("-7/3", Scalar()) == Scalar::rational(-7, 3));
  CHECK(parse_scalar("q^(-2)", q) == q.pow(-2));
  CHECK_THROWS_AS(parse_scalar("1/0", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("q", Scalar()), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1 + ", q), std::invalid_argument);
}

TEST_CASE("rendering round-trips through the parser") {
  for (int m : {3, 5, 12}) {
    const auto& f = CycField::get(m);
    Scalar q = Scalar::zeta(f);
    for (const auto& s : samples(f)) CHECK(parse_scalar(s.str(), q) == s);
  }
  Scalar q = Scalar::zeta(CycField::get(5));
  CHECK((Scalar(1) - q * q).str() == "1 - q^2");
  CHECK(Scalar::rational(-1, 2).str() == "-1/2");
}
