#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ydc {

// Q(zeta_m) represented as Q[z]/Phi_m(z).
class CycField {
 public:
  static constexpr int kMaxConductor = 300;

  // Registry lookup; fields live for the lifetime of the process.
  static const CycField& get(int m);

  int conductor() const { return m_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<mpq_class>& modulus() const { return phi_; }
  // z^k mod Phi_m for k < 2*degree - 1
  const std::vector<mpq_class>& reduced_power(std::size_t k) const { return red_[k]; }

 private:
  explicit CycField(int m);
  int m_;
  std::vector<mpq_class> phi_;
  std::vector<std::vector<mpq_class>> red_;
};

std::vector<mpq_class> cyclotomic_polynomial(int m);

// Element of a cyclotomic field. A null field marks a rational constant,
// which embeds in every field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT
  Scalar(const mpq_class& v);  // NOLINT
  static Scalar zeta(const CycField& f, long power = 1);
  static Scalar rational(long p, long r);

  const CycField* field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const { return c_.size() <= 1; }
  mpq_class rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(long e) const;

  // Ascending powers of the field generator, e.g. "1 - q^2".
  std::string str(std::string_view var = "q") const;

 private:
  void trim();
  static const CycField* common(const Scalar& a, const Scalar& b);
  const CycField* field_ = nullptr;
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Smallest k in [1, bound] with s^k == 1, or 0 if none.
long multiplicative_order(const Scalar& s, long bound);

// A root of unity q in the field with q^2 of exact order n. Prefers the
// field generator, then its powers and their negatives.
Scalar q_root(const CycField& f, int n);

// Field and q for a root of unity of order `order`, with q as generator.
const CycField& field_for_order(int order);

// Gaussian binomial [m choose i]_t via the product formula.
Scalar q_binomial(int m, int i, const Scalar& t);
// [j]_t = 1 + t + ... + t^(j-1)
Scalar q_integer(int j, const Scalar& t);
Scalar q_factorial(int j, const Scalar& t);

// Parses literals such as "1 - q^2", "1/(q - q^-1)", "3/2*q". The symbol
// `var` denotes `gen`; bare rationals are always accepted.
Scalar parse_scalar(std::string_view text, const Scalar& gen, std::string_view var = "q");

}  // namespace ydc
