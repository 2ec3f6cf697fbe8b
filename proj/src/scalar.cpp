#include "ydc/scalar.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ydc {

namespace {

using Poly = std::vector<mpq_class>;

void trim_poly(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim_poly(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim_poly(r);
  return r;
}

// a = q*b + r
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    mpq_class c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim_poly(r);
  }
  trim_poly(q);
}

}  // namespace

std::vector<mpq_class> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  Poly p(m + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    Poly q, r;
    poly_divmod(p, cyclotomic_polynomial(d), q, r);
    p = q;
  }
  return p;
}

CycField::CycField(int m) : m_(m), phi_(cyclotomic_polynomial(m)) {
  int n = degree();
  std::size_t count = n > 0 ? 2 * n - 1 : 1;
  red_.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    Poly xk(k + 1);
    xk[k] = 1;
    Poly q, r;
    poly_divmod(xk, phi_, q, r);
    red_[k] = r;
  }
}

const CycField& CycField::get(int m) {
  if (m < 1 || m > kMaxConductor)
    throw std::invalid_argument("cyclotomic conductor " + std::to_string(m) + " out of range [1, " +
                                std::to_string(kMaxConductor) + "]");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[m];
  if (!slot) slot.reset(new CycField(m));
  return *slot;
}

Scalar::Scalar(long v) {
  if (v != 0) c_.emplace_back(v);
}

Scalar::Scalar(const mpq_class& v) {
  if (v != 0) c_.push_back(v);
}

Scalar Scalar::rational(long p, long r) {
  if (r == 0) throw std::domain_error("division by zero");
  mpq_class v(p, r);
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::zeta(const CycField& f, long power) {
  long m = f.conductor();
  long e = ((power % m) + m) % m;
  Scalar s;
  s.field_ = &f;
  Scalar z;
  z.field_ = &f;
  if (f.degree() == 1) {
    z.c_ = {-f.modulus()[0]};
  } else {
    z.c_ = {0, 1};
  }
  s.c_ = {1};
  return s * z.pow(e);
}

bool Scalar::is_one() const { return c_.size() == 1 && c_[0] == 1; }

mpq_class Scalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + str());
  return c_.empty() ? mpq_class(0) : c_[0];
}

void Scalar::trim() { trim_poly(c_); }

const CycField* Scalar::common(const Scalar& a, const Scalar& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (a.field_ != b.field_) {
    if (a.is_rational()) return b.field_;
    if (b.is_rational()) return a.field_;
    throw std::invalid_argument("scalars from different cyclotomic fields");
  }
  return a.field_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  field_ = common(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  field_ = common(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  field_ = common(*this, o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (c_.size() == 1) {
    mpq_class a = c_[0];
    c_ = o.c_;
    for (auto& c : c_) c *= a;
    return *this;
  }
  Poly prod = poly_mul(c_, o.c_);
  int n = field_->degree();
  if (static_cast<int>(prod.size()) <= n) {
    c_ = std::move(prod);
    return *this;
  }
  Poly r(n);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    if (static_cast<int>(k) < n) {
      r[k] += prod[k];
    } else {
      const Poly& red = field_->reduced_power(k);
      for (std::size_t i = 0; i < red.size(); ++i) r[i] += prod[k] * red[i];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.c_.size() != b.c_.size()) return false;
  if (a.field_ && b.field_ && a.field_ != b.field_ && a.c_.size() > 1) return false;
  return a.c_ == b.c_;
}

Scalar Scalar::inverse() const {
  if (c_.empty()) throw std::domain_error("division by zero");
  if (c_.size() == 1) {
    Scalar r;
    r.field_ = field_;
    r.c_ = {1 / c_[0]};
    return r;
  }
  // Extended Euclid: find s with s*a = 1 mod phi.
  Poly r0 = field_->modulus(), r1 = c_;
  Poly s0, s1 = {1};
  while (!(r1.size() == 1)) {
    if (r1.empty()) throw std::domain_error("element not invertible");
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Scalar res;
  res.field_ = field_;
  mpq_class k = 1 / r1[0];
  for (auto& c : s1) c *= k;
  Poly q, rem;
  poly_divmod(s1, field_->modulus(), q, rem);
  res.c_ = rem;
  return res;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  result.field_ = field_;
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Scalar::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpq_class c = c_[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

long multiplicative_order(const Scalar& s, long bound) {
  if (s.is_zero()) return 0;
  Scalar p = s;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= s;
  }
  return 0;
}

Scalar q_root(const CycField& f, int n) {
  if (n < 1) throw std::invalid_argument("q_root: n must be positive");
  long m = f.conductor();
  std::vector<Scalar> cands;
  for (long k = 1; k <= m; ++k) cands.push_back(Scalar::zeta(f, k));
  for (long k = 1; k <= m; ++k) cands.push_back(-Scalar::zeta(f, k));
  for (const auto& c : cands) {
    Scalar q2 = c * c;
    if (multiplicative_order(q2, n) == n) return c;
  }
  throw std::invalid_argument("field Q(zeta_" + std::to_string(m) + ") has no q with q^2 of order " +
                              std::to_string(n));
}

const CycField& field_for_order(int order) { return CycField::get(order); }

Scalar q_integer(int j, const Scalar& t) {
  Scalar r, p(1);
  for (int i = 0; i < j; ++i) {
    r += p;
    p *= t;
  }
  return r;
}

Scalar q_factorial(int j, const Scalar& t) {
  Scalar r(1);
  for (int i = 1; i <= j; ++i) r *= q_integer(i, t);
  return r;
}

Scalar q_binomial(int m, int i, const Scalar& t) {
  if (i < 0 || i > m) return Scalar();
  Scalar num(1), den(1);
  for (int j = 0; j < i; ++j) {
    num *= Scalar(1) - t.pow(m - j);
    den *= Scalar(1) - t.pow(j + 1);
  }
  if (den.is_zero()) {
    // Fall back to the Pascal recurrence when t is a low-order root of unity.
    std::vector<Scalar> row{Scalar(1)};
    for (int r = 1; r <= m; ++r) {
      std::vector<Scalar> next(r + 1);
      next[0] = 1;
      next[r] = 1;
      for (int k = 1; k < r; ++k) next[k] = row[k - 1] + t.pow(k) * row[k];
      row = std::move(next);
    }
    return row[i];
  }
  return num / den;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Scalar& gen, std::string_view var) : s_(s), gen_(gen), var_(var) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(s_) + "': " + what + " at position " +
                                std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || s_.substr(pos_, var_.size()) == var_;
  }

  Scalar expr() {
    Scalar v;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        ++pos_;
        sign = -1;
      } else if (!first) {
        break;
      }
      Scalar t = term();
      v += sign < 0 ? -t : t;
      first = false;
    }
    return v;
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v *= factor();
      } else if (peek('/')) {
        ++pos_;
        Scalar d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_atom()) {
        v *= factor();
      } else {
        break;
      }
    }
    return v;
  }

  Scalar factor() {
    skip();
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    Scalar base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      bool neg = false;
      if (peek('-')) {
        neg = true;
        ++pos_;
      } else if (peek('(')) {
        ++pos_;
        skip();
        if (peek('-')) {
          neg = true;
          ++pos_;
        }
        long e = integer();
        if (!peek(')')) fail("expected ')'");
        ++pos_;
        if (neg) e = -e;
        if (e < 0 && base.is_zero()) fail("division by zero");
        return base.pow(e);
      }
      long e = integer();
      if (neg) e = -e;
      if (e < 0 && base.is_zero()) fail("division by zero");
      return base.pow(e);
    }
    return base;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == '(') {
      ++pos_;
      Scalar v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (!var_.empty() && s_.substr(pos_, var_.size()) == var_) {
      pos_ += var_.size();
      if (gen_.is_zero()) fail("symbol '" + std::string(var_) + "' is not defined here");
      return gen_;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(mpq_class(std::string(s_.substr(start, pos_ - start))));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Scalar gen_;
  std::string_view var_;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Scalar& gen, std::string_view var) {
  return Parser(text, gen, var).parse();
}

}  // namespace ydc
