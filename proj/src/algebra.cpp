#include "ydc/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ydc/kernels.hpp"

namespace ydc {

namespace {

using Mono = std::vector<int>;
using Poly = std::map<Mono, Scalar>;

void poly_add(Poly& p, const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

class Rewriter {
 public:
  explicit Rewriter(const Presentation& p) : p_(p) {
    for (const auto& r : p.swaps) rules_[{r.left, r.right}] = &r;
  }

  Poly lmul(int g, const Mono& m) {
    auto key = std::make_pair(g, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++steps_ > kMaxSteps)
      throw std::runtime_error("rewriting in " + p_.name + " exceeded " + std::to_string(kMaxSteps) + " steps");
    Poly out;
    int first = 0;
    while (first < static_cast<int>(m.size()) && m[first] == 0) ++first;
    if (first == static_cast<int>(m.size()) || g <= first) {
      Mono r = m;
      r[g] += 1;
      const auto& pw = p_.powers[g];
      bool zero = false;
      if (pw.kind == PowerKind::Nilpotent && r[g] >= pw.order) zero = true;
      if (pw.kind == PowerKind::Cyclic) r[g] %= pw.order;
      if (!zero) out.emplace(std::move(r), Scalar(1));
    } else {
      Mono rest = m;
      rest[first] -= 1;
      auto rit = rules_.find({g, first});
      if (rit == rules_.end()) {
        // Commuting pair: g * first * rest = first * (g * rest)
        Poly inner = lmul(g, rest);
        for (const auto& [mm, c] : inner)
          for (const auto& [m2, c2] : lmul(first, mm)) poly_add(out, m2, c * c2);
      } else {
        Poly base{{rest, Scalar(1)}};
        for (const auto& t : rit->second->rhs) {
          Poly cur = mul_word(t.word, base);
          for (const auto& [mm, c] : cur) poly_add(out, mm, t.coeff * c);
        }
      }
    }
    memo_.emplace(key, out);
    return out;
  }

  Poly mul_word(const std::vector<int>& word, Poly p) {
    for (auto w = word.rbegin(); w != word.rend(); ++w) {
      Poly next;
      for (const auto& [m, c] : p)
        for (const auto& [m2, c2] : lmul(*w, m)) poly_add(next, m2, c * c2);
      p = std::move(next);
    }
    return p;
  }

 private:
  static constexpr std::size_t kMaxSteps = 20'000'000;
  const Presentation& p_;
  std::map<std::pair<int, int>, const SwapRule*> rules_;
  std::map<std::pair<int, Mono>, Poly> memo_;
  std::size_t steps_ = 0;
};

}  // namespace

int Presentation::weight(int g) const {
  if (!weights.empty()) return weights[g];
  return powers[g].kind == PowerKind::Free ? 1 : 0;
}

std::string Presentation::check() const {
  int n = static_cast<int>(generators.size());
  if (static_cast<int>(powers.size()) != n) return "power rule count does not match generators";
  if (!weights.empty() && static_cast<int>(weights.size()) != n) return "weight count does not match generators";
  bool has_free = false;
  for (int g = 0; g < n; ++g) {
    const auto& pw = powers[g];
    if (pw.kind != PowerKind::Free && pw.order < 1) return "generator " + generators[g] + " has invalid order";
    if (pw.kind == PowerKind::Free) {
      has_free = true;
      if (weight(g) <= 0) return "free generator " + generators[g] + " needs positive weight";
    }
  }
  if (has_free && truncation < 0) return "free generators require a truncation degree";
  auto measure = [&](const std::vector<int>& w) {
    int deg = 0, inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (powers[w[i]].kind != PowerKind::Cyclic) ++deg;
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) ++inv;
    }
    return std::make_pair(deg, inv);
  };
  std::map<std::pair<int, int>, int> seen;
  for (const auto& r : swaps) {
    if (r.left < 0 || r.right < 0 || r.left >= n || r.right >= n) return "swap rule references unknown generator";
    if (r.left <= r.right) return "swap rule " + generators[r.left] + generators[r.right] + " is not out of order";
    if (seen[{r.left, r.right}]++) return "duplicate swap rule";
    auto lhs = measure({r.left, r.right});
    for (const auto& t : r.rhs) {
      for (int g : t.word)
        if (g < 0 || g >= n) return "swap rule references unknown generator";
      if (!(measure(t.word) < lhs))
        return "swap rule " + generators[r.left] + " " + generators[r.right] + " does not decrease degree/inversions";
    }
  }
  return "";
}

std::string monomial_label(const std::vector<std::string>& names, const std::vector<int>& exps) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t g = 0; g < exps.size(); ++g) {
    if (exps[g] == 0) continue;
    if (!first) os << " ";
    first = false;
    os << names[g];
    if (exps[g] > 1) os << "^" << exps[g];
  }
  return first ? "1" : os.str();
}

BasedAlgebra::BasedAlgebra(std::string name, SpacePtr space, std::vector<Vec> table,
                           std::vector<std::uint8_t> overflow, std::size_t unit,
                           std::vector<std::string> generator_names, std::vector<Vec> generators, int truncation)
    : name_(std::move(name)),
      space_(std::move(space)),
      table_(std::move(table)),
      overflow_(std::move(overflow)),
      unit_(unit),
      gen_names_(std::move(generator_names)),
      gens_(std::move(generators)),
      truncation_(truncation) {
  std::size_t d = space_->dim();
  if (table_.size() != d * d) throw std::invalid_argument("algebra " + name_ + ": table size mismatch");
  if (overflow_.empty()) overflow_.assign(d * d, 0);
}

void BasedAlgebra::set_words(std::vector<std::vector<int>> words, std::vector<std::vector<int>> exps) {
  words_ = std::move(words);
  exps_ = std::move(exps);
}

int BasedAlgebra::degree(const Vec& v) const {
  int d = 0;
  for (const auto& [i, c] : v) d = std::max(d, degree(i));
  return d;
}

Product BasedAlgebra::mul(const Vec& a, const Vec& b) const {
  Product p;
  for (const auto& [i, c] : a)
    for (const auto& [j, d] : b) {
      if (overflows(i, j)) p.overflow = true;
      p.value.axpy(c * d, product(i, j));
    }
  return p;
}

Vec BasedAlgebra::mul_exact(const Vec& a, const Vec& b) const {
  Product p = mul(a, b);
  if (p.overflow) throw std::runtime_error("product in " + name_ + " leaves the truncated basis");
  return p.value;
}

Vec BasedAlgebra::power(const Vec& a, int k) const {
  Vec r = one();
  for (int i = 0; i < k; ++i) r = mul_exact(r, a);
  return r;
}

LinearMap BasedAlgebra::mult_map() const {
  for (auto o : overflow_)
    if (o) throw std::runtime_error("multiplication map of truncated algebra " + name_ + " is not closed");
  return LinearMap(tensor(space_, space_), space_, table_);
}

Product BasedAlgebra::mul_at(const Vec& v, std::size_t left, std::size_t right) const {
  std::size_t d = dim();
  Product out;
  for (const auto& [idx, c] : v) {
    std::size_t l = idx / (d * d * right);
    std::size_t m = (idx / right) % (d * d);
    std::size_t r = idx % right;
    if (l >= left) throw std::out_of_range("mul_at: index outside tensor layout");
    if (overflow_[m]) out.overflow = true;
    for (const auto& [k, e] : table_[m]) out.value.add((l * d + k) * right + r, c * e);
  }
  return out;
}

BasedAlgebra build(const Presentation& p) {
  std::string err = p.check();
  if (!err.empty()) throw std::invalid_argument("presentation " + p.name + ": " + err);
  int ng = static_cast<int>(p.generators.size());
  std::vector<int> maxexp(ng);
  for (int g = 0; g < ng; ++g) {
    const auto& pw = p.powers[g];
    maxexp[g] = pw.kind == PowerKind::Free ? p.truncation / p.weight(g) : pw.order - 1;
  }
  std::vector<Mono> monos;
  Mono cur(ng, 0);
  std::function<void(int, int)> rec = [&](int g, int deg) {
    if (g == ng) {
      monos.push_back(cur);
      return;
    }
    for (int e = 0; e <= maxexp[g]; ++e) {
      int nd = deg + e * p.weight(g);
      if (p.truncation >= 0 && nd > p.truncation) break;
      cur[g] = e;
      rec(g + 1, nd);
    }
    cur[g] = 0;
  };
  rec(0, 0);
  auto total = [](const Mono& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
  };
  std::sort(monos.begin(), monos.end(), [&](const Mono& a, const Mono& b) {
    int ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    return a > b;
  });
  std::map<Mono, std::size_t> index;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<std::vector<int>> words;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    index[monos[i]] = i;
    labels.push_back(monomial_label(p.generators, monos[i]));
    int d = 0;
    std::vector<int> w;
    for (int g = 0; g < ng; ++g) {
      d += monos[i][g] * p.weight(g);
      for (int e = 0; e < monos[i][g]; ++e) w.push_back(g);
    }
    degrees.push_back(d);
    words.push_back(std::move(w));
  }
  auto space = BasedSpace::make(p.name, labels, degrees);
  std::size_t dim = monos.size();
  Rewriter rw(p);
  std::vector<Vec> table(dim * dim);
  std::vector<std::uint8_t> overflow(dim * dim, 0);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      Poly res = rw.mul_word(words[a], Poly{{monos[b], Scalar(1)}});
      Vec v;
      for (const auto& [m, c] : res) {
        auto it = index.find(m);
        if (it == index.end())
          overflow[a * dim + b] = 1;
        else
          v.add(it->second, c);
      }
      table[a * dim + b] = std::move(v);
    }
  std::vector<Vec> gens;
  for (int g = 0; g < ng; ++g) {
    Mono m(ng, 0);
    m[g] = 1;
    if (p.powers[g].kind != PowerKind::Free && p.powers[g].order == 1) {
      gens.push_back(Vec());
      continue;
    }
    auto it = index.find(m);
    gens.push_back(it == index.end() ? Vec() : Vec::basis(it->second));
  }
  BasedAlgebra alg(p.name, space, std::move(table), std::move(overflow), index.at(Mono(ng, 0)), p.generators,
                   std::move(gens), p.truncation);
  alg.set_words(std::move(words), std::move(monos));
  alg.set_presentation(std::make_shared<const Presentation>(p));
  return alg;
}

std::map<std::vector<int>, Scalar> normal_form(const Presentation& p, const std::vector<int>& word) {
  Rewriter rw(p);
  return rw.mul_word(word, Poly{{Mono(p.generators.size(), 0), Scalar(1)}});
}

BasedAlgebra group_algebra(const std::vector<int>& orders, const std::vector<std::string>& names) {
  Presentation p;
  p.name = "kG";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    p.generators.push_back(i < names.size() ? names[i]
                                            : (orders.size() == 1 ? std::string("g") : "g" + std::to_string(i + 1)));
    p.powers.push_back({PowerKind::Cyclic, orders[i]});
  }
  return build(p);
}

BasedAlgebra truncate(const BasedAlgebra& a, int d) {
  std::vector<std::size_t> keep;
  std::vector<long> newidx(a.dim(), -1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.degree(i) <= d) {
      newidx[i] = static_cast<long>(keep.size());
      keep.push_back(i);
    }
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (auto i : keep) {
    labels.push_back(a.space()->label(i));
    degrees.push_back(a.degree(i));
  }
  auto space = BasedSpace::make(a.name(), labels, degrees);
  std::size_t n = keep.size();
  std::vector<Vec> table(n * n);
  std::vector<std::uint8_t> overflow(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.overflows(keep[i], keep[j])) overflow[i * n + j] = 1;
      Vec v;
      for (const auto& [k, c] : a.product(keep[i], keep[j])) {
        if (newidx[k] < 0)
          overflow[i * n + j] = 1;
        else
          v.add(newidx[k], c);
      }
      table[i * n + j] = std::move(v);
    }
  auto remap = [&](const Vec& v) {
    Vec r;
    for (const auto& [k, c] : v)
      if (newidx[k] >= 0) r.add(newidx[k], c);
    return r;
  };
  std::vector<Vec> gens;
  for (const auto& g : a.generators()) gens.push_back(remap(g));
  if (newidx[a.unit_index()] < 0) throw std::invalid_argument("truncate: unit has positive degree");
  BasedAlgebra out(a.name(), space, std::move(table), std::move(overflow), newidx[a.unit_index()],
                   a.generator_names(), std::move(gens), d);
  if (!a.words().empty()) {
    std::vector<std::vector<int>> w, e;
    for (auto i : keep) {
      w.push_back(a.words()[i]);
      e.push_back(a.exponents()[i]);
    }
    out.set_words(std::move(w), std::move(e));
  }
  return out;
}

CheckReport check_associative(const BasedAlgebra& a, std::size_t full_limit) {
  CheckReport rep;
  rep.subject = a.name();
  std::size_t d = a.dim();
  auto times = [&](const Vec& x, std::size_t c, bool& over) {
    Vec r;
    for (const auto& [k, e] : x) {
      if (a.overflows(k, c)) over = true;
      r.axpy(e, a.product(k, c));
    }
    return r;
  };
  auto ltimes = [&](std::size_t c, const Vec& x, bool& over) {
    Vec r;
    for (const auto& [k, e] : x) {
      if (a.overflows(c, k)) over = true;
      r.axpy(e, a.product(c, k));
    }
    return r;
  };
  std::vector<std::size_t> lefts;
  bool full = d <= full_limit || a.words().empty() || !a.finite();
  if (full) {
    for (std::size_t i = 0; i < d; ++i) lefts.push_back(i);
  } else {
    for (const auto& g : a.generators())
      if (g.nnz() == 1) lefts.push_back(g.lead());
  }
  auto ok = [&](std::size_t t) {
    std::size_t i = lefts[t / (d * d)], j = (t / d) % d, k = t % d;
    if (a.overflows(i, j) || a.overflows(j, k)) return true;
    bool over = false;
    Vec l = times(a.product(i, j), k, over);
    Vec r = ltimes(i, a.product(j, k), over);
    return over || l == r;
  };
  auto bad = kernels::first_failure(lefts.size() * d * d, ok);
  std::string w;
  if (bad) {
    std::size_t t = *bad;
    w = "(" + a.space()->label(lefts[t / (d * d)]) + ")(" + a.space()->label((t / d) % d) + ")(" +
        a.space()->label(t % d) + ")";
  }
  rep.add("associativity", !bad, w, full ? "all basis triples" : "generator triples");
  bool unit_ok = true;
  std::string uw;
  for (std::size_t i = 0; i < d && unit_ok; ++i) {
    Vec e = Vec::basis(i);
    if (a.product(a.unit_index(), i) != e || a.product(i, a.unit_index()) != e) {
      unit_ok = false;
      uw = a.space()->label(i);
    }
  }
  rep.add("unit", unit_ok, uw);
  return rep;
}

}  // namespace ydc
