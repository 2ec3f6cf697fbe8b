#include "ydc/linspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ydc/kernels.hpp"

namespace ydc {

SpacePtr BasedSpace::make(std::string name, std::vector<std::string> labels, std::vector<int> degrees) {
  if (!degrees.empty() && degrees.size() != labels.size())
    throw std::invalid_argument("space " + name + ": degree list does not match basis");
  auto s = std::shared_ptr<BasedSpace>(new BasedSpace());
  s->name_ = std::move(name);
  s->dim_ = labels.size();
  s->labels_ = std::move(labels);
  s->degrees_ = degrees.empty() ? std::vector<int>(s->dim_, 0) : std::move(degrees);
  return s;
}

SpacePtr BasedSpace::unit() {
  static SpacePtr k = make("k", {"1"});
  return k;
}

SpacePtr BasedSpace::tensor(const SpacePtr& v, const SpacePtr& w) {
  auto s = std::shared_ptr<BasedSpace>(new BasedSpace());
  s->name_ = v->name() + "⊗" + w->name();
  s->dim_ = v->dim() * w->dim();
  s->left_ = v;
  s->right_ = w;
  return s;
}

std::string BasedSpace::label(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("basis index out of range in " + name_);
  if (left_) return left_->label(i / right_->dim()) + "⊗" + right_->label(i % right_->dim());
  return labels_[i];
}

int BasedSpace::degree(std::size_t i) const {
  if (left_) return left_->degree(i / right_->dim()) + right_->degree(i % right_->dim());
  return degrees_[i];
}

int BasedSpace::max_degree() const {
  if (left_) return left_->max_degree() + right_->max_degree();
  int m = 0;
  for (int d : degrees_) m = std::max(m, d);
  return m;
}

std::optional<std::size_t> BasedSpace::find(const std::string& label) const {
  std::call_once(index_once_, [this] {
    for (std::size_t i = 0; i < dim_; ++i) index_.emplace(this->label(i), i);
  });
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SpacePtr tensor(const SpacePtr& v, const SpacePtr& w) { return BasedSpace::tensor(v, w); }

SpacePtr tensor(std::initializer_list<SpacePtr> spaces) {
  auto it = spaces.begin();
  SpacePtr s = *it++;
  for (; it != spaces.end(); ++it) s = BasedSpace::tensor(s, *it);
  return s;
}

Vec Vec::basis(std::size_t i, const Scalar& c) {
  Vec v;
  v.add(i, c);
  return v;
}

void Vec::add(std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m_.erase(it);
  }
}

void Vec::set(std::size_t i, const Scalar& c) {
  if (c.is_zero())
    m_.erase(i);
  else
    m_[i] = c;
}

void Vec::axpy(const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : x.m_) add(i, a * c);
}

Scalar Vec::get(std::size_t i) const {
  auto it = m_.find(i);
  return it == m_.end() ? Scalar() : it->second;
}

Vec& Vec::operator+=(const Vec& o) {
  for (const auto& [i, c] : o.m_) add(i, c);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  for (const auto& [i, c] : o.m_) add(i, -c);
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    m_.clear();
    return *this;
  }
  for (auto& [i, c] : m_) c *= s;
  return *this;
}

bool operator<(const Vec& a, const Vec& b) {
  auto ia = a.m_.begin(), ib = b.m_.begin();
  for (; ia != a.m_.end() && ib != b.m_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second.coeffs() < ib->second.coeffs();
  }
  return ia == a.m_.end() && ib != b.m_.end();
}

std::string Vec::str(const BasedSpace& space, std::string_view var) const {
  if (m_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : m_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one()) {
      os << space.label(i);
    } else {
      os << "(" << c.str(var) << ")";
      if (space.label(i) != "1") os << " " << space.label(i);
    }
  }
  return os.str();
}

Vec tensor_vec(const Vec& a, const Vec& b, std::size_t dim_b) {
  Vec r;
  for (const auto& [i, c] : a)
    for (const auto& [j, d] : b) r.add(i * dim_b + j, c * d);
  return r;
}

LinearMap::LinearMap(SpacePtr dom, SpacePtr cod, std::vector<Vec> columns)
    : dom_(std::move(dom)), cod_(std::move(cod)), cols_(std::move(columns)) {
  if (cols_.size() != dom_->dim()) throw std::invalid_argument("linear map: column count does not match domain");
}

LinearMap LinearMap::identity(const SpacePtr& s) {
  std::vector<Vec> cols(s->dim());
  for (std::size_t i = 0; i < s->dim(); ++i) cols[i] = Vec::basis(i);
  return LinearMap(s, s, std::move(cols));
}

LinearMap LinearMap::zero(const SpacePtr& dom, const SpacePtr& cod) {
  return LinearMap(dom, cod, std::vector<Vec>(dom->dim()));
}

LinearMap LinearMap::from_columns(const SpacePtr& dom, const SpacePtr& cod,
                                  const std::function<Vec(std::size_t)>& column) {
  return LinearMap(dom, cod, kernels::columns(dom->dim(), column));
}

Vec LinearMap::apply(const Vec& v) const {
  Vec r;
  for (const auto& [i, c] : v) {
    if (i >= cols_.size()) throw std::out_of_range("vector index outside map domain");
    r.axpy(c, cols_[i]);
  }
  return r;
}

bool operator==(const LinearMap& a, const LinearMap& b) { return a.cols_ == b.cols_; }

LinearMap LinearMap::operator-(const LinearMap& o) const {
  if (cols_.size() != o.cols_.size()) throw std::invalid_argument("map difference: domain mismatch");
  std::vector<Vec> c = cols_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.cols_[i];
  return LinearMap(dom_, cod_, std::move(c));
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (cols_.size() != o.cols_.size()) throw std::invalid_argument("map sum: domain mismatch");
  std::vector<Vec> c = cols_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.cols_[i];
  return LinearMap(dom_, cod_, std::move(c));
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.codomain()->dim() != g.domain()->dim())
    throw std::invalid_argument("compose: " + f.codomain()->name() + " does not match " + g.domain()->name());
  return LinearMap::from_columns(f.domain(), g.codomain(), [&](std::size_t i) { return g.apply(f.column(i)); });
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
  auto dom = tensor(f.domain(), g.domain());
  auto cod = tensor(f.codomain(), g.codomain());
  std::size_t dg = g.domain()->dim(), cg = g.codomain()->dim();
  return LinearMap::from_columns(dom, cod, [&](std::size_t i) {
    return tensor_vec(f.column(i / dg), g.column(i % dg), cg);
  });
}

Vec apply_at(const LinearMap& f, const Vec& v, std::size_t left, std::size_t right) {
  std::size_t mid = f.domain()->dim(), mid2 = f.codomain()->dim();
  Vec r;
  for (const auto& [idx, c] : v) {
    std::size_t l = idx / (mid * right);
    std::size_t m = (idx / right) % mid;
    std::size_t rr = idx % right;
    if (l >= left) throw std::out_of_range("apply_at: index outside tensor layout");
    for (const auto& [m2, d] : f.column(m)) r.add((l * mid2 + m2) * right + rr, c * d);
  }
  return r;
}

LinearMap flip(const SpacePtr& v, const SpacePtr& w) {
  std::size_t dv = v->dim(), dw = w->dim();
  std::vector<Vec> cols(dv * dw);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) cols[i * dw + j] = Vec::basis(j * dv + i);
  return LinearMap(tensor(v, w), tensor(w, v), std::move(cols));
}

namespace {

// Incremental RREF keyed by pivot column.
class Echelon {
 public:
  // Returns true if `r` enlarged the span.
  bool insert(Vec r) {
    reduce(r);
    if (r.is_zero()) return false;
    std::size_t p = r.lead();
    r *= r.get(p).inverse();
    for (auto& [q, row] : rows_) {
      Scalar c = row.get(p);
      if (!c.is_zero()) row.axpy(-c, r);
    }
    rows_.emplace(p, std::move(r));
    return true;
  }

  void reduce(Vec& r) const {
    if (rows_.empty()) return;
    std::size_t pos = 0;
    for (;;) {
      auto it = r.terms().lower_bound(pos);
      while (it != r.terms().end() && !rows_.count(it->first)) ++it;
      if (it == r.terms().end()) break;
      std::size_t p = it->first;
      Scalar c = it->second;
      r.axpy(-c, rows_.at(p));
      pos = p + 1;
    }
  }

  std::vector<Vec> rows() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
  }
  const std::map<std::size_t, Vec>& pivots() const { return rows_; }

 private:
  std::map<std::size_t, Vec> rows_;
};

std::vector<Vec> transpose_columns(const LinearMap& f) {
  std::vector<Vec> rows(f.codomain()->dim());
  for (std::size_t c = 0; c < f.domain()->dim(); ++c)
    for (const auto& [r, v] : f.column(c)) rows[r].set(c, v);
  return rows;
}

}  // namespace

std::vector<Vec> rref(const std::vector<Vec>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rows();
}

std::size_t rank(const std::vector<Vec>& rows) { return rref(rows).size(); }

std::vector<Vec> kernel_of_rows(const std::vector<Vec>& equations, std::size_t nvars) {
  Echelon e;
  for (const auto& r : equations) e.insert(r);
  const auto& piv = e.pivots();
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < nvars; ++f) {
    if (piv.count(f)) continue;
    Vec v = Vec::basis(f);
    for (const auto& [p, row] : piv) {
      Scalar c = row.get(f);
      if (!c.is_zero()) v.add(p, -c);
    }
    basis.push_back(std::move(v));
  }
  return rref(basis);
}

std::vector<Vec> kernel(const LinearMap& f) { return kernel_of_rows(transpose_columns(f), f.domain()->dim()); }

std::vector<Vec> intersect(const std::vector<std::vector<Vec>>& subspaces) {
  if (subspaces.empty()) throw std::invalid_argument("intersect: no subspaces");
  std::vector<Vec> cur = rref(subspaces[0]);
  for (std::size_t s = 1; s < subspaces.size(); ++s) {
    std::vector<Vec> other = rref(subspaces[s]);
    // Solve sum a_i u_i - sum b_j w_j = 0; variables are a then b.
    std::size_t na = cur.size(), nb = other.size();
    std::map<std::size_t, Vec> eqs;
    for (std::size_t i = 0; i < na; ++i)
      for (const auto& [k, c] : cur[i]) eqs[k].add(i, c);
    for (std::size_t j = 0; j < nb; ++j)
      for (const auto& [k, c] : other[j]) eqs[k].add(na + j, -c);
    std::vector<Vec> rows;
    for (auto& [k, r] : eqs) rows.push_back(std::move(r));
    std::vector<Vec> sol = kernel_of_rows(rows, na + nb);
    std::vector<Vec> next;
    for (const auto& v : sol) {
      Vec x;
      for (const auto& [i, c] : v)
        if (i < na) x.axpy(c, cur[i]);
      next.push_back(std::move(x));
    }
    cur = rref(next);
  }
  return cur;
}

std::optional<std::vector<Scalar>> coordinates(const std::vector<Vec>& rref_basis, const Vec& v) {
  std::vector<Scalar> coeffs(rref_basis.size());
  Vec rest = v;
  for (std::size_t i = 0; i < rref_basis.size(); ++i) {
    Scalar c = v.get(rref_basis[i].lead());
    coeffs[i] = c;
    rest.axpy(-c, rref_basis[i]);
  }
  if (!rest.is_zero()) return std::nullopt;
  return coeffs;
}

bool in_span(const std::vector<Vec>& rref_basis, const Vec& v) { return coordinates(rref_basis, v).has_value(); }

std::optional<Vec> solve(const LinearMap& f, const Vec& b) {
  std::size_t n = f.domain()->dim();
  std::vector<Vec> rows = transpose_columns(f);
  for (const auto& [r, c] : b) rows[r].set(n, c);
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  if (e.pivots().count(n)) return std::nullopt;
  Vec x;
  for (const auto& [p, row] : e.pivots()) x.set(p, row.get(n));
  return x;
}

LinearMap inverse(const LinearMap& f) {
  std::size_t n = f.domain()->dim();
  if (f.codomain()->dim() != n) throw std::invalid_argument("inverse: map is not square");
  std::vector<Vec> rows = transpose_columns(f);
  // Augment with the identity in columns n..2n-1.
  for (std::size_t r = 0; r < n; ++r) rows[r].set(n + r, Scalar(1));
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  const auto& piv = e.pivots();
  for (std::size_t p = 0; p < n; ++p)
    if (!piv.count(p)) throw std::domain_error("inverse: map is singular");
  std::vector<Vec> cols(n);
  for (const auto& [p, row] : piv) {
    if (p >= n) break;
    for (auto it = row.terms().lower_bound(n); it != row.terms().end(); ++it) cols[it->first - n].set(p, it->second);
  }
  return LinearMap(f.codomain(), f.domain(), std::move(cols));
}

std::size_t rank(const LinearMap& f) { return rref(f.columns()).size(); }

}  // namespace ydc
