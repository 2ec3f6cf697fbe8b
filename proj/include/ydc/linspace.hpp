#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ydc/scalar.hpp"

namespace ydc {

class BasedSpace;
using SpacePtr = std::shared_ptr<const BasedSpace>;

// Finite-dimensional space with an ordered, labelled basis and an integer
// degree per basis element. Tensor spaces flatten lexicographically
// (index = i * dim(W) + j) and generate labels on demand.
class BasedSpace {
 public:
  static SpacePtr make(std::string name, std::vector<std::string> labels, std::vector<int> degrees = {});
  static SpacePtr unit();
  static SpacePtr tensor(const SpacePtr& v, const SpacePtr& w);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::string label(std::size_t i) const;
  int degree(std::size_t i) const;
  int max_degree() const;
  std::optional<std::size_t> find(const std::string& label) const;
  bool is_tensor() const { return left_ != nullptr; }
  const SpacePtr& left() const { return left_; }
  const SpacePtr& right() const { return right_; }

 private:
  BasedSpace() = default;
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  SpacePtr left_, right_;
  mutable std::once_flag index_once_;
  mutable std::unordered_map<std::string, std::size_t> index_;
};

SpacePtr tensor(const SpacePtr& v, const SpacePtr& w);
SpacePtr tensor(std::initializer_list<SpacePtr> spaces);

// Sparse coefficient vector; zero entries are never stored.
class Vec {
 public:
  using Map = std::map<std::size_t, Scalar>;
  Vec() = default;
  static Vec basis(std::size_t i, const Scalar& c = Scalar(1));

  void add(std::size_t i, const Scalar& c);
  void set(std::size_t i, const Scalar& c);
  void axpy(const Scalar& a, const Vec& x);
  Scalar get(std::size_t i) const;
  bool is_zero() const { return m_.empty(); }
  std::size_t nnz() const { return m_.size(); }
  std::size_t lead() const { return m_.begin()->first; }
  Map::const_iterator begin() const { return m_.begin(); }
  Map::const_iterator end() const { return m_.end(); }
  const Map& terms() const { return m_; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec a) { return a *= s; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  friend bool operator<(const Vec& a, const Vec& b);

  std::string str(const BasedSpace& space, std::string_view var = "q") const;

 private:
  Map m_;
};

Vec tensor_vec(const Vec& a, const Vec& b, std::size_t dim_b);

class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(SpacePtr dom, SpacePtr cod, std::vector<Vec> columns);
  static LinearMap identity(const SpacePtr& s);
  static LinearMap zero(const SpacePtr& dom, const SpacePtr& cod);
  // Columns are computed by `column(i)`, possibly in parallel.
  static LinearMap from_columns(const SpacePtr& dom, const SpacePtr& cod,
                                const std::function<Vec(std::size_t)>& column);

  const SpacePtr& domain() const { return dom_; }
  const SpacePtr& codomain() const { return cod_; }
  const Vec& column(std::size_t i) const { return cols_[i]; }
  const std::vector<Vec>& columns() const { return cols_; }
  Vec apply(const Vec& v) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }
  LinearMap operator-(const LinearMap& o) const;
  LinearMap operator+(const LinearMap& o) const;

 private:
  SpacePtr dom_, cod_;
  std::vector<Vec> cols_;
};

// g after f
LinearMap compose(const LinearMap& g, const LinearMap& f);
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);
// Applies Id_left (x) f (x) Id_right to a flat vector.
Vec apply_at(const LinearMap& f, const Vec& v, std::size_t left, std::size_t right);
// Swap V(x)W -> W(x)V.
LinearMap flip(const SpacePtr& v, const SpacePtr& w);

// Canonical reduced row echelon form of the span of `rows`; pivots are the
// leading indices, normalised to 1, sorted ascending.
std::vector<Vec> rref(const std::vector<Vec>& rows);
std::size_t rank(const std::vector<Vec>& rows);
// Canonical basis of ker(f).
std::vector<Vec> kernel(const LinearMap& f);
std::vector<Vec> kernel_of_rows(const std::vector<Vec>& equations, std::size_t nvars);
std::vector<Vec> intersect(const std::vector<std::vector<Vec>>& subspaces);
// Is v in the span of an rref basis?
bool in_span(const std::vector<Vec>& rref_basis, const Vec& v);
// Coefficients of v in an rref basis, if v lies in its span.
std::optional<std::vector<Scalar>> coordinates(const std::vector<Vec>& rref_basis, const Vec& v);
std::optional<Vec> solve(const LinearMap& f, const Vec& b);
LinearMap inverse(const LinearMap& f);
std::size_t rank(const LinearMap& f);

}  // namespace ydc
