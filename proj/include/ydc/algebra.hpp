#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ydc/linspace.hpp"
#include "ydc/report.hpp"

namespace ydc {

enum class PowerKind { Nilpotent, Cyclic, Free };

struct PowerRule {
  PowerKind kind = PowerKind::Free;
  int order = 0;  // g^order = 0 (nilpotent) or 1 (cyclic)
};

struct Term {
  Scalar coeff;
  std::vector<int> word;  // generator indices, left to right
};

// Rewrites the out-of-order product g_left * g_right (left > right).
struct SwapRule {
  int left = 0, right = 0;
  std::vector<Term> rhs;
};

// Generators are ordered; normal words are g_0^e_0 g_1^e_1 ... . Pairs
// without a swap rule commute. Free generators are truncated at total
// weighted degree `truncation`.
struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<PowerRule> powers;
  std::vector<SwapRule> swaps;
  std::vector<int> weights;  // truncation weight; empty = 1 for free, 0 otherwise
  int truncation = -1;

  int weight(int g) const;
  std::string check() const;  // empty if the rules are well formed
};

// Product with an overflow flag: set when an exact term fell outside the
// truncated basis.
struct Product {
  Vec value;
  bool overflow = false;
};

class BasedAlgebra {
 public:
  BasedAlgebra() = default;
  BasedAlgebra(std::string name, SpacePtr space, std::vector<Vec> table, std::vector<std::uint8_t> overflow,
               std::size_t unit, std::vector<std::string> generator_names, std::vector<Vec> generators,
               int truncation);

  const std::string& name() const { return name_; }
  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  std::size_t unit_index() const { return unit_; }
  Vec one() const { return Vec::basis(unit_); }
  int truncation() const { return truncation_; }
  bool finite() const { return truncation_ < 0; }
  int degree(std::size_t i) const { return space_->degree(i); }
  int degree(const Vec& v) const;

  const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  bool overflows(std::size_t i, std::size_t j) const { return overflow_[i * dim() + j] != 0; }
  Product mul(const Vec& a, const Vec& b) const;
  // Throws if the product overflows.
  Vec mul_exact(const Vec& a, const Vec& b) const;
  Vec power(const Vec& a, int k) const;

  const std::vector<std::string>& generator_names() const { return gen_names_; }
  const std::vector<Vec>& generators() const { return gens_; }

  // Basis elements as words in the generators (empty for algebras not
  // built from a presentation).
  const std::vector<std::vector<int>>& words() const { return words_; }
  const std::vector<std::vector<int>>& exponents() const { return exps_; }
  void set_words(std::vector<std::vector<int>> words, std::vector<std::vector<int>> exps);
  // The presentation this algebra was built from, if any.
  const std::shared_ptr<const Presentation>& presentation() const { return pres_; }
  void set_presentation(std::shared_ptr<const Presentation> p) { pres_ = std::move(p); }

  // m : A (x) A -> A; throws on overflow.
  LinearMap mult_map() const;
  // Applies m to the tensor slot (left, A(x)A, right) with overflow tracking.
  Product mul_at(const Vec& v, std::size_t left, std::size_t right) const;

 private:
  std::string name_;
  SpacePtr space_;
  std::vector<Vec> table_;
  std::vector<std::uint8_t> overflow_;
  std::size_t unit_ = 0;
  std::vector<std::string> gen_names_;
  std::vector<Vec> gens_;
  int truncation_ = -1;
  std::vector<std::vector<int>> words_, exps_;
  std::shared_ptr<const Presentation> pres_;
};

BasedAlgebra build(const Presentation& p);
BasedAlgebra group_algebra(const std::vector<int>& orders, const std::vector<std::string>& names = {});
// Restricts to basis elements of degree <= d.
BasedAlgebra truncate(const BasedAlgebra& a, int d);

// Normal form of a word, as coefficients on exponent vectors; used for
// evaluating relations.
std::map<std::vector<int>, Scalar> normal_form(const Presentation& p, const std::vector<int>& word);

// (ab)c == a(bc) on basis triples whose products stay inside the
// truncation. Above `full_limit` basis elements only generator triples
// (g, b, c) are swept, which implies the full law by induction on words.
CheckReport check_associative(const BasedAlgebra& a, std::size_t full_limit = 64);

std::string monomial_label(const std::vector<std::string>& names, const std::vector<int>& exps);

}  // namespace ydc
