#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ydc/constructions.hpp"

namespace ydc {

// Psi(e_i (x) e_j) on A (x) A, evaluated on demand.
using Braid = std::function<Vec(std::size_t, std::size_t)>;

Braid braid_of(const LinearMap& psi);
Braid braid_flip(std::size_t dim);
// R2.e_j (x) R1.e_i and its inverse R-1.e_j (x) R-2.e_i.
Braid braid_k(const QTHopf& qt, const KModule& m);
Braid braid_k_inv(const QTHopf& qt, const KModule& m);

enum class Side { Left, Right };

// A centralizer or center inside a possibly truncated ambient algebra.
// Elements are certified up to filtration degree safe_degree (-1 when the
// ambient is finite dimensional).
struct CenterResult {
  std::string name;
  BasedAlgebra ambient;
  KModule ambient_kmod;  // empty rho when the ambient carries no K-action
  std::vector<Vec> basis;       // reduced echelon form
  std::vector<Vec> generators;  // as algebra, within safe_degree
  int safe_degree = -1;
  std::size_t excluded = 0;  // window candidates dropped because a product overflowed
  bool generator_sufficient = false, algebra_closed = false, commutative = false;
  std::optional<YDModule> module;  // restricted YD structure, on coordinates in `basis`
  CheckReport report;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Vec& v) const { return in_span(basis, v); }
  // Scalars are written as polynomials in the field generator, named `var`.
  nlohmann::ordered_json to_json(std::string_view var = "q") const;
};

// Left: m(c (x) s) = m psi(c (x) s). Right: m(s (x) c) = m psi(s (x) c), where the
// caller passes the inverse braiding as psi.
CenterResult centralizer(const BasedAlgebra& A, const std::vector<Vec>& S, const Braid& psi, Side side);
CenterResult centralizer(const BasedAlgebra& A, const std::vector<Vec>& S, const LinearMap& psi, Side side);

// Checks the centralizer condition against every basis element of A inside
// the window, then commutativity (m psi = m and m psi_inv = m), closure and
// generators.
void certify(CenterResult& c, const Braid& psi, const Braid& psi_inv);

// Centralizer of the generators under Psi^YD, certified, with the restricted
// YD structure.
CenterResult left_center(const YDAlgebra& a);
// Left center for an algebra in K-mod with the braiding of qt.
CenterResult left_center(const BasedAlgebra& A, const QTHopf& qt, const KModule& kmod);
CenterResult b_center(const ModuleAlgebra& a, const std::vector<std::string>& h_names = {});

// Elements of c with all terms in filtration degree <= d.
std::vector<Vec> filtration_part(const CenterResult& c, int d);
// small equals the part of big inside small's window; ambients are matched by
// basis labels.
CheckReport check_stability(const CenterResult& small, const CenterResult& big);

// Coefficients lambda_{i,j} (0 <= i < n, 0 <= j <= window) of y^i (x) u^j
// solving the recurrence
//   (q^{2(j-1)} - 1) lambda_{i,j-1} + gamma q^{2j} (1 - q^{2(i+1)})/(1 - q^2) lambda_{i+1,j} = 0
// for all i, j >= 0, with lambda outside the index range set to zero.
struct RecurrenceSolution {
  int n = 0, window = 0;
  std::vector<Vec> basis;  // over index i * (window + 1) + j, reduced echelon form
};
RecurrenceSolution recurrence_oracle(int n, const Scalar& q, const Scalar& gamma, int window);
// The solution as vectors in H (x) A, using the exponent of the generator of H
// and of A to place y^i (x) u^j.
std::vector<Vec> recurrence_in_ambient(const RecurrenceSolution& s, const BasedAlgebra& H, const BasedAlgebra& A);

// Cent^l_{A#H}(A) under the braiding of K, mapped through phi^-1 and compared
// with the left center of R_B(A), as subspaces and with the product m Psi^-1.
CheckReport cross_check_smash(const ModuleAlgebra& a, const CenterResult& rb_center);

enum class CenterComparison { IsomorphicAsGraded, Distinguishable, Inconclusive };
struct ComparisonResult {
  CenterComparison outcome = CenterComparison::Inconclusive;
  std::string reason;
  nlohmann::ordered_json signatures;
};
// Per filtration degree: dimension and the traces of the K-generators.
nlohmann::ordered_json center_signature(const CenterResult& c, int up_to);
ComparisonResult compare_centers(const CenterResult& a, const CenterResult& b);
std::string to_string(CenterComparison c);

}  // namespace ydc
