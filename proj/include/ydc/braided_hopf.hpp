#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ydc/braid.hpp"

namespace ydc {

// Hopf algebra in the category of K-modules.
struct BraidedHopf {
  std::string name;
  QTPtr qt;
  BasedAlgebra alg;
  KModule kmod;
  LinearMap delta, counit, antipode, antipode_inv;

  LinearMap psi() const { return braiding(*qt, kmod, kmod); }
};
using HopfPtr = std::shared_ptr<const BraidedHopf>;

struct HopfGeneratorData {
  std::vector<Vec> delta;  // in H (x) H
  std::vector<Scalar> counit;
  std::vector<Vec> antipode;
};

// Extends generator data: Delta multiplicatively in (H (x) H, Psi_{H,H}),
// S as a braided antihomomorphism, eps multiplicatively.
HopfPtr make_braided_hopf(std::string name, QTPtr qt, BasedAlgebra alg, KModule kmod, const HopfGeneratorData& d);

// k[x]/(x^n) over kZ_n with g.x = q^{2w} x, x primitive. Delta and S use
// the closed forms Delta(x^m) = sum [m choose i]_Q x^i (x) x^{m-i} and
// S(x^m) = (-1)^m Q^{m(m-1)/2} x^m with Q = q^{2w^2}.
HopfPtr nilpotent_line_hopf(const QTPtr& qt, int n, const Scalar& q, int weight = -1, const std::string& gen = "x");
// The tensor unit k as a Hopf algebra.
HopfPtr trivial_hopf(const QTPtr& qt);
// k[x_1..x_v] truncated at total degree D, primitive generators, over
// the trivial K.
HopfPtr polynomial_hopf(int vars, int degree, const std::vector<std::string>& names);

CheckReport check_braided_hopf(const BraidedHopf& h);

// Algebra A in the category of H-modules in K-mod.
struct ModuleAlgebra {
  std::string name;
  HopfPtr H;
  BasedAlgebra alg;
  KModule kmod;
  LinearMap action;  // H (x) A -> A

  Vec act(const Vec& h, const Vec& a) const { return action.apply(tensor_vec(h, a, alg.dim())); }
};
using ModAlgPtr = std::shared_ptr<const ModuleAlgebra>;

// Extends the action of an algebra L on the generators of A to all of A
// through l.(ab) = (l1 . a')(l2' . b), where a' (x) l2' = psi(l2 (x) a).
// gen_images[lg][ag] is the image of A-generator ag under L-generator lg.
// Returns the columns of L (x) A -> A.
LinearMap extend_action(const BasedAlgebra& L, const LinearMap& delta_L, const LinearMap& counit_L,
                        const BasedAlgebra& A, const LinearMap& psi_LA,
                        const std::vector<std::vector<Vec>>& gen_images);

// Splits an action K (x) V -> V into one matrix per K basis element.
KModule kmodule_from_action(const QTHopf& qt, const SpacePtr& space, const LinearMap& action);

ModAlgPtr make_module_algebra(std::string name, HopfPtr H, BasedAlgebra A,
                              const std::vector<std::vector<Vec>>& k_gen_images,
                              const std::vector<std::vector<Vec>>& h_gen_images);

// k[u] truncated at degree D, with the first K generator acting on u by
// `weight` and the nilpotent generator acting by gamma: H's generator when
// H is nontrivial, otherwise K's second generator.
ModAlgPtr module_algebra_polynomial(HopfPtr H, const Scalar& gamma, const Scalar& weight, int degree);
// The unit algebra k with trivial actions.
ModAlgPtr unit_module_algebra(HopfPtr H);

CheckReport check_module_algebra(const ModuleAlgebra& a);

}  // namespace ydc
