#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ydc/yd.hpp"

namespace ydc {

// Left H-module in K-mod.
struct HModule {
  std::string name;
  HopfPtr H;
  KModule kmod;
  LinearMap action;  // H (x) V -> V

  const SpacePtr& space() const { return kmod.space; }
};

HModule module_of(const ModuleAlgebra& a);
HModule regular_module(const HopfPtr& H);
// a_{V(x)W} = (a_V (x) a_W)(Id (x) Psi_{H,V} (x) Id)(Delta (x) Id)
HModule tensor_hmodule(const HModule& v, const HModule& w);

// a^R on H (x) V.
LinearMap rb_action(const BraidedHopf& H, const KModule& v, const LinearMap& action);
// R_B(V) = (H (x) V, a^R, Delta (x) Id).
YDModule rb_module(const HModule& v);
// R_B(A) with the tensor product algebra structure. Basis labels use
// h_names for the generators of H when given.
YDAlgebra rb_algebra(const ModuleAlgebra& a, const std::vector<std::string>& h_names = {});
// tau_{V,W} = (m_H (x) Id)(Id (x) Psi_{V,H} (x) Id) : R(V)(x)R(W) -> R(V(x)W)
LinearMap lax_tau(const HModule& v, const HModule& w);
// tau is a YD map, and the associativity square commutes on (u, v, w).
CheckReport check_lax_structure(const HModule& u, const HModule& v, const HModule& w);

// m (m (x) S)(Id (x) Psi)(Delta (x) Id)
LinearMap adjoint_action(const BraidedHopf& H);
YDAlgebra adjoint_algebra(const HopfPtr& H);
// m Psi^YD = m and m (Psi^YD)^-1 = m on all basis pairs inside the truncation.
CheckReport check_braided_commutative(const YDAlgebra& a);

// ev : H (x) H^v -> k, extended from generator values by
// <h h', f> = <h', f1><h, f2> and <h, f f'> = <h1, f'><h2, f>.
// The double uses <c, b> := ev(b (x) c).
struct DualPairing {
  HopfPtr H, Hdual;
  LinearMap ev;

  Scalar operator()(const Vec& h, const Vec& f) const;
};

DualPairing make_pairing(HopfPtr H, HopfPtr Hdual, const std::vector<std::vector<Scalar>>& gen_values);
CheckReport check_pairing(const DualPairing& p);

// H^v with product m Psi^-1.
BasedAlgebra psi_inverse_opposite(const BasedAlgebra& A, const QTHopf& qt, const KModule& kmod);
// H^v^{Psi^-1} with a^cor = (ev (x) Id)(Id (x) Delta).
ModAlgPtr coregular_module(const DualPairing& p);

// A # H on A (x) H. When either factor is truncated, basis elements above the
// larger truncation degree are dropped and products leaving the window are
// flagged as overflow.
struct SmashProduct {
  BasedAlgebra alg;
  std::size_t dim_a = 0, dim_h = 0;
  std::vector<std::size_t> tensor_index;  // basis -> a * dim_h + h
  std::vector<long> position;             // tensor index -> basis or -1

  bool full() const { return tensor_index.size() == dim_a * dim_h; }
  Vec from_tensor(const Vec& v) const;  // throws outside the window
  Vec to_tensor(const Vec& v) const;
};
SmashProduct smash_product(const ModuleAlgebra& a);

// phi = Psi_{A,H}^-1 (S^-1 (x) Id) : H (x) A -> A (x) H and its inverse
// Psi_{A,H} (Id (x) S).
LinearMap phi_map(const ModuleAlgebra& a);
LinearMap phi_inverse_map(const ModuleAlgebra& a);

struct Transported {
  LinearMap phi, phi_inv;
  YDModule module;       // phi a^R (Id (x) phi^-1), (Id (x) phi) delta^R phi^-1
  YDModule closed_form;  // the same structure written directly on A (x) H
};
Transported phi_transport(const ModuleAlgebra& a);

// Drinfeld double on H* (x) K (x) H with generators ordered (H*, K, H). The
// cross rules are solved from the pairing relation for primitive generators.
struct Double {
  HopfPtr hopf;
  DualPairing pairing;
  QTPtr qt;
  std::size_t n_dual = 0, n_k = 0, n_h = 0;  // generator counts
  std::map<std::vector<int>, std::size_t> index;  // exponents -> basis

  Vec embed_dual(std::size_t i) const;
  Vec embed_k(std::size_t i) const;
  Vec embed_h(std::size_t i) const;
  Vec embed_k(const Vec& v) const;
  const BasedAlgebra& alg() const { return hopf->alg; }
};
Double drinfeld_double(const DualPairing& p);

// u_q(sl2) on generators (f, k, e) with Delta(k) = k(x)k, Delta(e) = 1(x)e + e(x)k,
// Delta(f) = k^-1(x)f + f(x)1.
HopfPtr uqsl2(int n, const Scalar& q);

// Checks that generator images define an algebra map src -> dst: products of
// basis pairs are preserved and every defining relation of src maps to zero.
CheckReport check_algebra_map(const std::string& subject, const BasedAlgebra& src, const std::vector<Vec>& gen_images,
                              const BasedAlgebra& dst, LinearMap* matrix = nullptr);
// g -> k, x -> f, x* -> k^-1 e, with the inverse k -> g, f -> x, e -> g x*.
CheckReport double_iso_uqsl2(const Double& d, const BraidedHopf& u);

SmashProduct heisenberg_double(const DualPairing& p);
// Compares the smash product with the explicit three-R-matrix product formula
// on pairs from `pairs` (indices into the smash basis).
CheckReport check_heisenberg_formula(const DualPairing& p, const SmashProduct& heis,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
std::vector<std::pair<std::size_t, std::size_t>> generator_pairs(const SmashProduct& s);

// A YD module viewed as a module over the double: K and H act as before and
// H* acts by c.v = <c, v_{-1}> v_0.
struct DoubleModule {
  SpacePtr space;
  std::vector<LinearMap> gens;  // one per generator of the double

  LinearMap word(const std::vector<int>& w) const;
  Vec act(const BasedAlgebra& D, const Vec& element, const Vec& v) const;
};
DoubleModule phi_functor(const YDModule& v, const Double& d);
// Every defining relation of the double acts as zero.
CheckReport check_double_module(const DoubleModule& m, const Double& d);

}  // namespace ydc
