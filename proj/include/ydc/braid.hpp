#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ydc/algebra.hpp"
#include "ydc/report.hpp"

namespace ydc {

// Ordinary quasitriangular Hopf algebra (K, R) generating the ambient
// braided category of K-modules.
struct QTHopf {
  std::string name;
  BasedAlgebra K;
  LinearMap delta, counit, antipode, antipode_inv;
  Vec R, R_inv;  // in K (x) K
};
using QTPtr = std::shared_ptr<const QTHopf>;

// Builds (K, R) from generator data: Delta and S extend (anti)multiplicatively.
QTPtr make_qt(std::string name, BasedAlgebra K, const std::vector<Vec>& gen_delta, const std::vector<Scalar>& gen_counit,
              const std::vector<Vec>& gen_antipode, const Vec& R);

QTPtr trivial_qt();
// k Z_n with R = (1/n) sum q^{-2ij} g^i (x) g^j
QTPtr rmatrix_cyclic(int n, const Scalar& q);
// Sweedler's four-dimensional algebra with the R-matrix family R_xi.
QTPtr rmatrix_sweedler(const Scalar& xi);

CheckReport check_qt(const QTHopf& qt);

// Product in the tensor algebra A (x) B twisted by psi_BA : B(x)A -> A(x)B.
Product tensor_algebra_mul(const BasedAlgebra& A, const BasedAlgebra& B, const LinearMap& psi_BA, const Vec& x,
                           const Vec& y);

// Delta(word) = product of Delta(generators) in (H (x) H, psi).
LinearMap extend_multiplicative(const BasedAlgebra& H, const std::vector<Vec>& gen_images, const BasedAlgebra& A,
                                const BasedAlgebra& B, const LinearMap& psi_BA);
// S(g w) = m psi (S(g) (x) S(w)).
LinearMap extend_antimultiplicative(const BasedAlgebra& H, const std::vector<Vec>& gen_images, const LinearMap& psi_HH);
LinearMap extend_counit(const BasedAlgebra& H, const std::vector<Scalar>& gen_values);

// Left K-module: one action matrix per basis element of K.
struct KModule {
  SpacePtr space;
  std::vector<LinearMap> rho;

  Vec act(const Vec& k, const Vec& v) const;
};

KModule trivial_kmodule(const QTHopf& qt, const SpacePtr& space);
KModule kmodule_from_generators(const QTHopf& qt, const SpacePtr& space, const std::vector<LinearMap>& gen_maps);
KModule tensor_kmodule(const QTHopf& qt, const KModule& v, const KModule& w);
CheckReport check_kmodule(const QTHopf& qt, const KModule& m, const std::string& subject);

// Psi_{V,W}(v (x) w) = R2.w (x) R1.v
LinearMap braiding(const QTHopf& qt, const KModule& v, const KModule& w);
// Inverse of braiding(v, w), as a map W (x) V -> V (x) W.
LinearMap braiding_inv(const QTHopf& qt, const KModule& v, const KModule& w);
// Invertibility, naturality in K and both hexagons of Psi on (u, v, w).
CheckReport check_braiding(const QTHopf& qt, const KModule& u, const KModule& v, const KModule& w);
// Is f : V -> W a K-module map?
bool is_kmodule_map(const KModule& v, const KModule& w, const LinearMap& f, std::string* witness = nullptr);

// Generic Hopf-law sweep for (H, Delta, eps, S) in the category whose
// self-braiding on H is psi_HH. Bialgebra pairs are taken over the full
// basis up to `full_limit` basis elements and over generators otherwise.
CheckReport check_hopf_laws(const std::string& subject, const BasedAlgebra& H, const LinearMap& delta,
                            const LinearMap& counit, const LinearMap& antipode, const LinearMap& antipode_inv,
                            const LinearMap& psi_HH, std::size_t full_limit = 64);

}  // namespace ydc
