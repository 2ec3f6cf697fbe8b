#pragma once

#include <string>

#include "ydc/braided_hopf.hpp"

namespace ydc {

// Left-left Yetter-Drinfeld module over a Hopf algebra H in K-mod.
struct YDModule {
  std::string name;
  HopfPtr H;
  KModule kmod;
  LinearMap action;    // H (x) V -> V
  LinearMap coaction;  // V -> H (x) V

  const SpacePtr& space() const { return kmod.space; }
};

struct YDAlgebra {
  YDModule mod;
  BasedAlgebra alg;
};

CheckReport check_yd(const YDModule& v);
// YD axioms plus: multiplication and unit are H-linear and H-colinear.
CheckReport check_yd_algebra(const YDAlgebra& a);

// (a_W (x) id)(id_H (x) Psi_{V,W})(delta_V (x) id) : V(x)W -> W(x)V
LinearMap yd_braiding(const YDModule& v, const YDModule& w);
// Inverse of yd_braiding(v, w), as a map W(x)V -> V(x)W.
LinearMap yd_braiding_inv(const YDModule& v, const YDModule& w);
YDModule yd_tensor(const YDModule& v, const YDModule& w);
YDModule trivial_yd(const HopfPtr& H);
// Invertibility, hexagons and YD-linearity of the braiding on (u, v, w).
CheckReport check_yd_braiding(const YDModule& u, const YDModule& v, const YDModule& w);

// Bosonization: H # K as an ordinary Hopf algebra, and V as an ordinary
// YD module over it.
struct Bosonized {
  HopfPtr hopf;
  YDModule module;
};
Bosonized bosonize_yd(const YDModule& v);

}  // namespace ydc
