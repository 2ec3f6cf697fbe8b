#include "ydc/yd.hpp"

#include <stdexcept>

#include "ydc/kernels.hpp"

namespace ydc {

namespace {

std::string lab(const SpacePtr& s, std::size_t i) { return s->label(i); }

}  // namespace

CheckReport check_yd(const YDModule& v) {
  const auto& H = *v.H;
  const auto& qt = *H.qt;
  const auto& A = H.alg;
  std::size_t dh = A.dim(), dv = v.space()->dim();
  CheckReport rep = check_kmodule(qt, v.kmod, v.name);
  rep.subject = v.name;

  std::string w;
  for (std::size_t i = 0; i < dv && w.empty(); ++i)
    if (v.action.apply(Vec::basis(A.unit_index() * dv + i)) != Vec::basis(i)) w = lab(v.space(), i);
  rep.add("1 acts trivially", w.empty(), w);

  auto act = [&](const Vec& h, const Vec& x) { return v.action.apply(tensor_vec(h, x, dv)); };
  auto bad = kernels::first_failure(dh * dh * dv, [&](std::size_t t) {
    std::size_t a = t / (dh * dv), b = (t / dv) % dh, i = t % dv;
    if (A.overflows(a, b)) return true;
    return act(A.product(a, b), Vec::basis(i)) == act(Vec::basis(a), act(Vec::basis(b), Vec::basis(i)));
  });
  rep.add("action associative", !bad,
          bad ? lab(A.space(), *bad / (dh * dv)) + "," + lab(A.space(), (*bad / dv) % dh) + " on " +
                    lab(v.space(), *bad % dv)
              : "");

  w.clear();
  for (std::size_t i = 0; i < dv && w.empty(); ++i) {
    const Vec& c = v.coaction.column(i);
    if (apply_at(H.delta, c, 1, dv) != apply_at(v.coaction, c, dh, 1)) w = lab(v.space(), i);
  }
  rep.add("coaction coassociative", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < dv && w.empty(); ++i)
    if (apply_at(H.counit, v.coaction.column(i), 1, dv) != Vec::basis(i)) w = lab(v.space(), i);
  rep.add("coaction counital", w.empty(), w);

  KModule hv = tensor_kmodule(qt, H.kmod, v.kmod);
  w.clear();
  rep.add("action is K-linear", is_kmodule_map(hv, v.kmod, v.action, &w), w);
  w.clear();
  rep.add("coaction is K-linear", is_kmodule_map(v.kmod, hv, v.coaction, &w), w);

  LinearMap psi_HH = H.psi();
  LinearMap psi_HV = braiding(qt, H.kmod, v.kmod);
  LinearMap psi_VH = braiding(qt, v.kmod, H.kmod);
  bad = kernels::first_failure(dh * dv, [&](std::size_t t) {
    Vec e = Vec::basis(t);
    Vec l = apply_at(H.delta, e, 1, dv);
    l = apply_at(v.coaction, l, dh * dh, 1);
    l = apply_at(psi_HH, l, dh, dv);
    l = A.mul_at(l, 1, dh * dv).value;
    l = apply_at(v.action, l, dh, 1);
    Vec r = apply_at(H.delta, e, 1, dv);
    r = apply_at(psi_HV, r, dh, 1);
    r = apply_at(v.action, r, 1, dh);
    r = apply_at(v.coaction, r, 1, dh);
    r = apply_at(psi_VH, r, dh, 1);
    r = A.mul_at(r, 1, dv).value;
    return l == r;
  });
  rep.add("YD compatibility", !bad, bad ? lab(A.space(), *bad / dv) + " ⊗ " + lab(v.space(), *bad % dv) : "");
  return rep;
}

CheckReport check_yd_algebra(const YDAlgebra& a) {
  CheckReport rep = check_yd(a.mod);
  rep.merge(check_associative(a.alg));
  const auto& H = *a.mod.H;
  const auto& A = a.alg;
  std::size_t dh = H.alg.dim(), d = A.dim();
  YDModule aa = yd_tensor(a.mod, a.mod);
  auto bad = kernels::first_failure(dh * d * d, [&](std::size_t t) {
    std::size_t h = t / (d * d), x = (t / d) % d, y = t % d;
    if (A.overflows(x, y)) return true;
    Vec lhs = a.mod.action.apply(tensor_vec(Vec::basis(h), A.product(x, y), d));
    Product rhs = A.mul_at(aa.action.column(h * d * d + x * d + y), 1, 1);
    return rhs.overflow || lhs == rhs.value;
  });
  rep.add("multiplication H-linear", !bad,
          bad ? lab(H.alg.space(), *bad / (d * d)) + " on " + lab(A.space(), (*bad / d) % d) + "·" +
                    lab(A.space(), *bad % d)
              : "");
  bad = kernels::first_failure(d * d, [&](std::size_t t) {
    std::size_t x = t / d, y = t % d;
    if (A.overflows(x, y)) return true;
    Vec lhs = a.mod.coaction.apply(A.product(x, y));
    Product rhs = A.mul_at(aa.coaction.column(t), dh, 1);
    return rhs.overflow || lhs == rhs.value;
  });
  rep.add("multiplication H-colinear", !bad, bad ? lab(A.space(), *bad / d) + "·" + lab(A.space(), *bad % d) : "");
  std::string w;
  for (std::size_t h = 0; h < dh && w.empty(); ++h)
    if (a.mod.action.apply(tensor_vec(Vec::basis(h), A.one(), d)) != H.counit.column(h).get(0) * A.one())
      w = lab(H.alg.space(), h);
  rep.add("unit H-linear", w.empty(), w);
  rep.add("unit H-colinear", a.mod.coaction.apply(A.one()) == tensor_vec(H.alg.one(), A.one(), d));
  KModule km = a.mod.kmod;
  KModule kk = tensor_kmodule(*H.qt, km, km);
  w.clear();
  bool mult_k = true;
  for (std::size_t k = 0; k < km.rho.size() && mult_k; ++k)
    for (std::size_t t = 0; t < d * d && mult_k; ++t) {
      std::size_t x = t / d, y = t % d;
      if (A.overflows(x, y)) continue;
      Product p = A.mul_at(kk.rho[k].column(t), 1, 1);
      if (!p.overflow && p.value != km.rho[k].apply(A.product(x, y))) {
        mult_k = false;
        w = lab(A.space(), x) + "·" + lab(A.space(), y);
      }
    }
  rep.add("multiplication K-linear", mult_k, w);
  return rep;
}

LinearMap yd_braiding(const YDModule& v, const YDModule& w) {
  const auto& qt = *v.H->qt;
  std::size_t dh = v.H->alg.dim(), dv = v.space()->dim(), dw = w.space()->dim();
  LinearMap psi = braiding(qt, v.kmod, w.kmod);
  return LinearMap::from_columns(tensor(v.space(), w.space()), tensor(w.space(), v.space()), [&](std::size_t i) {
    Vec x = apply_at(v.coaction, Vec::basis(i), 1, dw);
    x = apply_at(psi, x, dh, 1);
    return apply_at(w.action, x, 1, dv);
  });
}

LinearMap yd_braiding_inv(const YDModule& v, const YDModule& w) {
  const auto& H = *v.H;
  const auto& qt = *H.qt;
  std::size_t dv = v.space()->dim(), dw = w.space()->dim();
  LinearMap inv_vh = braiding_inv(qt, v.kmod, H.kmod);  // H(x)V -> V(x)H
  LinearMap inv_vw = braiding_inv(qt, v.kmod, w.kmod);  // W(x)V -> V(x)W
  LinearMap inv_hw = braiding_inv(qt, H.kmod, w.kmod);  // W(x)H -> H(x)W
  std::size_t dh = H.alg.dim();
  return LinearMap::from_columns(tensor(w.space(), v.space()), tensor(v.space(), w.space()), [&](std::size_t i) {
    Vec x = apply_at(v.coaction, Vec::basis(i), dw, 1);  // W H V
    x = apply_at(inv_vh, x, dw, 1);                      // W V H
    x = apply_at(inv_vw, x, 1, dh);                      // V W H
    x = apply_at(H.antipode_inv, x, dv * dw, 1);
    x = apply_at(inv_hw, x, dv, 1);                      // V H W
    return apply_at(w.action, x, dv, 1);
  });
}

YDModule yd_tensor(const YDModule& v, const YDModule& w) {
  const auto& H = *v.H;
  const auto& qt = *H.qt;
  std::size_t dh = H.alg.dim(), dv = v.space()->dim(), dw = w.space()->dim();
  YDModule t;
  t.name = v.name + "⊗" + w.name;
  t.H = v.H;
  t.kmod = tensor_kmodule(qt, v.kmod, w.kmod);
  LinearMap psi_HV = braiding(qt, H.kmod, v.kmod);
  LinearMap psi_VH = braiding(qt, v.kmod, H.kmod);
  t.action = LinearMap::from_columns(tensor(H.alg.space(), t.space()), t.space(), [&](std::size_t i) {
    Vec x = apply_at(H.delta, Vec::basis(i), 1, dv * dw);
    x = apply_at(psi_HV, x, dh, dw);
    x = apply_at(v.action, x, 1, dh * dw);
    return apply_at(w.action, x, dv, 1);
  });
  t.coaction = LinearMap::from_columns(t.space(), tensor(H.alg.space(), t.space()), [&](std::size_t i) {
    Vec x = apply_at(v.coaction, Vec::basis(i), 1, dw);
    x = apply_at(w.coaction, x, dh * dv, 1);
    x = apply_at(psi_VH, x, dh, dw);
    return H.alg.mul_at(x, 1, dv * dw).value;
  });
  return t;
}

YDModule trivial_yd(const HopfPtr& H) {
  YDModule t;
  t.name = "k";
  t.H = H;
  t.kmod = trivial_kmodule(*H->qt, BasedSpace::unit());
  std::vector<Vec> act(H->alg.dim());
  for (std::size_t h = 0; h < act.size(); ++h) act[h] = H->counit.column(h);
  t.action = LinearMap(tensor(H->alg.space(), t.space()), t.space(), act);
  t.coaction = LinearMap(t.space(), tensor(H->alg.space(), t.space()), {Vec::basis(H->alg.unit_index())});
  return t;
}

CheckReport check_yd_braiding(const YDModule& u, const YDModule& v, const YDModule& w) {
  CheckReport rep;
  rep.subject = "YD braiding";
  LinearMap p = yd_braiding(u, v), pi = yd_braiding_inv(u, v);
  rep.add("inverse", compose(pi, p) == LinearMap::identity(p.domain()) &&
                         compose(p, pi) == LinearMap::identity(p.codomain()));
  YDModule uv = yd_tensor(u, v), vu = yd_tensor(v, u);
  std::string wit;
  rep.add("K-linear", is_kmodule_map(uv.kmod, vu.kmod, p, &wit), wit);
  // H-linear and H-colinear
  std::size_t dh = u.H->alg.dim(), duv = uv.space()->dim();
  bool lin = true, colin = true;
  for (std::size_t i = 0; i < dh * duv && lin; ++i)
    lin = p.apply(uv.action.column(i)) == vu.action.apply(apply_at(p, Vec::basis(i), dh, 1));
  for (std::size_t i = 0; i < duv && colin; ++i)
    colin = apply_at(p, uv.coaction.column(i), dh, 1) == vu.coaction.apply(p.column(i));
  rep.add("H-linear", lin);
  rep.add("H-colinear", colin);
  std::size_t du = u.space()->dim(), dv = v.space()->dim(), dw = w.space()->dim();
  LinearMap p_uv_w = yd_braiding(uv, w), p_u_vw = yd_braiding(u, yd_tensor(v, w));
  LinearMap p_uw = yd_braiding(u, w), p_vw = yd_braiding(v, w), p_uv = p;
  bool hex1 = true, hex2 = true;
  for (std::size_t i = 0; i < du * dv * dw && (hex1 || hex2); ++i) {
    Vec e = Vec::basis(i);
    hex1 = hex1 && p_uv_w.apply(e) == apply_at(p_uw, apply_at(p_vw, e, du, 1), 1, dv);
    hex2 = hex2 && p_u_vw.apply(e) == apply_at(p_uw, apply_at(p_uv, e, 1, dw), dv, 1);
  }
  rep.add("hexagon (U⊗V, W)", hex1);
  rep.add("hexagon (U, V⊗W)", hex2);
  return rep;
}

Bosonized bosonize_yd(const YDModule& v) {
  const auto& H = *v.H;
  const auto& qt = *H.qt;
  const auto& K = qt.K;
  const auto& HA = H.alg;
  std::size_t dh = HA.dim(), dk = K.dim(), dv = v.space()->dim();
  auto space = tensor(HA.space(), K.space());
  std::size_t d = dh * dk;
  // (h (x) k)(h' (x) k') = h (k1.h') (x) k2 k'
  auto smash = [&](std::size_t a, std::size_t b) {
    std::size_t h = a / dk, k = a % dk, h2 = b / dk, k2 = b % dk;
    Vec r;
    for (const auto& [t, c] : qt.delta.column(k)) {
      Vec kh = H.kmod.rho[t / dk].column(h2);
      Vec hh = HA.mul_exact(Vec::basis(h), kh);
      Vec kk = K.product(t % dk, k2);
      r.axpy(c, tensor_vec(hh, kk, dk));
    }
    return r;
  };
  std::vector<Vec> table(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) table[a * d + b] = smash(a, b);
  std::vector<std::string> gnames;
  std::vector<Vec> gens;
  for (std::size_t g = 0; g < HA.generators().size(); ++g) {
    gnames.push_back(HA.generator_names()[g]);
    gens.push_back(tensor_vec(HA.generators()[g], K.one(), dk));
  }
  for (std::size_t g = 0; g < K.generators().size(); ++g) {
    gnames.push_back(K.generator_names()[g]);
    gens.push_back(tensor_vec(HA.one(), K.generators()[g], dk));
  }
  BasedAlgebra B(H.name + "#" + qt.name, space, std::move(table), {}, HA.unit_index() * dk + K.unit_index(), gnames,
                 gens, -1);
  // K-coaction on H: h -> R2 (x) R1.h
  auto kco = [&](std::size_t h) {
    Vec r;
    for (const auto& [t, c] : qt.R) r.axpy(c, tensor_vec(Vec::basis(t % dk), H.kmod.rho[t / dk].column(h), dh));
    return r;  // K (x) H
  };
  // Delta(h (x) k) = h1 (x) (h2)_{-1} k1 (x) (h2)_0 (x) k2
  LinearMap delta = LinearMap::from_columns(space, tensor(space, space), [&](std::size_t i) {
    std::size_t h = i / dk, k = i % dk;
    Vec r;
    for (const auto& [t, c] : H.delta.column(h)) {
      std::size_t h1 = t / dh, h2 = t % dh;
      for (const auto& [s, e] : kco(h2)) {
        std::size_t km = s / dh, h0 = s % dh;
        for (const auto& [u, f] : qt.delta.column(k)) {
          std::size_t k1 = u / dk, k2 = u % dk;
          for (const auto& [kk, g] : K.product(km, k1)) {
            std::size_t left = h1 * dk + kk, right = h0 * dk + k2;
            r.add(left * d + right, c * e * f * g);
          }
        }
      }
    }
    return r;
  });
  std::vector<Vec> eps(d);
  for (std::size_t i = 0; i < d; ++i)
    eps[i] = Vec::basis(0, H.counit.column(i / dk).get(0) * qt.counit.column(i % dk).get(0));
  LinearMap counit(space, BasedSpace::unit(), eps);
  // S(h (x) k) = (1 (x) S_K(h_{-1} k)) (S_H(h_0) (x) 1)
  LinearMap antipode = LinearMap::from_columns(space, space, [&](std::size_t i) {
    std::size_t h = i / dk, k = i % dk;
    Vec r;
    for (const auto& [s, e] : kco(h)) {
      std::size_t km = s / dh, h0 = s % dh;
      Vec sk = qt.antipode.apply(K.product(km, k));
      Vec left = tensor_vec(HA.one(), sk, dk);
      Vec right = tensor_vec(H.antipode.column(h0), K.one(), dk);
      r.axpy(e, B.mul_exact(left, right));
    }
    return r;
  });
  auto tq = trivial_qt();
  auto hopf = std::make_shared<BraidedHopf>();
  hopf->name = B.name();
  hopf->qt = tq;
  hopf->kmod = trivial_kmodule(*tq, space);
  hopf->delta = std::move(delta);
  hopf->counit = std::move(counit);
  hopf->antipode = std::move(antipode);
  hopf->antipode_inv = inverse(hopf->antipode);
  hopf->alg = std::move(B);

  Bosonized out;
  out.hopf = hopf;
  out.module.name = v.name + " (bosonized)";
  out.module.H = hopf;
  out.module.kmod = trivial_kmodule(*tq, v.space());
  out.module.action = LinearMap::from_columns(tensor(space, v.space()), v.space(), [&](std::size_t i) {
    std::size_t hk = i / dv, x = i % dv;
    Vec kx = v.kmod.rho[hk % dk].column(x);
    return v.action.apply(tensor_vec(Vec::basis(hk / dk), kx, dv));
  });
  // v -> v_{-1} (x) R2 (x) R1.v_0
  out.module.coaction = LinearMap::from_columns(v.space(), tensor(space, v.space()), [&](std::size_t i) {
    Vec r;
    for (const auto& [t, c] : v.coaction.column(i)) {
      std::size_t h = t / dv, x = t % dv;
      for (const auto& [s, e] : qt.R) {
        Vec rx = v.kmod.rho[s / dk].column(x);
        r.axpy(c * e, tensor_vec(Vec::basis(h * dk + s % dk), rx, dv));
      }
    }
    return r;
  });
  return out;
}

}  // namespace ydc
