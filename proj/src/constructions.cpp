#include "ydc/constructions.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "ydc/kernels.hpp"

namespace ydc {

namespace {

std::string join_label(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + " " + b;
}

KModule respace(const KModule& m, const SpacePtr& s) {
  KModule out;
  out.space = s;
  for (const auto& r : m.rho) out.rho.emplace_back(s, s, r.columns());
  return out;
}

std::map<std::vector<int>, std::size_t> exponent_index(const BasedAlgebra& A) {
  std::map<std::vector<int>, std::size_t> idx;
  for (std::size_t i = 0; i < A.exponents().size(); ++i) idx[A.exponents()[i]] = i;
  return idx;
}

std::string basis_label(const BasedAlgebra& A, std::size_t i, const std::vector<std::string>& names) {
  if (names.empty() || A.exponents().empty()) return A.space()->label(i);
  return monomial_label(names, A.exponents()[i]);
}

// Generator index for each basis element that is a single generator.
std::map<std::size_t, int> generator_positions(const BasedAlgebra& A) {
  std::map<std::size_t, int> pos;
  for (std::size_t g = 0; g < A.generators().size(); ++g)
    if (!A.generators()[g].is_zero()) pos[A.generators()[g].lead()] = static_cast<int>(g);
  return pos;
}

Vec mapped(const Vec& v, const std::function<Vec(std::size_t)>& f) {
  Vec r;
  for (const auto& [i, c] : v) r.axpy(c, f(i));
  return r;
}

}  // namespace

HModule module_of(const ModuleAlgebra& a) { return {a.name, a.H, a.kmod, a.action}; }

HModule regular_module(const HopfPtr& H) { return {H->name, H, H->kmod, H->alg.mult_map()}; }

HModule tensor_hmodule(const HModule& v, const HModule& w) {
  const auto& H = *v.H;
  std::size_t dh = H.alg.dim(), dv = v.space()->dim(), dw = w.space()->dim();
  LinearMap psi_HV = braiding(*H.qt, H.kmod, v.kmod);
  HModule t;
  t.name = v.name + "⊗" + w.name;
  t.H = v.H;
  t.kmod = tensor_kmodule(*H.qt, v.kmod, w.kmod);
  t.action = LinearMap::from_columns(tensor(H.alg.space(), t.space()), t.space(), [&](std::size_t i) {
    Vec x = apply_at(H.delta, Vec::basis(i), 1, dv * dw);
    x = apply_at(psi_HV, x, dh, dw);
    x = apply_at(v.action, x, 1, dh * dw);
    return apply_at(w.action, x, dv, 1);
  });
  return t;
}

LinearMap rb_action(const BraidedHopf& H, const KModule& v, const LinearMap& a_v) {
  const auto& qt = *H.qt;
  const auto& A = H.alg;
  std::size_t dh = A.dim(), dv = v.space->dim();
  LinearMap psi_HH = H.psi(), psi_HV = braiding(qt, H.kmod, v), psi_VH = braiding(qt, v, H.kmod);
  auto rv = tensor(A.space(), v.space);
  return LinearMap::from_columns(tensor(A.space(), rv), rv, [&](std::size_t i) {
    Vec x = apply_at(H.delta, Vec::basis(i), 1, dh * dv);  // h1 h2 h' v
    x = apply_at(psi_HH, x, dh, dv);                        // h1 h'' h2' v
    x = A.mul_at(x, 1, dh * dv).value;
    x = apply_at(H.delta, x, dh, dv);   // a b1 b2 v
    x = apply_at(psi_HV, x, dh * dh, 1);  // a b1 v b2
    x = apply_at(a_v, x, dh, dh);
    x = apply_at(H.antipode, x, dh * dv, 1);
    x = apply_at(psi_VH, x, dh, 1);  // a s w
    return A.mul_at(x, 1, dv).value;
  });
}

YDModule rb_module(const HModule& v) {
  const auto& H = *v.H;
  std::size_t dv = v.space()->dim();
  YDModule r;
  r.name = "R(" + v.name + ")";
  r.H = v.H;
  r.kmod = tensor_kmodule(*H.qt, H.kmod, v.kmod);
  r.action = rb_action(H, v.kmod, v.action);
  r.coaction = LinearMap::from_columns(r.space(), tensor(H.alg.space(), r.space()), [&](std::size_t i) {
    return tensor_vec(H.delta.column(i / dv), Vec::basis(i % dv), dv);
  });
  return r;
}

YDAlgebra rb_algebra(const ModuleAlgebra& a, const std::vector<std::string>& h_names) {
  const auto& H = *a.H;
  const auto& HA = H.alg;
  const auto& A = a.alg;
  std::size_t dh = HA.dim(), da = A.dim(), d = dh * da;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t x = 0; x < da; ++x) {
      labels.push_back(join_label(basis_label(HA, h, h_names), A.space()->label(x)));
      degrees.push_back(HA.degree(h) + A.degree(x));
    }
  auto space = BasedSpace::make("R(" + A.name() + ")", labels, degrees);
  LinearMap psi_AH = braiding(*H.qt, a.kmod, H.kmod);
  std::vector<std::uint8_t> overflow(d * d, 0);
  auto table = kernels::columns(d * d, [&](std::size_t t) {
    std::size_t i = t / d, j = t % d;
    std::size_t h = i / da, x = i % da, h2 = j / da, x2 = j % da;
    Vec r;
    for (const auto& [idx, c] : psi_AH.column(x * dh + h2)) {
      std::size_t hh = idx / da, xx = idx % da;
      // a truncated factor only matters when the other factor is nonzero
      if ((HA.overflows(h, hh) && !A.product(xx, x2).is_zero()) || (A.overflows(xx, x2) && !HA.product(h, hh).is_zero()))
        overflow[t] = 1;
      r.axpy(c, tensor_vec(HA.product(h, hh), A.product(xx, x2), da));
    }
    return r;
  });
  std::vector<std::string> names = h_names.empty() ? HA.generator_names() : h_names;
  std::vector<Vec> gens;
  for (const auto& g : HA.generators()) gens.push_back(tensor_vec(g, A.one(), da));
  for (const auto& g : A.generators()) {
    gens.push_back(tensor_vec(HA.one(), g, da));
  }
  for (const auto& n : A.generator_names()) names.push_back(n);
  int trunc = std::max(HA.truncation(), A.truncation());
  BasedAlgebra alg("R(" + A.name() + ")", space, std::move(table), std::move(overflow),
                   HA.unit_index() * da + A.unit_index(), names, std::move(gens), trunc);
  if (!HA.words().empty() && !A.words().empty()) {
    int nh = static_cast<int>(HA.generator_names().size());
    std::vector<std::vector<int>> words, exps;
    for (std::size_t h = 0; h < dh; ++h)
      for (std::size_t x = 0; x < da; ++x) {
        auto w = HA.words()[h];
        for (int l : A.words()[x]) w.push_back(l + nh);
        auto e = HA.exponents()[h];
        e.insert(e.end(), A.exponents()[x].begin(), A.exponents()[x].end());
        words.push_back(std::move(w));
        exps.push_back(std::move(e));
      }
    alg.set_words(std::move(words), std::move(exps));
  }
  YDModule m = rb_module(module_of(a));
  YDAlgebra out;
  out.mod.name = alg.name();
  out.mod.H = a.H;
  out.mod.kmod = respace(m.kmod, space);
  out.mod.action = LinearMap(tensor(HA.space(), space), space, m.action.columns());
  out.mod.coaction = LinearMap(space, tensor(HA.space(), space), m.coaction.columns());
  out.alg = std::move(alg);
  return out;
}

LinearMap lax_tau(const HModule& v, const HModule& w) {
  const auto& H = *v.H;
  std::size_t dh = H.alg.dim(), dv = v.space()->dim(), dw = w.space()->dim();
  LinearMap psi_VH = braiding(*H.qt, v.kmod, H.kmod);
  auto hv = tensor(H.alg.space(), v.space()), hw = tensor(H.alg.space(), w.space());
  return LinearMap::from_columns(tensor(hv, hw), tensor(H.alg.space(), tensor(v.space(), w.space())),
                                 [&](std::size_t i) {
                                   Vec x = apply_at(psi_VH, Vec::basis(i), dh, dw);
                                   return H.alg.mul_at(x, 1, dv * dw).value;
                                 });
}

CheckReport check_lax_structure(const HModule& u, const HModule& v, const HModule& w) {
  CheckReport rep;
  rep.subject = "lax structure of R";
  const auto& H = *v.H;
  std::size_t dh = H.alg.dim();
  YDModule rv = rb_module(v), rw = rb_module(w);
  YDModule t = yd_tensor(rv, rw);
  YDModule rvw = rb_module(tensor_hmodule(v, w));
  LinearMap tau = lax_tau(v, w);
  std::size_t dt = t.space()->dim();
  auto bad = kernels::first_failure(dh * dt, [&](std::size_t i) {
    return tau.apply(t.action.column(i)) == rvw.action.apply(apply_at(tau, Vec::basis(i), dh, 1));
  });
  rep.add("tau is H-linear", !bad);
  bad = kernels::first_failure(dt, [&](std::size_t i) {
    return apply_at(tau, t.coaction.column(i), dh, 1) == rvw.coaction.apply(tau.column(i));
  });
  rep.add("tau is H-colinear", !bad);
  std::string wit;
  rep.add("tau is K-linear", is_kmodule_map(t.kmod, rvw.kmod, tau, &wit), wit);

  HModule uv = tensor_hmodule(u, v), vw = tensor_hmodule(v, w);
  LinearMap t_uv = lax_tau(u, v), t_vw = lax_tau(v, w), t_uv_w = lax_tau(uv, w), t_u_vw = lax_tau(u, vw);
  std::size_t du = u.space()->dim(), dv = v.space()->dim(), dw = w.space()->dim();
  bad = kernels::first_failure(dh * du * dh * dv * dh * dw, [&](std::size_t i) {
    Vec e = Vec::basis(i);
    return t_uv_w.apply(apply_at(t_uv, e, 1, dh * dw)) == t_u_vw.apply(apply_at(t_vw, e, dh * du, 1));
  });
  rep.add("tau associativity square", !bad);
  return rep;
}

LinearMap adjoint_action(const BraidedHopf& H) {
  const auto& A = H.alg;
  std::size_t d = A.dim();
  LinearMap psi = H.psi();
  return LinearMap::from_columns(tensor(A.space(), A.space()), A.space(), [&](std::size_t i) {
    Vec x = apply_at(H.delta, Vec::basis(i), 1, d);
    x = apply_at(psi, x, d, 1);
    x = apply_at(H.antipode, x, d * d, 1);
    x = A.mul_at(x, 1, d).value;
    return A.mul_at(x, 1, 1).value;
  });
}

YDAlgebra adjoint_algebra(const HopfPtr& H) {
  YDAlgebra a;
  a.mod.name = H->name + " (adjoint)";
  a.mod.H = H;
  a.mod.kmod = H->kmod;
  a.mod.action = adjoint_action(*H);
  a.mod.coaction = H->delta;
  a.alg = H->alg;
  return a;
}

CheckReport check_braided_commutative(const YDAlgebra& a) {
  CheckReport rep;
  rep.subject = a.mod.name;
  const auto& A = a.alg;
  std::size_t d = A.dim();
  LinearMap p = yd_braiding(a.mod, a.mod), pi = yd_braiding_inv(a.mod, a.mod);
  for (int inv = 0; inv < 2; ++inv) {
    const LinearMap& m = inv ? pi : p;
    auto bad = kernels::first_failure(d * d, [&](std::size_t t) {
      if (A.overflows(t / d, t % d)) return true;
      Product r = A.mul_at(m.column(t), 1, 1);
      return r.overflow || r.value == A.product(t / d, t % d);
    });
    rep.add(inv ? "m Psi^-1 = m" : "m Psi = m", !bad,
            bad ? A.space()->label(*bad / d) + " ⊗ " + A.space()->label(*bad % d) : "");
  }
  return rep;
}

Scalar DualPairing::operator()(const Vec& h, const Vec& f) const {
  return ev.apply(tensor_vec(h, f, Hdual->alg.dim())).get(0);
}

DualPairing make_pairing(HopfPtr Hp, HopfPtr Dp, const std::vector<std::vector<Scalar>>& gen_values) {
  const auto& A = Hp->alg;
  const auto& B = Dp->alg;
  if (A.words().empty() || B.words().empty())
    throw std::invalid_argument("make_pairing: both algebras need a presentation");
  std::size_t dh = A.dim(), df = B.dim();
  auto ia = exponent_index(A), ib = exponent_index(B);
  std::vector<std::optional<Scalar>> memo(dh * df);
  std::vector<char> busy(dh * df, 0);
  auto split = [](const BasedAlgebra& X, const std::map<std::vector<int>, std::size_t>& idx, std::size_t i) {
    auto e = X.exponents()[i];
    int g = X.words()[i][0];
    --e[g];
    return std::make_pair(X.generators()[g].lead(), idx.at(e));
  };
  std::function<Scalar(std::size_t, std::size_t)> P = [&](std::size_t h, std::size_t f) -> Scalar {
    auto& m = memo[h * df + f];
    if (m) return *m;
    if (busy[h * df + f]) throw std::runtime_error("make_pairing: recursion does not terminate");
    busy[h * df + f] = 1;
    const auto& wh = A.words()[h];
    const auto& wf = B.words()[f];
    Scalar r(0);
    if (wh.empty()) {
      r = Dp->counit.column(f).get(0);
    } else if (wf.empty()) {
      r = Hp->counit.column(h).get(0);
    } else if (wf.size() >= 2) {
      // <h, g f'> = <h1, f'><h2, g>
      auto [g, rest] = split(B, ib, f);
      for (const auto& [t, c] : Hp->delta.column(h)) {
        Scalar a = P(t / dh, rest);
        if (!a.is_zero()) r += c * a * P(t % dh, g);
      }
    } else if (wh.size() >= 2) {
      // <g h', f> = <h', f1><g, f2>
      auto [g, rest] = split(A, ia, h);
      for (const auto& [t, c] : Dp->delta.column(f)) {
        Scalar a = P(rest, t / df);
        if (!a.is_zero()) r += c * a * P(g, t % df);
      }
    } else {
      r = gen_values.at(wh[0]).at(wf[0]);
    }
    busy[h * df + f] = 0;
    m = r;
    return r;
  };
  std::vector<Vec> cols(dh * df);
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t f = 0; f < df; ++f) cols[h * df + f] = Vec::basis(0, P(h, f));
  DualPairing p;
  p.ev = LinearMap(tensor(A.space(), B.space()), BasedSpace::unit(), std::move(cols));
  p.H = std::move(Hp);
  p.Hdual = std::move(Dp);
  return p;
}

CheckReport check_pairing(const DualPairing& p) {
  CheckReport rep;
  rep.subject = "pairing " + p.H->name + " ⊗ " + p.Hdual->name;
  const auto& A = p.H->alg;
  const auto& B = p.Hdual->alg;
  const auto& qt = *p.H->qt;
  std::size_t dh = A.dim(), df = B.dim(), dk = qt.K.dim();
  std::vector<Scalar> E(dh * df);
  for (std::size_t i = 0; i < dh * df; ++i) E[i] = p.ev.column(i).get(0);
  auto ev = [&](const Vec& h, const Vec& f) {
    Scalar s(0);
    for (const auto& [i, a] : h)
      for (const auto& [j, b] : f) s += a * b * E[i * df + j];
    return s;
  };
  std::string w;
  for (std::size_t f = 0; f < df && w.empty(); ++f)
    if (E[A.unit_index() * df + f] != p.Hdual->counit.column(f).get(0)) w = B.space()->label(f);
  for (std::size_t h = 0; h < dh && w.empty(); ++h)
    if (E[h * df + B.unit_index()] != p.H->counit.column(h).get(0)) w = A.space()->label(h);
  rep.add("pairing with units is the counit", w.empty(), w);

  auto bad = kernels::first_failure(dh * dh * df, [&](std::size_t t) {
    std::size_t h = t / (dh * df), h2 = (t / df) % dh, f = t % df;
    if (A.overflows(h, h2)) return true;
    Scalar rhs(0);
    for (const auto& [s, c] : p.Hdual->delta.column(f)) rhs += c * E[h2 * df + s / df] * E[h * df + s % df];
    return ev(A.product(h, h2), Vec::basis(f)) == rhs;
  });
  rep.add("<h h', f> = <h', f1><h, f2>", !bad);
  bad = kernels::first_failure(dh * df * df, [&](std::size_t t) {
    std::size_t h = t / (df * df), f = (t / df) % df, f2 = t % df;
    if (B.overflows(f, f2)) return true;
    Scalar rhs(0);
    for (const auto& [s, c] : p.H->delta.column(h)) rhs += c * E[(s / dh) * df + f2] * E[(s % dh) * df + f];
    return ev(Vec::basis(h), B.product(f, f2)) == rhs;
  });
  rep.add("<h, f f'> = <h1, f'><h2, f>", !bad);
  bad = kernels::first_failure(dk * dh * df, [&](std::size_t t) {
    std::size_t k = t / (dh * df), h = (t / df) % dh, f = t % df;
    Scalar lhs(0);
    for (const auto& [s, c] : qt.delta.column(k))
      lhs += c * ev(p.H->kmod.rho[s / dk].column(h), p.Hdual->kmod.rho[s % dk].column(f));
    return lhs == qt.counit.column(k).get(0) * E[h * df + f];
  });
  rep.add("pairing is K-invariant", !bad);
  bad = kernels::first_failure(dh * df, [&](std::size_t t) {
    std::size_t h = t / df, f = t % df;
    return ev(p.H->antipode.column(h), Vec::basis(f)) == ev(Vec::basis(h), p.Hdual->antipode.column(f));
  });
  rep.add("<S h, f> = <h, S f>", !bad);
  std::vector<Vec> rows(dh);
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t f = 0; f < df; ++f) rows[h].add(f, E[h * df + f]);
  rep.add("nondegenerate", dh == df && rank(rows) == dh);
  return rep;
}

BasedAlgebra psi_inverse_opposite(const BasedAlgebra& A, const QTHopf& qt, const KModule& kmod) {
  std::size_t d = A.dim();
  LinearMap pi = braiding_inv(qt, kmod, kmod);
  std::vector<std::uint8_t> overflow(d * d, 0);
  auto table = kernels::columns(d * d, [&](std::size_t t) {
    Product p = A.mul_at(pi.column(t), 1, 1);
    if (p.overflow) overflow[t] = 1;
    return p.value;
  });
  bool same = true;
  for (std::size_t t = 0; t < d * d && same; ++t) same = table[t] == A.product(t / d, t % d);
  BasedAlgebra out(A.name() + "^Ψ⁻¹", A.space(), std::move(table), std::move(overflow), A.unit_index(),
                   A.generator_names(), A.generators(), A.truncation());
  if (same) out.set_words(A.words(), A.exponents());
  return out;
}

ModAlgPtr coregular_module(const DualPairing& p) {
  const auto& D = *p.Hdual;
  std::size_t df = D.alg.dim();
  auto m = std::make_shared<ModuleAlgebra>();
  m->name = D.name + "^Ψ⁻¹";
  m->H = p.H;
  m->alg = psi_inverse_opposite(D.alg, *D.qt, D.kmod);
  m->kmod = D.kmod;
  m->action = LinearMap::from_columns(tensor(p.H->alg.space(), D.alg.space()), D.alg.space(), [&](std::size_t i) {
    std::size_t h = i / df, f = i % df;
    Vec r;
    for (const auto& [t, c] : D.delta.column(f)) {
      Scalar e = p.ev.column(h * df + t / df).get(0);
      if (!e.is_zero()) r.add(t % df, c * e);
    }
    return r;
  });
  return m;
}

Vec SmashProduct::from_tensor(const Vec& v) const {
  Vec r;
  for (const auto& [i, c] : v) {
    if (position[i] < 0) throw std::out_of_range("smash product: element outside the truncation window");
    r.add(static_cast<std::size_t>(position[i]), c);
  }
  return r;
}

Vec SmashProduct::to_tensor(const Vec& v) const {
  Vec r;
  for (const auto& [i, c] : v) r.add(tensor_index[i], c);
  return r;
}

SmashProduct smash_product(const ModuleAlgebra& a) {
  const auto& H = *a.H;
  const auto& HA = H.alg;
  const auto& A = a.alg;
  std::size_t dh = HA.dim(), da = A.dim();
  int T = std::max(A.truncation(), HA.truncation());
  SmashProduct s;
  s.dim_a = da;
  s.dim_h = dh;
  s.position.assign(da * dh, -1);
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t h = 0; h < dh; ++h) {
      int deg = A.degree(x) + HA.degree(h);
      if (T >= 0 && deg > T) continue;
      s.position[x * dh + h] = static_cast<long>(s.tensor_index.size());
      s.tensor_index.push_back(x * dh + h);
      labels.push_back(join_label(A.space()->label(x), HA.space()->label(h)));
      degrees.push_back(deg);
    }
  std::size_t d = s.tensor_index.size();
  auto space = BasedSpace::make(A.name() + "#" + HA.name(), labels, degrees);
  LinearMap psi_HA = braiding(*H.qt, H.kmod, a.kmod);
  std::vector<std::uint8_t> overflow(d * d, 0);
  auto table = kernels::columns(d * d, [&](std::size_t t) {
    std::size_t i = s.tensor_index[t / d], j = s.tensor_index[t % d];
    std::size_t x = i / dh, h = i % dh, y = j / dh, k = j % dh;
    Vec r;
    bool over = false;
    for (const auto& [dt, c] : H.delta.column(h)) {
      std::size_t h1 = dt / dh, h2 = dt % dh;
      for (const auto& [pt, e] : psi_HA.column(h2 * da + y)) {
        std::size_t y2 = pt / dh, h3 = pt % dh;
        const Vec& hk = HA.product(h3, k);
        if (HA.overflows(h3, k) && !a.action.column(h1 * da + y2).is_zero()) over = true;
        for (const auto& [z, f] : a.action.column(h1 * da + y2)) {
          if (A.overflows(x, z) && !hk.is_zero()) over = true;
          for (const auto& [xz, g] : A.product(x, z))
            for (const auto& [hh, u] : hk) {
              long pos = s.position[xz * dh + hh];
              if (pos < 0)
                over = true;
              else
                r.add(static_cast<std::size_t>(pos), c * e * f * g * u);
            }
        }
      }
    }
    if (over) overflow[t] = 1;
    return r;
  });
  std::vector<std::string> names = A.generator_names();
  for (const auto& n : HA.generator_names()) names.push_back(n);
  std::vector<Vec> gens;
  auto embed = [&](const Vec& v) {
    Vec r;
    for (const auto& [i, c] : v)
      if (s.position[i] >= 0) r.add(static_cast<std::size_t>(s.position[i]), c);
    return r;
  };
  for (const auto& g : A.generators()) gens.push_back(embed(tensor_vec(g, HA.one(), dh)));
  for (const auto& g : HA.generators()) gens.push_back(embed(tensor_vec(A.one(), g, dh)));
  s.alg = BasedAlgebra(A.name() + "#" + HA.name(), space, std::move(table), std::move(overflow),
                       static_cast<std::size_t>(s.position[A.unit_index() * dh + HA.unit_index()]), names,
                       std::move(gens), T);
  if (!A.words().empty() && !HA.words().empty()) {
    int na = static_cast<int>(A.generator_names().size());
    std::vector<std::vector<int>> words, exps;
    for (auto ti : s.tensor_index) {
      std::size_t x = ti / dh, h = ti % dh;
      auto w = A.words()[x];
      for (int l : HA.words()[h]) w.push_back(l + na);
      auto e = A.exponents()[x];
      e.insert(e.end(), HA.exponents()[h].begin(), HA.exponents()[h].end());
      words.push_back(std::move(w));
      exps.push_back(std::move(e));
    }
    s.alg.set_words(std::move(words), std::move(exps));
  }
  return s;
}

LinearMap phi_map(const ModuleAlgebra& a) {
  const auto& H = *a.H;
  std::size_t da = a.alg.dim();
  LinearMap binv = braiding_inv(*H.qt, a.kmod, H.kmod);  // H(x)A -> A(x)H
  return LinearMap::from_columns(tensor(H.alg.space(), a.alg.space()), tensor(a.alg.space(), H.alg.space()),
                                 [&](std::size_t i) { return binv.apply(apply_at(H.antipode_inv, Vec::basis(i), 1, da)); });
}

LinearMap phi_inverse_map(const ModuleAlgebra& a) {
  const auto& H = *a.H;
  std::size_t da = a.alg.dim();
  LinearMap psi = braiding(*H.qt, a.kmod, H.kmod);  // A(x)H -> H(x)A
  return LinearMap::from_columns(tensor(a.alg.space(), H.alg.space()), tensor(H.alg.space(), a.alg.space()),
                                 [&](std::size_t i) { return psi.apply(apply_at(H.antipode, Vec::basis(i), da, 1)); });
}

Transported phi_transport(const ModuleAlgebra& a) {
  const auto& H = *a.H;
  const auto& qt = *H.qt;
  std::size_t dh = H.alg.dim(), da = a.alg.dim();
  Transported t;
  t.phi = phi_map(a);
  t.phi_inv = phi_inverse_map(a);
  YDModule r = rb_module(module_of(a));
  KModule ah = tensor_kmodule(qt, a.kmod, H.kmod);
  auto hs = H.alg.space();
  auto& m = t.module;
  m.name = a.name + "#" + H.name;
  m.H = a.H;
  m.kmod = ah;
  m.action = LinearMap::from_columns(tensor(hs, ah.space), ah.space, [&](std::size_t i) {
    Vec x = apply_at(t.phi_inv, Vec::basis(i), dh, 1);
    return t.phi.apply(r.action.apply(x));
  });
  m.coaction = LinearMap::from_columns(ah.space, tensor(hs, ah.space), [&](std::size_t i) {
    Vec x = r.coaction.apply(t.phi_inv.column(i));
    return apply_at(t.phi, x, dh, 1);
  });

  HModule reg = regular_module(a.H);
  HModule amod = tensor_hmodule(module_of(a), reg);
  LinearMap binv = braiding_inv(qt, ah, H.kmod);  // H(x)(A(x)H) -> (A(x)H)(x)H
  LinearMap psi = braiding(qt, ah, H.kmod);       // (A(x)H)(x)H -> H(x)(A(x)H)
  auto& c = t.closed_form;
  c.name = m.name + " (closed form)";
  c.H = a.H;
  c.kmod = ah;
  c.action = LinearMap::from_columns(tensor(hs, ah.space), ah.space, [&](std::size_t i) {
    Vec x = apply_at(H.delta, Vec::basis(i), 1, da * dh);
    x = apply_at(H.antipode_inv, x, 1, dh * da * dh);
    x = apply_at(amod.action, x, dh, 1);
    x = binv.apply(x);
    return H.alg.mul_at(x, da, 1).value;
  });
  c.coaction = LinearMap::from_columns(ah.space, tensor(hs, ah.space), [&](std::size_t i) {
    Vec x = apply_at(H.delta, Vec::basis(i), da, 1);
    x = psi.apply(x);
    return apply_at(H.antipode, x, 1, da * dh);
  });
  return t;
}

Vec Double::embed_dual(std::size_t i) const {
  std::vector<int> e(n_dual + n_k + n_h, 0);
  const auto& x = pairing.Hdual->alg.exponents()[i];
  std::copy(x.begin(), x.end(), e.begin());
  return Vec::basis(index.at(e));
}

Vec Double::embed_k(std::size_t i) const {
  std::vector<int> e(n_dual + n_k + n_h, 0);
  const auto& x = qt->K.exponents()[i];
  std::copy(x.begin(), x.end(), e.begin() + n_dual);
  return Vec::basis(index.at(e));
}

Vec Double::embed_h(std::size_t i) const {
  std::vector<int> e(n_dual + n_k + n_h, 0);
  const auto& x = pairing.H->alg.exponents()[i];
  std::copy(x.begin(), x.end(), e.begin() + n_dual + n_k);
  return Vec::basis(index.at(e));
}

Vec Double::embed_k(const Vec& v) const {
  return mapped(v, [&](std::size_t i) { return embed_k(i); });
}

namespace {

struct TermSum {
  std::map<std::vector<int>, Scalar> terms;

  void add(std::vector<int> w, const Scalar& c) {
    if (c.is_zero()) return;
    auto& s = terms[std::move(w)];
    s += c;
  }
  std::vector<Term> out() const {
    std::vector<Term> r;
    for (const auto& [w, c] : terms)
      if (!c.is_zero()) r.push_back({c, w});
    return r;
  }
};

std::vector<int> shifted(const std::vector<int>& w, int off) {
  std::vector<int> r;
  for (int l : w) r.push_back(l + off);
  return r;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void add_component(Presentation& P, const Presentation& c, int off) {
  for (std::size_t g = 0; g < c.generators.size(); ++g) {
    P.generators.push_back(c.generators[g]);
    P.powers.push_back(c.powers[g]);
  }
  for (const auto& s : c.swaps) {
    SwapRule r;
    r.left = s.left + off;
    r.right = s.right + off;
    for (const auto& t : s.rhs) r.rhs.push_back({t.coeff, shifted(t.word, off)});
    P.swaps.push_back(std::move(r));
  }
}

bool primitive(const BraidedHopf& H, std::size_t b) {
  std::size_t d = H.alg.dim(), u = H.alg.unit_index();
  Vec p = Vec::basis(b * d + u) + Vec::basis(u * d + b);
  return H.delta.column(b) == p;
}

}  // namespace

Double drinfeld_double(const DualPairing& p) {
  const auto& H = *p.H;
  const auto& D = *p.Hdual;
  QTPtr qt = H.qt;
  const auto& K = qt->K;
  auto ph = H.alg.presentation(), pd = D.alg.presentation(), pk = K.presentation();
  if (!ph || !pd || !pk) throw std::invalid_argument("drinfeld_double: components need presentations");
  if (H.alg.truncation() >= 0 || D.alg.truncation() >= 0)
    throw std::invalid_argument("drinfeld_double: H and H* must be finite dimensional");
  std::size_t dk = K.dim(), dd = D.alg.dim();
  int nd = static_cast<int>(pd->generators.size()), nk = static_cast<int>(pk->generators.size());
  int od = 0, ok = nd, oh = nd + nk;
  auto hpos = generator_positions(H.alg), dpos = generator_positions(D.alg);
  for (const auto& [b, g] : hpos)
    if (!primitive(H, b)) throw std::invalid_argument("drinfeld_double: generator " + ph->generators[g] + " is not primitive");
  for (const auto& [c, g] : dpos)
    if (!primitive(D, c)) throw std::invalid_argument("drinfeld_double: generator " + pd->generators[g] + " is not primitive");

  Presentation P;
  P.name = "Drin(" + D.name + "," + H.name + ")";
  add_component(P, *pd, od);
  add_component(P, *pk, ok);
  add_component(P, *ph, oh);
  auto kword = [&](std::size_t i) { return shifted(K.words()[i], ok); };
  auto dword = [&](std::size_t i) { return shifted(D.alg.words()[i], od); };
  auto hword = [&](std::size_t i) { return shifted(H.alg.words()[i], oh); };

  // d c = (d1.c) d2
  for (int gk = 0; gk < nk; ++gk) {
    std::size_t db = K.generators()[gk].lead();
    for (const auto& [cb, gc] : dpos) {
      TermSum ts;
      for (const auto& [t, c0] : qt->delta.column(db))
        for (const auto& [f, e] : D.kmod.rho[t / dk].column(cb)) ts.add(concat(dword(f), kword(t % dk)), c0 * e);
      P.swaps.push_back({ok + gk, od + gc, ts.out()});
    }
  }
  // b d = d2 (S^-1(d1).b)
  for (const auto& [bb, gb] : hpos)
    for (int gk = 0; gk < nk; ++gk) {
      std::size_t db = K.generators()[gk].lead();
      TermSum ts;
      for (const auto& [t, c0] : qt->delta.column(db))
        for (const auto& [kk, e] : qt->antipode_inv.column(t / dk))
          for (const auto& [hb, f] : H.kmod.rho[kk].column(bb)) ts.add(concat(kword(t % dk), hword(hb)), c0 * e * f);
      P.swaps.push_back({oh + gb, ok + gk, ts.out()});
    }
  // b c = sum_R F(R1.b (x) R2.c), where the pairing relation for primitive
  // generators reads  sum_{R^-1} (R-1.b)(R-2.c) = F(b (x) c)  with
  // F(b (x) c) = c b + R-1 R'2 <R-2.c, R'1.b> - <c, b>.
  auto pairing_value = [&](const Vec& b, const Vec& c) { return p(b, c); };
  for (const auto& [bb, gb] : hpos)
    for (const auto& [cb, gc] : dpos) {
      TermSum ts;
      for (const auto& [t, r] : qt->R) {
        Vec vb = H.kmod.rho[t / dk].column(bb), vc = D.kmod.rho[t % dk].column(cb);
        for (const auto& [b2, beta] : vb)
          for (const auto& [c2, chi] : vc) {
            if (!hpos.count(b2) || !dpos.count(c2))
              throw std::invalid_argument("drinfeld_double: K does not preserve the generator span");
            Scalar coef = r * beta * chi;
            ts.add({od + dpos.at(c2), oh + hpos.at(b2)}, coef);
            for (const auto& [t0, r0] : qt->R_inv)
              for (const auto& [t1, r1] : qt->R) {
                Scalar v = pairing_value(H.kmod.rho[t1 / dk].column(b2), D.kmod.rho[t0 % dk].column(c2));
                if (v.is_zero()) continue;
                for (const auto& [kk, e] : K.product(t0 / dk, t1 % dk)) ts.add(kword(kk), coef * r0 * r1 * v * e);
              }
            ts.add({}, -coef * pairing_value(Vec::basis(b2), Vec::basis(c2)));
          }
      }
      P.swaps.push_back({oh + gb, od + gc, ts.out()});
    }
  BasedAlgebra alg = build(P);

  Double out;
  out.pairing = p;
  out.qt = qt;
  out.n_dual = nd;
  out.n_k = nk;
  out.n_h = ph->generators.size();
  out.index = exponent_index(alg);
  auto hopf = std::make_shared<BraidedHopf>();
  hopf->name = P.name;
  hopf->qt = trivial_qt();
  hopf->kmod = trivial_kmodule(*hopf->qt, alg.space());
  std::size_t d = alg.dim(), dh = H.alg.dim();
  auto emb_d = [&](const Vec& v) { return mapped(v, [&](std::size_t i) { return out.embed_dual(i); }); };
  auto emb_h = [&](const Vec& v) { return mapped(v, [&](std::size_t i) { return out.embed_h(i); }); };
  std::vector<Vec> dgen, sgen;
  std::vector<Scalar> egen;
  for (int g = 0; g < nd; ++g) {
    std::size_t cb = D.alg.generators()[g].lead();
    Vec dl, sv;
    // Delta(c) = R-1 c2 (x) R-2.c1
    for (const auto& [t, c0] : D.delta.column(cb))
      for (const auto& [t0, r0] : qt->R_inv) {
        Vec left = alg.mul_exact(out.embed_k(t0 / dk), out.embed_dual(t % dd));
        Vec right = emb_d(D.kmod.rho[t0 % dk].column(t / dd));
        dl.axpy(c0 * r0, tensor_vec(left, right, d));
      }
    // S(c) = S_K(R-1) (R-2 . S^-1(c))
    for (const auto& [t0, r0] : qt->R_inv)
      sv.axpy(r0, alg.mul_exact(out.embed_k(qt->antipode.column(t0 / dk)),
                                emb_d(D.kmod.rho[t0 % dk].apply(D.antipode_inv.column(cb)))));
    dgen.push_back(dl);
    sgen.push_back(sv);
    egen.push_back(D.counit.column(cb).get(0));
  }
  for (int g = 0; g < nk; ++g) {
    std::size_t kb = K.generators()[g].lead();
    Vec dl;
    for (const auto& [t, c0] : qt->delta.column(kb)) dl.axpy(c0, tensor_vec(out.embed_k(t / dk), out.embed_k(t % dk), d));
    dgen.push_back(dl);
    sgen.push_back(out.embed_k(qt->antipode.column(kb)));
    egen.push_back(qt->counit.column(kb).get(0));
  }
  for (std::size_t g = 0; g < out.n_h; ++g) {
    std::size_t bb = H.alg.generators()[g].lead();
    Vec dl, sv;
    // Delta(b) = b1 R2 (x) R1.b2
    for (const auto& [t, c0] : H.delta.column(bb))
      for (const auto& [t0, r0] : qt->R) {
        Vec left = alg.mul_exact(out.embed_h(t / dh), out.embed_k(t0 % dk));
        Vec right = emb_h(H.kmod.rho[t0 / dk].column(t % dh));
        dl.axpy(c0 * r0, tensor_vec(left, right, d));
      }
    // S(b) = S_K(R2) (R1 . S(b))
    for (const auto& [t0, r0] : qt->R)
      sv.axpy(r0, alg.mul_exact(out.embed_k(qt->antipode.column(t0 % dk)),
                                emb_h(H.kmod.rho[t0 / dk].apply(H.antipode.column(bb)))));
    dgen.push_back(dl);
    sgen.push_back(sv);
    egen.push_back(H.counit.column(bb).get(0));
  }
  LinearMap fl = flip(alg.space(), alg.space());
  hopf->delta = extend_multiplicative(alg, dgen, alg, alg, fl);
  hopf->counit = extend_counit(alg, egen);
  hopf->antipode = extend_antimultiplicative(alg, sgen, fl);
  hopf->antipode_inv = inverse(hopf->antipode);
  hopf->alg = std::move(alg);
  out.hopf = hopf;
  return out;
}

HopfPtr uqsl2(int n, const Scalar& q) {
  Presentation p;
  p.name = "u_q(sl2)";
  p.generators = {"f", "k", "e"};
  p.powers = {{PowerKind::Nilpotent, n}, {PowerKind::Cyclic, n}, {PowerKind::Nilpotent, n}};
  Scalar q2 = q * q, qm2 = q2.inverse();
  Scalar c = (q - q.inverse()).inverse();
  std::vector<int> kinv(n - 1, 1);
  p.swaps = {{1, 0, {{qm2, {0, 1}}}},
             {2, 1, {{qm2, {1, 2}}}},
             {2, 0, {{Scalar(1), {0, 2}}, {c, {1}}, {-c, kinv}}}};
  BasedAlgebra alg = build(p);
  std::size_t d = alg.dim();
  Vec f = alg.generators()[0], k = alg.generators()[1], e = alg.generators()[2];
  Vec ki = alg.power(k, n - 1), one = alg.one();
  HopfGeneratorData data;
  data.delta = {tensor_vec(ki, f, d) + tensor_vec(f, one, d), tensor_vec(k, k, d),
                tensor_vec(one, e, d) + tensor_vec(e, k, d)};
  data.counit = {Scalar(0), Scalar(1), Scalar(0)};
  data.antipode = {Scalar(-1) * alg.mul_exact(k, f), ki, Scalar(-1) * alg.mul_exact(e, ki)};
  auto qt = trivial_qt();
  KModule km = trivial_kmodule(*qt, alg.space());
  return make_braided_hopf(p.name, qt, std::move(alg), std::move(km), data);
}

CheckReport check_algebra_map(const std::string& subject, const BasedAlgebra& src, const std::vector<Vec>& gen_images,
                              const BasedAlgebra& dst, LinearMap* matrix) {
  CheckReport rep;
  rep.subject = subject;
  auto pres = src.presentation();
  if (!pres || src.words().empty()) throw std::invalid_argument("check_algebra_map: source needs a presentation");
  auto image_word = [&](const std::vector<int>& w) {
    Vec r = dst.one();
    for (int l : w) r = dst.mul_exact(r, gen_images.at(l));
    return r;
  };
  std::size_t d = src.dim();
  auto cols = kernels::columns(d, [&](std::size_t i) { return image_word(src.words()[i]); });
  LinearMap M(src.space(), dst.space(), cols);
  // generator rows suffice: M(g w) = M(g) M(w) for all generators g and
  // basis elements w gives multiplicativity by induction on word length
  std::vector<std::size_t> lefts;
  if (d <= 64) {
    for (std::size_t i = 0; i < d; ++i) lefts.push_back(i);
  } else {
    for (const auto& g : src.generators()) lefts.push_back(g.lead());
  }
  auto bad = kernels::first_failure(lefts.size() * d, [&](std::size_t t) {
    std::size_t i = lefts[t / d], j = t % d;
    if (src.overflows(i, j)) return true;
    Product p = dst.mul(cols[i], cols[j]);
    return p.overflow || M.apply(src.product(i, j)) == p.value;
  });
  rep.add("products preserved", !bad,
          bad ? src.space()->label(lefts[*bad / d]) + "·" + src.space()->label(*bad % d) : "");
  std::string w;
  for (std::size_t g = 0; g < pres->generators.size() && w.empty(); ++g) {
    const auto& pw = pres->powers[g];
    if (pw.kind == PowerKind::Free) continue;
    Vec x = dst.power(gen_images[g], pw.order);
    if (x != (pw.kind == PowerKind::Cyclic ? dst.one() : Vec())) w = pres->generators[g] + " power";
  }
  for (const auto& s : pres->swaps) {
    if (!w.empty()) break;
    Vec lhs = dst.mul_exact(gen_images[s.left], gen_images[s.right]);
    for (const auto& t : s.rhs) lhs.axpy(-t.coeff, image_word(t.word));
    if (!lhs.is_zero()) w = pres->generators[s.left] + " " + pres->generators[s.right];
  }
  rep.add("relations map to zero", w.empty(), w);
  if (matrix) *matrix = M;
  return rep;
}

CheckReport double_iso_uqsl2(const Double& d, const BraidedHopf& u) {
  const auto& D = d.alg();
  const auto& U = u.alg;
  int n = U.presentation()->powers[1].order;
  Vec f = U.generators()[0], k = U.generators()[1], e = U.generators()[2];
  Vec ki = U.power(k, n - 1);
  Vec xs = D.generators()[0], g = D.generators()[1], x = D.generators()[2];
  std::vector<Vec> pi = {U.mul_exact(ki, e), k, f};
  std::vector<Vec> back = {x, g, D.mul_exact(g, xs)};
  LinearMap M, B;
  CheckReport rep = check_algebra_map("π", D, pi, U, &M);
  rep.subject = "π : " + D.name() + " → " + U.name();
  rep.merge(check_algebra_map("π⁻¹", U, back, D, &B), "inverse: ");
  rep.add("dimensions agree", D.dim() == U.dim(), std::to_string(D.dim()) + " vs " + std::to_string(U.dim()));
  rep.add("rank of π is full", rank(M) == D.dim(), std::to_string(rank(M)));
  rep.add("π⁻¹ π = Id", compose(B, M) == LinearMap::identity(D.space()));
  std::string w;
  std::size_t du = U.dim();
  for (std::size_t i = 0; i < D.generators().size() && w.empty(); ++i) {
    Vec lhs;
    for (const auto& [t, c] : d.hopf->delta.apply(D.generators()[i]))
      lhs.axpy(c, tensor_vec(M.column(t / D.dim()), M.column(t % D.dim()), du));
    if (lhs != u.delta.apply(pi[i])) w = D.generator_names()[i];
  }
  rep.add("π preserves the coproduct", w.empty(), w);
  return rep;
}

SmashProduct heisenberg_double(const DualPairing& p) { return smash_product(*coregular_module(p)); }

std::vector<std::pair<std::size_t, std::size_t>> generator_pairs(const SmashProduct& s) {
  std::vector<std::size_t> g{s.alg.unit_index()};
  for (const auto& v : s.alg.generators())
    if (!v.is_zero()) g.push_back(v.lead());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto a : g)
    for (auto b : g) out.emplace_back(a, b);
  return out;
}

CheckReport check_heisenberg_formula(const DualPairing& p, const SmashProduct& heis,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const auto& H = *p.H;
  const auto& D = *p.Hdual;
  const auto& qt = *H.qt;
  const auto& K = qt.K;
  std::size_t dh = H.alg.dim(), dd = D.alg.dim(), dk = K.dim();
  CheckReport rep;
  rep.subject = "Heisenberg double product formula";
  auto act_d = [&](const Vec& k, const Vec& v) { return D.kmod.act(k, v); };
  auto act_h = [&](const Vec& k, const Vec& v) { return H.kmod.act(k, v); };
  std::string wit;
  std::size_t checked = 0;
  for (auto [i, j] : pairs) {
    if (heis.alg.overflows(i, j)) continue;
    std::size_t ti = heis.tensor_index[i], tj = heis.tensor_index[j];
    std::size_t a = ti / dh, g = ti % dh, b = tj / dh, h = tj % dh;
    Vec acc;
    bool over = false;
    for (const auto& [tg, cg] : H.delta.column(g))
      for (const auto& [tb, cb] : D.delta.column(b))
        for (const auto& [t2, r2] : qt.R) {
          Scalar val = p(Vec::basis(tg / dh), D.kmod.rho[t2 % dk].column(tb / dd));
          if (val.is_zero()) continue;
          for (const auto& [t1, r1] : qt.R)
            for (const auto& [t0, r0] : qt.R_inv) {
              Vec lb = act_d(K.product(t0 / dk, t1 % dk), Vec::basis(tb % dd));
              Vec ra = D.kmod.rho[t0 % dk].column(a);
              Product left = D.alg.mul(lb, ra);
              Vec lg = act_h(K.product(t2 / dk, t1 / dk), Vec::basis(tg % dh));
              Product right = H.alg.mul(lg, Vec::basis(h));
              over = over || left.overflow || right.overflow;
              acc.axpy(cg * cb * r2 * val * r1 * r0, tensor_vec(left.value, right.value, dh));
            }
        }
    if (over) continue;
    ++checked;
    if (acc != heis.to_tensor(heis.alg.product(i, j))) {
      wit = heis.alg.space()->label(i) + " · " + heis.alg.space()->label(j);
      break;
    }
  }
  rep.add("smash product matches the explicit formula", wit.empty(), wit, std::to_string(checked) + " pairs");
  return rep;
}

LinearMap DoubleModule::word(const std::vector<int>& w) const {
  LinearMap m = LinearMap::identity(space);
  for (int l : w) m = compose(m, gens.at(l));
  return m;
}

Vec DoubleModule::act(const BasedAlgebra& D, const Vec& element, const Vec& v) const {
  Vec r;
  for (const auto& [i, c] : element) r.axpy(c, word(D.words()[i]).apply(v));
  return r;
}

DoubleModule phi_functor(const YDModule& v, const Double& d) {
  const auto& H = *v.H;
  const auto& Dl = *d.pairing.Hdual;
  std::size_t dv = v.space()->dim();
  DoubleModule m;
  m.space = v.space();
  for (const auto& c : Dl.alg.generators()) {
    std::size_t cb = c.lead();
    m.gens.push_back(LinearMap::from_columns(m.space, m.space, [&](std::size_t i) {
      Vec r;
      for (const auto& [t, c0] : v.coaction.column(i)) {
        Scalar e = d.pairing(Vec::basis(t / dv), Vec::basis(cb));
        if (!e.is_zero()) r.add(t % dv, c0 * e);
      }
      return r;
    }));
  }
  for (const auto& k : d.qt->K.generators()) m.gens.push_back(v.kmod.rho[k.lead()]);
  for (const auto& b : H.alg.generators()) {
    std::size_t bb = b.lead();
    m.gens.push_back(LinearMap::from_columns(m.space, m.space, [&](std::size_t i) { return v.action.column(bb * dv + i); }));
  }
  return m;
}

CheckReport check_double_module(const DoubleModule& m, const Double& d) {
  CheckReport rep;
  rep.subject = "module over " + d.alg().name();
  const auto& pres = *d.alg().presentation();
  LinearMap id = LinearMap::identity(m.space);
  for (std::size_t g = 0; g < pres.generators.size(); ++g) {
    const auto& pw = pres.powers[g];
    if (pw.kind == PowerKind::Free) continue;
    LinearMap x = m.word(std::vector<int>(pw.order, static_cast<int>(g)));
    bool ok = pw.kind == PowerKind::Cyclic ? x == id : x == LinearMap::zero(m.space, m.space);
    rep.add(pres.generators[g] + "^" + std::to_string(pw.order), ok);
  }
  for (const auto& s : pres.swaps) {
    LinearMap lhs = m.word({s.left, s.right});
    for (const auto& t : s.rhs) {
      LinearMap w = m.word(t.word);
      std::vector<Vec> cols = w.columns();
      for (auto& c : cols) c *= t.coeff;
      lhs = lhs - LinearMap(m.space, m.space, cols);
    }
    rep.add(pres.generators[s.left] + " " + pres.generators[s.right] + " rule", lhs == LinearMap::zero(m.space, m.space));
  }
  return rep;
}

}  // namespace ydc
