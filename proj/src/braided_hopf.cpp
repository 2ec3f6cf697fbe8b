#include "ydc/braided_hopf.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "ydc/kernels.hpp"

namespace ydc {

namespace {

std::map<std::vector<int>, std::size_t> word_index(const BasedAlgebra& a) {
  std::map<std::vector<int>, std::size_t> m;
  for (std::size_t i = 0; i < a.words().size(); ++i) m[a.words()[i]] = i;
  return m;
}

class ActionExtender {
 public:
  ActionExtender(const BasedAlgebra& L, const LinearMap& delta, const LinearMap& counit, const BasedAlgebra& A,
                 const LinearMap& psi, const std::vector<std::vector<Vec>>& imgs)
      : L_(L), delta_(delta), counit_(counit), A_(A), psi_(psi), imgs_(imgs),
        lw_(word_index(L)), aw_(word_index(A)),
        memo_(L.dim() * A.dim()), busy_(L.dim() * A.dim(), 0) {
    if (A.dim() > 1 && A.words().empty()) throw std::invalid_argument("extend_action: " + A.name() + " has no words");
    if (L.dim() > 1 && L.words().empty()) throw std::invalid_argument("extend_action: " + L.name() + " has no words");
  }

  Vec act(std::size_t l, std::size_t a) {
    std::size_t key = l * A_.dim() + a;
    if (memo_[key]) return *memo_[key];
    if (busy_[key]) throw std::runtime_error("extend_action: recursive dependency at " + L_.space()->label(l) +
                                             " . " + A_.space()->label(a));
    busy_[key] = 1;
    Vec r = compute(l, a);
    busy_[key] = 0;
    memo_[key] = r;
    return r;
  }

  Vec act_vec(std::size_t l, const Vec& a) {
    Vec r;
    for (const auto& [i, c] : a) r.axpy(c, act(l, i));
    return r;
  }

 private:
  Vec compute(std::size_t l, std::size_t a) {
    if (a == A_.unit_index()) return counit_.column(l).get(0) * A_.one();
    if (l == L_.unit_index()) return Vec::basis(a);
    const auto& wl = L_.words()[l];
    if (wl.size() >= 2) {
      std::size_t l0 = L_.generators()[wl[0]].lead();
      std::size_t rest = lw_.at(std::vector<int>(wl.begin() + 1, wl.end()));
      return act_vec(l0, act(rest, a));
    }
    int gl = wl[0];
    const auto& wa = A_.words()[a];
    if (wa.size() == 1) return imgs_.at(gl).at(wa[0]);
    std::size_t a0 = A_.generators()[wa[0]].lead();
    std::size_t arest = aw_.at(std::vector<int>(wa.begin() + 1, wa.end()));
    std::size_t dl = L_.dim();
    Vec r;
    for (const auto& [t, c] : delta_.column(l)) {
      std::size_t l1 = t / dl, l2 = t % dl;
      for (const auto& [s, d] : psi_.column(l2 * A_.dim() + a0)) {
        std::size_t a0p = s / dl, l2p = s % dl;
        r.axpy(c * d, A_.mul_exact(act(l1, a0p), act(l2p, arest)));
      }
    }
    return r;
  }

  const BasedAlgebra& L_;
  const LinearMap& delta_;
  const LinearMap& counit_;
  const BasedAlgebra& A_;
  const LinearMap& psi_;
  const std::vector<std::vector<Vec>>& imgs_;
  std::map<std::vector<int>, std::size_t> lw_, aw_;
  std::vector<std::optional<Vec>> memo_;
  std::vector<char> busy_;
};

std::string label(const BasedAlgebra& a, std::size_t i) { return a.space()->label(i); }

}  // namespace

LinearMap extend_action(const BasedAlgebra& L, const LinearMap& delta_L, const LinearMap& counit_L,
                        const BasedAlgebra& A, const LinearMap& psi_LA,
                        const std::vector<std::vector<Vec>>& gen_images) {
  ActionExtender ext(L, delta_L, counit_L, A, psi_LA, gen_images);
  std::size_t da = A.dim();
  std::vector<Vec> cols(L.dim() * da);
  for (std::size_t l = 0; l < L.dim(); ++l)
    for (std::size_t a = 0; a < da; ++a) cols[l * da + a] = ext.act(l, a);
  return LinearMap(tensor(L.space(), A.space()), A.space(), std::move(cols));
}

KModule kmodule_from_action(const QTHopf& qt, const SpacePtr& space, const LinearMap& action) {
  KModule m;
  m.space = space;
  std::size_t d = space->dim();
  for (std::size_t k = 0; k < qt.K.dim(); ++k) {
    std::vector<Vec> cols(d);
    for (std::size_t i = 0; i < d; ++i) cols[i] = action.column(k * d + i);
    m.rho.emplace_back(space, space, std::move(cols));
  }
  return m;
}

HopfPtr make_braided_hopf(std::string name, QTPtr qt, BasedAlgebra alg, KModule kmod, const HopfGeneratorData& d) {
  auto h = std::make_shared<BraidedHopf>();
  h->name = std::move(name);
  h->qt = std::move(qt);
  h->kmod = std::move(kmod);
  LinearMap psi = braiding(*h->qt, h->kmod, h->kmod);
  h->delta = extend_multiplicative(alg, d.delta, alg, alg, psi);
  h->counit = extend_counit(alg, d.counit);
  h->antipode = extend_antimultiplicative(alg, d.antipode, psi);
  h->antipode_inv = inverse(h->antipode);
  h->alg = std::move(alg);
  return h;
}

HopfPtr nilpotent_line_hopf(const QTPtr& qt, int n, const Scalar& q, int weight, const std::string& gen) {
  Presentation p;
  p.name = "k[" + gen + "]/(" + gen + "^" + std::to_string(n) + ")";
  p.generators = {gen};
  p.powers = {{PowerKind::Nilpotent, n}};
  BasedAlgebra alg = build(p);
  auto h = std::make_shared<BraidedHopf>();
  h->name = p.name;
  h->qt = qt;
  // Basis index m is x^m.
  Scalar q2w = (q * q).pow(weight);
  std::vector<Vec> gcols;
  for (int m = 0; m < n; ++m) gcols.push_back(Vec::basis(m, q2w.pow(m)));
  auto s = alg.space();
  h->kmod = kmodule_from_generators(*qt, s, {LinearMap(s, s, gcols)});
  Scalar Q = (q * q).pow(static_cast<long>(weight) * weight);
  std::vector<Vec> dcols, ecols, scols, sicols;
  for (int m = 0; m < n; ++m) {
    Vec d;
    for (int i = 0; i <= m; ++i) d.add(static_cast<std::size_t>(i) * n + (m - i), q_binomial(m, i, Q));
    dcols.push_back(std::move(d));
    ecols.push_back(Vec::basis(0, Scalar(m == 0 ? 1 : 0)));
    Scalar sc = Q.pow(static_cast<long>(m) * (m - 1) / 2);
    if (m % 2) sc = -sc;
    scols.push_back(Vec::basis(m, sc));
    sicols.push_back(Vec::basis(m, sc.inverse()));
  }
  h->delta = LinearMap(s, tensor(s, s), dcols);
  h->counit = LinearMap(s, BasedSpace::unit(), ecols);
  h->antipode = LinearMap(s, s, scols);
  h->antipode_inv = LinearMap(s, s, sicols);
  h->alg = std::move(alg);
  return h;
}

HopfPtr trivial_hopf(const QTPtr& qt) {
  Presentation p;
  p.name = "k";
  BasedAlgebra alg = build(p);
  KModule km = trivial_kmodule(*qt, alg.space());
  return make_braided_hopf("k", qt, std::move(alg), std::move(km), {});
}

HopfPtr polynomial_hopf(int vars, int degree, const std::vector<std::string>& names) {
  Presentation p;
  p.generators = names;
  p.name = "k[";
  for (int i = 0; i < vars; ++i) {
    p.powers.push_back({PowerKind::Free, 0});
    p.name += (i ? "," : "") + names.at(i);
  }
  p.name += "]";
  p.truncation = degree;
  BasedAlgebra alg = build(p);
  auto qt = trivial_qt();
  std::size_t d = alg.dim();
  HopfGeneratorData data;
  for (int i = 0; i < vars; ++i) {
    std::size_t g = alg.generators()[i].lead();
    Vec dl;
    dl.add(g * d + alg.unit_index(), 1);
    dl.add(alg.unit_index() * d + g, 1);
    data.delta.push_back(dl);
    data.counit.push_back(Scalar(0));
    data.antipode.push_back(Vec::basis(g, Scalar(-1)));
  }
  KModule km = trivial_kmodule(*qt, alg.space());
  return make_braided_hopf(p.name, qt, std::move(alg), std::move(km), data);
}

CheckReport check_braided_hopf(const BraidedHopf& h) {
  const auto& qt = *h.qt;
  LinearMap psi = h.psi();
  CheckReport rep = check_hopf_laws(h.name, h.alg, h.delta, h.counit, h.antipode, h.antipode_inv, psi);
  rep.merge(check_kmodule(qt, h.kmod, h.name));
  KModule hh = tensor_kmodule(qt, h.kmod, h.kmod);
  KModule unit = trivial_kmodule(qt, BasedSpace::unit());
  std::string w;
  rep.add("Delta is K-linear", is_kmodule_map(h.kmod, hh, h.delta, &w), w);
  w.clear();
  rep.add("eps is K-linear", is_kmodule_map(h.kmod, unit, h.counit, &w), w);
  w.clear();
  rep.add("S is K-linear", is_kmodule_map(h.kmod, h.kmod, h.antipode, &w), w);
  // K-module algebra: k.(ab) = (k1.a)(k2.b)
  const auto& H = h.alg;
  std::size_t d = H.dim(), dk = qt.K.dim();
  auto bad = kernels::first_failure(dk * d * d, [&](std::size_t t) {
    std::size_t k = t / (d * d), a = (t / d) % d, b = t % d;
    if (H.overflows(a, b)) return true;
    Vec lhs = h.kmod.rho[k].apply(H.product(a, b));
    Vec rhs = hh.rho[k].apply(Vec::basis(a * d + b));
    Product p = H.mul_at(rhs, 1, 1);
    return p.overflow || lhs == p.value;
  });
  rep.add("multiplication is K-linear", !bad,
          bad ? label(qt.K, *bad / (d * d)) + " on " + label(H, (*bad / d) % d) + "·" + label(H, *bad % d) : "");
  return rep;
}

ModAlgPtr make_module_algebra(std::string name, HopfPtr H, BasedAlgebra A,
                              const std::vector<std::vector<Vec>>& k_gen_images,
                              const std::vector<std::vector<Vec>>& h_gen_images) {
  const QTHopf& qt = *H->qt;
  auto m = std::make_shared<ModuleAlgebra>();
  m->name = std::move(name);
  LinearMap kflip = flip(qt.K.space(), A.space());
  LinearMap kact = extend_action(qt.K, qt.delta, qt.counit, A, kflip, k_gen_images);
  m->kmod = kmodule_from_action(qt, A.space(), kact);
  LinearMap psi_HA = braiding(qt, H->kmod, m->kmod);
  m->action = extend_action(H->alg, H->delta, H->counit, A, psi_HA, h_gen_images);
  m->alg = std::move(A);
  m->H = std::move(H);
  return m;
}

ModAlgPtr module_algebra_polynomial(HopfPtr H, const Scalar& gamma, const Scalar& weight, int degree) {
  Presentation p;
  p.name = "k[u]";
  p.generators = {"u"};
  p.powers = {{PowerKind::Free, 0}};
  p.truncation = degree;
  BasedAlgebra A = build(p);
  const QTHopf& qt = *H->qt;
  std::size_t u = A.generators()[0].lead();
  std::size_t nk = qt.K.generator_names().size(), nh = H->alg.generator_names().size();
  std::vector<std::vector<Vec>> kimg(nk, std::vector<Vec>(1)), himg(nh, std::vector<Vec>(1));
  if (nk > 0) kimg[0][0] = Vec::basis(u, weight);
  if (nh > 0) {
    himg[0][0] = gamma * A.one();
  } else if (nk > 1) {
    kimg[1][0] = gamma * A.one();
  }
  return make_module_algebra("A", std::move(H), std::move(A), kimg, himg);
}

ModAlgPtr unit_module_algebra(HopfPtr H) {
  Presentation p;
  p.name = "k";
  BasedAlgebra A = build(p);
  std::size_t nk = H->qt->K.generator_names().size(), nh = H->alg.generator_names().size();
  return make_module_algebra("k", std::move(H), std::move(A), std::vector<std::vector<Vec>>(nk),
                             std::vector<std::vector<Vec>>(nh));
}

CheckReport check_module_algebra(const ModuleAlgebra& m) {
  const QTHopf& qt = *m.H->qt;
  const auto& H = m.H->alg;
  const auto& A = m.alg;
  CheckReport rep = check_associative(A);
  rep.subject = m.name;
  rep.merge(check_kmodule(qt, m.kmod, m.name));
  std::size_t d = A.dim(), dk = qt.K.dim(), dh = H.dim();
  KModule aa = tensor_kmodule(qt, m.kmod, m.kmod);
  auto bad = kernels::first_failure(dk * d * d, [&](std::size_t t) {
    std::size_t k = t / (d * d), a = (t / d) % d, b = t % d;
    if (A.overflows(a, b)) return true;
    Product p = A.mul_at(aa.rho[k].apply(Vec::basis(a * d + b)), 1, 1);
    return p.overflow || m.kmod.rho[k].apply(A.product(a, b)) == p.value;
  });
  rep.add("K-module algebra", !bad,
          bad ? label(qt.K, *bad / (d * d)) + " on " + label(A, (*bad / d) % d) + "·" + label(A, *bad % d) : "");

  std::string w;
  for (std::size_t a = 0; a < d && w.empty(); ++a)
    if (m.act(H.one(), Vec::basis(a)) != Vec::basis(a)) w = label(A, a);
  rep.add("1 acts trivially", w.empty(), w);

  bad = kernels::first_failure(dh * dh * d, [&](std::size_t t) {
    std::size_t h1 = t / (dh * d), h2 = (t / d) % dh, a = t % d;
    if (H.overflows(h1, h2)) return true;
    return m.act(H.product(h1, h2), Vec::basis(a)) == m.act(Vec::basis(h1), m.act(Vec::basis(h2), Vec::basis(a)));
  });
  rep.add("action associative", !bad,
          bad ? label(H, *bad / (dh * d)) + "," + label(H, (*bad / d) % dh) + " on " + label(A, *bad % d) : "");

  LinearMap psi_HA = braiding(qt, m.H->kmod, m.kmod);
  bad = kernels::first_failure(dh * d * d, [&](std::size_t t) {
    std::size_t h = t / (d * d), a = (t / d) % d, b = t % d;
    if (A.overflows(a, b)) return true;
    Vec lhs = m.act(Vec::basis(h), A.product(a, b));
    // Delta h (x) a (x) b -> h1 (x) psi(h2 (x) a) (x) b -> (h1.a')(h2'.b)
    Vec v = tensor_vec(tensor_vec(m.H->delta.column(h), Vec::basis(a), d), Vec::basis(b), d);
    v = apply_at(psi_HA, v, dh, d);
    v = apply_at(m.action, v, 1, dh * d);
    v = apply_at(m.action, v, d, 1);
    Product p = A.mul_at(v, 1, 1);
    return p.overflow || lhs == p.value;
  });
  rep.add("module algebra law", !bad,
          bad ? label(H, *bad / (d * d)) + " on " + label(A, (*bad / d) % d) + "·" + label(A, *bad % d) : "");

  w.clear();
  for (std::size_t h = 0; h < dh && w.empty(); ++h)
    if (m.act(Vec::basis(h), A.one()) != m.H->counit.column(h).get(0) * A.one()) w = label(H, h);
  rep.add("h.1 = eps(h)1", w.empty(), w);

  KModule ha = tensor_kmodule(qt, m.H->kmod, m.kmod);
  w.clear();
  rep.add("action is K-linear", is_kmodule_map(ha, m.kmod, m.action, &w), w);
  return rep;
}

}  // namespace ydc
