#include "ydc/braid.hpp"

#include <stdexcept>

#include "ydc/kernels.hpp"

namespace ydc {

namespace {

Vec unit_tensor(const BasedAlgebra& A, const BasedAlgebra& B) {
  return Vec::basis(A.unit_index() * B.dim() + B.unit_index());
}

// Componentwise product in K (x) K (x) K.
Vec mul3(const BasedAlgebra& K, const Vec& x, const Vec& y) {
  std::size_t d = K.dim();
  Vec r;
  for (const auto& [i, c] : x) {
    std::size_t a1 = i / (d * d), a2 = (i / d) % d, a3 = i % d;
    for (const auto& [j, e] : y) {
      std::size_t b1 = j / (d * d), b2 = (j / d) % d, b3 = j % d;
      Vec t = tensor_vec(tensor_vec(K.product(a1, b1), K.product(a2, b2), d), K.product(a3, b3), d);
      r.axpy(c * e, t);
    }
  }
  return r;
}

}  // namespace

Product tensor_algebra_mul(const BasedAlgebra& A, const BasedAlgebra& B, const LinearMap& psi_BA, const Vec& x,
                           const Vec& y) {
  std::size_t da = A.dim(), db = B.dim();
  Vec v = tensor_vec(x, y, da * db);             // A B A B
  v = apply_at(psi_BA, v, da, db);               // A A B B
  Product pa = A.mul_at(v, 1, db * db);          // A B B
  Product pb = B.mul_at(pa.value, da, 1);        // A B
  pb.overflow = pb.overflow || pa.overflow;
  return pb;
}

LinearMap extend_multiplicative(const BasedAlgebra& H, const std::vector<Vec>& gen_images, const BasedAlgebra& A,
                                const BasedAlgebra& B, const LinearMap& psi_BA) {
  if (H.words().empty() && H.dim() > 1) throw std::invalid_argument("extend: algebra " + H.name() + " has no words");
  auto cod = tensor(A.space(), B.space());
  return LinearMap::from_columns(H.space(), cod, [&](std::size_t i) {
    Vec r = unit_tensor(A, B);
    if (H.dim() == 1) return r;
    for (int g : H.words()[i]) {
      Product p = tensor_algebra_mul(A, B, psi_BA, r, gen_images.at(g));
      if (p.overflow) throw std::runtime_error("extend: image of " + H.space()->label(i) + " leaves the truncation");
      r = std::move(p.value);
    }
    return r;
  });
}

LinearMap extend_antimultiplicative(const BasedAlgebra& H, const std::vector<Vec>& gen_images,
                                    const LinearMap& psi_HH) {
  if (H.words().empty() && H.dim() > 1) throw std::invalid_argument("extend: algebra " + H.name() + " has no words");
  std::size_t d = H.dim();
  return LinearMap::from_columns(H.space(), H.space(), [&](std::size_t i) {
    Vec r = H.one();
    if (d == 1) return r;
    const auto& w = H.words()[i];
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      Vec t = apply_at(psi_HH, tensor_vec(gen_images.at(*it), r, d), 1, 1);
      Product p = H.mul_at(t, 1, 1);
      if (p.overflow) throw std::runtime_error("extend: antipode of " + H.space()->label(i) + " leaves the truncation");
      r = std::move(p.value);
    }
    return r;
  });
}

LinearMap extend_counit(const BasedAlgebra& H, const std::vector<Scalar>& gen_values) {
  std::vector<Vec> cols(H.dim());
  for (std::size_t i = 0; i < H.dim(); ++i) {
    Scalar v(1);
    if (H.dim() > 1)
      for (int g : H.words()[i]) v *= gen_values.at(g);
    cols[i] = Vec::basis(0, v);
  }
  return LinearMap(H.space(), BasedSpace::unit(), std::move(cols));
}

QTPtr make_qt(std::string name, BasedAlgebra K, const std::vector<Vec>& gen_delta, const std::vector<Scalar>& gen_counit,
              const std::vector<Vec>& gen_antipode, const Vec& R) {
  auto qt = std::make_shared<QTHopf>();
  qt->name = std::move(name);
  LinearMap fl = flip(K.space(), K.space());
  qt->delta = extend_multiplicative(K, gen_delta, K, K, fl);
  qt->counit = extend_counit(K, gen_counit);
  qt->antipode = extend_antimultiplicative(K, gen_antipode, fl);
  qt->antipode_inv = inverse(qt->antipode);
  qt->R = R;
  // R_inv solves R * X = 1 (x) 1 in K (x) K.
  auto kk = tensor(K.space(), K.space());
  LinearMap left_R = LinearMap::from_columns(kk, kk, [&](std::size_t i) {
    return tensor_algebra_mul(K, K, fl, R, Vec::basis(i)).value;
  });
  auto x = solve(left_R, unit_tensor(K, K));
  if (!x) throw std::invalid_argument("R-matrix of " + qt->name + " is not invertible");
  qt->R_inv = *x;
  qt->K = std::move(K);
  return qt;
}

QTPtr trivial_qt() {
  static QTPtr qt = [] {
    Presentation p;
    p.name = "k";
    BasedAlgebra K = build(p);
    return make_qt("k", K, {}, {}, {}, Vec::basis(0));
  }();
  return qt;
}

QTPtr rmatrix_cyclic(int n, const Scalar& q) {
  BasedAlgebra K = group_algebra({n});
  std::size_t d = K.dim();
  // Basis index i is g^i.
  Vec dg = Vec::basis(1 * d + 1);
  Vec sg = Vec::basis(n - 1);
  Vec R;
  Scalar inv_n = Scalar::rational(1, n);
  Scalar qm2 = (q * q).inverse();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R.add(i * d + j, inv_n * qm2.pow(static_cast<long>(i) * j));
  return make_qt("kZ_" + std::to_string(n), K, {dg}, {Scalar(1)}, {sg}, R);
}

QTPtr rmatrix_sweedler(const Scalar& xi) {
  Presentation p;
  p.name = "T2(-1)";
  p.generators = {"g", "x"};
  p.powers = {{PowerKind::Cyclic, 2}, {PowerKind::Nilpotent, 2}};
  p.swaps = {{1, 0, {{Scalar(-1), {0, 1}}}}};
  BasedAlgebra K = build(p);
  std::size_t d = K.dim();
  auto idx = [&](const std::string& l) { return *K.space()->find(l); };
  std::size_t one = idx("1"), g = idx("g"), x = idx("x"), gx = idx("g x");
  auto t = [&](std::size_t a, std::size_t b) { return a * d + b; };
  Vec dg = Vec::basis(t(g, g));
  Vec dx;
  // x is (g,1)-skew-primitive: Delta(x) = x (x) g + 1 (x) x.
  dx.add(t(x, g), 1);
  dx.add(t(one, x), 1);
  Vec sg = Vec::basis(g);
  Vec sx = Vec::basis(gx);
  Scalar h = Scalar::rational(1, 2);
  Scalar hx = h * xi;
  Vec R;
  R.add(t(one, one), h);
  R.add(t(one, g), h);
  R.add(t(g, one), h);
  R.add(t(g, g), -h);
  R.add(t(x, x), hx);
  R.add(t(x, gx), hx);
  R.add(t(gx, gx), hx);
  R.add(t(gx, x), -hx);
  return make_qt("T2(-1)", K, {dg, dx}, {Scalar(1), Scalar(0)}, {sg, sx}, R);
}

CheckReport check_qt(const QTHopf& qt) {
  const auto& K = qt.K;
  LinearMap fl = flip(K.space(), K.space());
  CheckReport rep = check_hopf_laws(qt.name, K, qt.delta, qt.counit, qt.antipode, qt.antipode_inv, fl);
  std::size_t d = K.dim();
  Vec one2 = unit_tensor(K, K);
  rep.add("R invertible", tensor_algebra_mul(K, K, fl, qt.R, qt.R_inv).value == one2 &&
                              tensor_algebra_mul(K, K, fl, qt.R_inv, qt.R).value == one2);
  Vec R13, R23, R12;
  for (const auto& [i, c] : qt.R) {
    std::size_t a = i / d, b = i % d, u = K.unit_index();
    R13.add((a * d + u) * d + b, c);
    R23.add((u * d + a) * d + b, c);
    R12.add((a * d + b) * d + u, c);
  }
  Vec dl = apply_at(qt.delta, qt.R, 1, d);
  Vec dr = apply_at(qt.delta, qt.R, d, 1);
  rep.add("(Delta⊗id)R = R13 R23", dl == mul3(K, R13, R23));
  rep.add("(id⊗Delta)R = R13 R12", dr == mul3(K, R13, R12));
  std::string w;
  for (std::size_t k = 0; k < d && w.empty(); ++k) {
    Vec dk = qt.delta.column(k);
    Vec dop = fl.apply(dk);
    if (tensor_algebra_mul(K, K, fl, dop, qt.R).value != tensor_algebra_mul(K, K, fl, qt.R, dk).value)
      w = K.space()->label(k);
  }
  rep.add("Delta^op(k) R = R Delta(k)", w.empty(), w);
  return rep;
}

Vec KModule::act(const Vec& k, const Vec& v) const {
  Vec r;
  for (const auto& [i, c] : k) r.axpy(c, rho[i].apply(v));
  return r;
}

KModule trivial_kmodule(const QTHopf& qt, const SpacePtr& space) {
  KModule m;
  m.space = space;
  for (std::size_t k = 0; k < qt.K.dim(); ++k) {
    Scalar e = qt.counit.column(k).get(0);
    std::vector<Vec> cols(space->dim());
    for (std::size_t i = 0; i < space->dim(); ++i) cols[i] = Vec::basis(i, e);
    m.rho.emplace_back(space, space, std::move(cols));
  }
  return m;
}

KModule kmodule_from_generators(const QTHopf& qt, const SpacePtr& space, const std::vector<LinearMap>& gen_maps) {
  KModule m;
  m.space = space;
  for (std::size_t k = 0; k < qt.K.dim(); ++k) {
    LinearMap f = LinearMap::identity(space);
    if (qt.K.dim() > 1)
      for (int g : qt.K.words()[k]) f = compose(f, gen_maps.at(g));
    m.rho.push_back(std::move(f));
  }
  return m;
}

KModule tensor_kmodule(const QTHopf& qt, const KModule& v, const KModule& w) {
  KModule m;
  m.space = tensor(v.space, w.space);
  std::size_t dk = qt.K.dim(), dw = w.space->dim();
  for (std::size_t k = 0; k < dk; ++k) {
    const Vec& dl = qt.delta.column(k);
    m.rho.push_back(LinearMap::from_columns(m.space, m.space, [&](std::size_t i) {
      Vec r;
      for (const auto& [t, c] : dl)
        r.axpy(c, tensor_vec(v.rho[t / dk].column(i / dw), w.rho[t % dk].column(i % dw), dw));
      return r;
    }));
  }
  return m;
}

CheckReport check_kmodule(const QTHopf& qt, const KModule& m, const std::string& subject) {
  CheckReport rep;
  rep.subject = subject;
  const auto& K = qt.K;
  std::string w;
  if (m.rho[K.unit_index()] != LinearMap::identity(m.space)) w = "1";
  for (std::size_t a = 0; a < K.dim() && w.empty(); ++a)
    for (std::size_t b = 0; b < K.dim() && w.empty(); ++b) {
      LinearMap lhs = compose(m.rho[a], m.rho[b]);
      LinearMap rhs = LinearMap::zero(m.space, m.space);
      for (const auto& [k, c] : K.product(a, b)) {
        std::vector<Vec> cols = m.rho[k].columns();
        for (auto& col : cols) col *= c;
        rhs = rhs + LinearMap(m.space, m.space, cols);
      }
      if (lhs != rhs) w = K.space()->label(a) + " · " + K.space()->label(b);
    }
  rep.add("K-action", w.empty(), w);
  return rep;
}

LinearMap braiding(const QTHopf& qt, const KModule& v, const KModule& w) {
  std::size_t dk = qt.K.dim(), dv = v.space->dim(), dw = w.space->dim();
  return LinearMap::from_columns(tensor(v.space, w.space), tensor(w.space, v.space), [&](std::size_t i) {
    std::size_t a = i / dw, b = i % dw;
    Vec r;
    for (const auto& [t, c] : qt.R) r.axpy(c, tensor_vec(w.rho[t % dk].column(b), v.rho[t / dk].column(a), dv));
    return r;
  });
}

LinearMap braiding_inv(const QTHopf& qt, const KModule& v, const KModule& w) {
  std::size_t dk = qt.K.dim(), dv = v.space->dim(), dw = w.space->dim();
  return LinearMap::from_columns(tensor(w.space, v.space), tensor(v.space, w.space), [&](std::size_t i) {
    std::size_t b = i / dv, a = i % dv;
    Vec r;
    for (const auto& [t, c] : qt.R_inv) r.axpy(c, tensor_vec(v.rho[t / dk].column(a), w.rho[t % dk].column(b), dw));
    return r;
  });
}

CheckReport check_braiding(const QTHopf& qt, const KModule& u, const KModule& v, const KModule& w) {
  CheckReport rep;
  rep.subject = "K braiding";
  LinearMap p = braiding(qt, u, v), pi = braiding_inv(qt, u, v);
  rep.add("inverse", compose(pi, p) == LinearMap::identity(p.domain()) &&
                         compose(p, pi) == LinearMap::identity(p.codomain()));
  std::string wit;
  rep.add("K-linear", is_kmodule_map(tensor_kmodule(qt, u, v), tensor_kmodule(qt, v, u), p, &wit), wit);
  std::size_t du = u.space->dim(), dv = v.space->dim(), dw = w.space->dim();
  LinearMap p_uv_w = braiding(qt, tensor_kmodule(qt, u, v), w), p_u_vw = braiding(qt, u, tensor_kmodule(qt, v, w));
  LinearMap p_uw = braiding(qt, u, w), p_vw = braiding(qt, v, w);
  auto hex1 = kernels::first_failure(du * dv * dw, [&](std::size_t i) {
    Vec e = Vec::basis(i);
    return p_uv_w.apply(e) == apply_at(p_uw, apply_at(p_vw, e, du, 1), 1, dv);
  });
  auto hex2 = kernels::first_failure(du * dv * dw, [&](std::size_t i) {
    Vec e = Vec::basis(i);
    return p_u_vw.apply(e) == apply_at(p_uw, apply_at(p, e, 1, dw), dv, 1);
  });
  rep.add("hexagon (U⊗V, W)", !hex1, hex1 ? "basis #" + std::to_string(*hex1) : "");
  rep.add("hexagon (U, V⊗W)", !hex2, hex2 ? "basis #" + std::to_string(*hex2) : "");
  return rep;
}

bool is_kmodule_map(const KModule& v, const KModule& w, const LinearMap& f, std::string* witness) {
  for (std::size_t k = 0; k < v.rho.size(); ++k)
    for (std::size_t i = 0; i < v.space->dim(); ++i) {
      if (f.apply(v.rho[k].column(i)) != w.rho[k].apply(f.column(i))) {
        if (witness) *witness = "k#" + std::to_string(k) + " on " + v.space->label(i);
        return false;
      }
    }
  return true;
}

CheckReport check_hopf_laws(const std::string& subject, const BasedAlgebra& H, const LinearMap& delta,
                            const LinearMap& counit, const LinearMap& antipode, const LinearMap& antipode_inv,
                            const LinearMap& psi_HH, std::size_t full_limit) {
  CheckReport rep = check_associative(H, full_limit);
  rep.subject = subject;
  std::size_t d = H.dim();
  const auto& sp = *H.space();
  auto first_bad = [&](std::size_t n, const std::function<bool(std::size_t)>& ok) { return kernels::first_failure(n, ok); };

  auto bad = first_bad(d, [&](std::size_t i) {
    const Vec& dh = delta.column(i);
    return apply_at(delta, dh, 1, d) == apply_at(delta, dh, d, 1);
  });
  rep.add("coassociativity", !bad, bad ? sp.label(*bad) : "");

  bad = first_bad(d, [&](std::size_t i) {
    const Vec& dh = delta.column(i);
    Vec e = Vec::basis(i);
    return apply_at(counit, dh, 1, d) == e && apply_at(counit, dh, d, 1) == e;
  });
  rep.add("counit", !bad, bad ? sp.label(*bad) : "");

  std::vector<std::size_t> lefts;
  bool full = d <= full_limit || H.words().empty();
  if (full) {
    for (std::size_t i = 0; i < d; ++i) lefts.push_back(i);
  } else {
    for (const auto& g : H.generators())
      if (g.nnz() == 1) lefts.push_back(g.lead());
  }
  bad = first_bad(lefts.size() * d, [&](std::size_t t) {
    std::size_t a = lefts[t / d], b = t % d;
    if (H.overflows(a, b)) return true;
    Vec lhs = delta.apply(H.product(a, b));
    Product rhs = tensor_algebra_mul(H, H, psi_HH, delta.column(a), delta.column(b));
    return rhs.overflow || lhs == rhs.value;
  });
  rep.add("Delta multiplicative", !bad, bad ? sp.label(lefts[*bad / d]) + " , " + sp.label(*bad % d) : "",
          full ? "all basis pairs" : "generator x basis pairs");

  bad = first_bad(d * d, [&](std::size_t t) {
    std::size_t a = t / d, b = t % d;
    if (H.overflows(a, b)) return true;
    return counit.apply(H.product(a, b)) == Vec::basis(0, counit.column(a).get(0) * counit.column(b).get(0));
  });
  rep.add("counit multiplicative", !bad, bad ? sp.label(*bad / d) + " , " + sp.label(*bad % d) : "");
  rep.add("Delta(1) = 1⊗1", delta.column(H.unit_index()) == Vec::basis(H.unit_index() * d + H.unit_index()));
  rep.add("eps(1) = 1", counit.column(H.unit_index()) == Vec::basis(0));

  bad = first_bad(d, [&](std::size_t i) {
    const Vec& dh = delta.column(i);
    Vec expect = counit.column(i).get(0) * H.one();
    Product l = H.mul_at(apply_at(antipode, dh, 1, d), 1, 1);
    Product r = H.mul_at(apply_at(antipode, dh, d, 1), 1, 1);
    return (l.overflow || l.value == expect) && (r.overflow || r.value == expect);
  });
  rep.add("antipode", !bad, bad ? sp.label(*bad) : "");
  rep.add("antipode invertible", compose(antipode, antipode_inv) == LinearMap::identity(H.space()) &&
                                     compose(antipode_inv, antipode) == LinearMap::identity(H.space()));
  return rep;
}

}  // namespace ydc
