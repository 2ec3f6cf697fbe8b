#include "ydc/centers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ydc/kernels.hpp"

namespace ydc {

namespace {

Vec braid_apply(const Braid& psi, const Vec& v, const Vec& w) {
  Vec r;
  for (const auto& [i, a] : v)
    for (const auto& [j, b] : w) r.axpy(a * b, psi(i, j));
  return r;
}

Vec coords_vec(const std::vector<Vec>& basis, const Vec& v, bool* ok) {
  auto c = coordinates(basis, v);
  if (!c) {
    *ok = false;
    return {};
  }
  Vec r;
  for (std::size_t i = 0; i < c->size(); ++i) r.add(i, (*c)[i]);
  return r;
}

int window_top(const BasedAlgebra& A, int safe) { return safe >= 0 ? safe : A.space()->max_degree(); }

nlohmann::ordered_json vec_json(const Vec& v, const BasedSpace& s, std::string_view var) {
  nlohmann::ordered_json j;
  j["expr"] = v.str(s, var);
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [i, c] : v) terms.push_back({s.label(i), c.str(var)});
  j["terms"] = terms;
  return j;
}

// Generators of the subalgebra spanned by `basis`, adding elements in order of
// filtration degree until the generated span inside the window contains them.
std::vector<Vec> extract_generators(const BasedAlgebra& A, const std::vector<Vec>& basis, int top) {
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return A.degree(basis[a]) < A.degree(basis[b]); });
  std::vector<Vec> gens;
  std::vector<Vec> span = rref({A.one()});
  for (auto idx : order) {
    const Vec& c = basis[idx];
    if (in_span(span, c)) continue;
    gens.push_back(c);
    std::vector<Vec> elems = span;
    elems.push_back(c);
    span = rref(elems);
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Vec> cur = span;
      for (const auto& e : cur)
        for (const auto& g : gens) {
          Product p = A.mul(e, g);
          if (p.overflow || p.value.is_zero() || A.degree(p.value) > top) continue;
          if (!in_span(span, p.value)) {
            span.push_back(p.value);
            span = rref(span);
            grew = true;
          }
        }
    }
  }
  return gens;
}

}  // namespace

Braid braid_of(const LinearMap& psi) {
  auto p = std::make_shared<const LinearMap>(psi);
  const auto& dom = psi.domain();
  std::size_t d = dom->is_tensor() ? dom->left()->dim() : 1;
  return [p, d](std::size_t i, std::size_t j) { return p->column(i * d + j); };
}

Braid braid_flip(std::size_t dim) {
  return [dim](std::size_t i, std::size_t j) { return Vec::basis(j * dim + i); };
}

Braid braid_k(const QTHopf& qt, const KModule& m) {
  auto R = qt.R;
  auto rho = std::make_shared<const std::vector<LinearMap>>(m.rho);
  std::size_t dk = qt.K.dim(), d = m.space->dim();
  return [R, rho, dk, d](std::size_t i, std::size_t j) {
    Vec r;
    for (const auto& [t, c] : R) r.axpy(c, tensor_vec((*rho)[t % dk].column(j), (*rho)[t / dk].column(i), d));
    return r;
  };
}

Braid braid_k_inv(const QTHopf& qt, const KModule& m) {
  auto R = qt.R_inv;
  auto rho = std::make_shared<const std::vector<LinearMap>>(m.rho);
  std::size_t dk = qt.K.dim(), d = m.space->dim();
  return [R, rho, dk, d](std::size_t i, std::size_t j) {
    Vec r;
    for (const auto& [t, c] : R) r.axpy(c, tensor_vec((*rho)[t / dk].column(j), (*rho)[t % dk].column(i), d));
    return r;
  };
}

CenterResult centralizer(const BasedAlgebra& A, const std::vector<Vec>& S, const Braid& psi, Side side) {
  if (S.empty()) throw std::invalid_argument("centralizer: empty generating set");
  std::size_t d = A.dim();
  int T = A.truncation();
  int ds = 0;
  for (const auto& s : S) ds = std::max(ds, A.degree(s));
  int W = T < 0 ? -1 : T - ds;
  std::vector<std::size_t> cand;
  for (std::size_t b = 0; b < d; ++b)
    if (T < 0 || A.degree(b) <= W) cand.push_back(b);
  std::vector<std::uint8_t> over(cand.size(), 0);
  auto cols = kernels::columns(cand.size(), [&](std::size_t ci) {
    Vec e = Vec::basis(cand[ci]), out;
    for (std::size_t k = 0; k < S.size(); ++k) {
      Product lhs = side == Side::Left ? A.mul(e, S[k]) : A.mul(S[k], e);
      Vec b = side == Side::Left ? braid_apply(psi, e, S[k]) : braid_apply(psi, S[k], e);
      Product rhs = A.mul_at(b, 1, 1);
      if (lhs.overflow || rhs.overflow) over[ci] = 1;
      Vec diff = lhs.value - rhs.value;
      for (const auto& [i, c] : diff) out.add(k * d + i, c);
    }
    return out;
  });
  std::map<std::size_t, Vec> eqs;
  for (std::size_t ci = 0; ci < cand.size(); ++ci)
    for (const auto& [k, c] : cols[ci]) eqs[k].add(ci, c);
  std::vector<Vec> rows;
  for (auto& [k, r] : eqs) rows.push_back(std::move(r));
  CenterResult res;
  for (std::size_t ci = 0; ci < cand.size(); ++ci)
    if (over[ci]) {
      rows.push_back(Vec::basis(ci));
      ++res.excluded;
    }
  std::vector<Vec> sol = kernel_of_rows(rows, cand.size());
  std::vector<Vec> amb;
  for (const auto& v : sol) {
    Vec x;
    for (const auto& [ci, c] : v) x.add(cand[ci], c);
    amb.push_back(std::move(x));
  }
  res.name = std::string(side == Side::Left ? "Cent^l" : "Cent^r") + "(" + A.name() + ")";
  res.ambient = A;
  res.basis = rref(amb);
  res.safe_degree = W;
  res.report.subject = res.name;
  if (res.excluded)
    res.report.add("window candidates excluded by overflow", true, {}, std::to_string(res.excluded));
  return res;
}

CenterResult centralizer(const BasedAlgebra& A, const std::vector<Vec>& S, const LinearMap& psi, Side side) {
  std::size_t d = A.dim();
  if (psi.domain()->dim() != d * d || psi.codomain()->dim() != d * d)
    throw std::invalid_argument("centralizer: braiding does not act on A (x) A");
  return centralizer(A, S, braid_of(psi), side);
}

void certify(CenterResult& c, const Braid& psi, const Braid& psi_inv) {
  const auto& A = c.ambient;
  std::size_t d = A.dim(), nb = c.basis.size();
  auto bad = kernels::first_failure(nb * d, [&](std::size_t t) {
    const Vec& v = c.basis[t / d];
    Vec e = Vec::basis(t % d);
    Product lhs = A.mul(v, e);
    Product rhs = A.mul_at(braid_apply(psi, v, e), 1, 1);
    return lhs.overflow || rhs.overflow || lhs.value == rhs.value;
  });
  c.generator_sufficient = !bad;
  c.report.add("centralizes every basis element inside the window", c.generator_sufficient,
               bad ? c.basis[*bad / d].str(*A.space()) + " against " + A.space()->label(*bad % d) : "");

  bad = kernels::first_failure(nb * nb, [&](std::size_t t) {
    const Vec& v = c.basis[t / nb];
    const Vec& w = c.basis[t % nb];
    Product m = A.mul(v, w);
    if (m.overflow) return true;
    Product a = A.mul_at(braid_apply(psi, v, w), 1, 1);
    Product b = A.mul_at(braid_apply(psi_inv, v, w), 1, 1);
    return (a.overflow || a.value == m.value) && (b.overflow || b.value == m.value);
  });
  c.commutative = !bad;
  c.report.add("braided commutative (m Psi = m = m Psi^-1)", c.commutative);

  int top = window_top(A, c.safe_degree);
  bad = kernels::first_failure(nb * nb, [&](std::size_t t) {
    Product m = A.mul(c.basis[t / nb], c.basis[t % nb]);
    if (m.overflow || A.degree(m.value) > top) return true;
    return in_span(c.basis, m.value);
  });
  c.algebra_closed = !bad;
  c.report.add("closed under multiplication inside the window", c.algebra_closed);
  c.report.add("unit is central", c.contains(A.one()));
  c.generators = extract_generators(A, c.basis, top);
}

namespace {

void restrict_structure(CenterResult& c, const YDModule& mod) {
  const auto& A = c.ambient;
  const auto& H = *mod.H;
  std::size_t nb = c.basis.size(), dh = H.alg.dim(), da = A.dim();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < nb; ++i) {
    labels.push_back("c" + std::to_string(i));
    degrees.push_back(A.degree(c.basis[i]));
  }
  auto space = BasedSpace::make(c.name, labels, degrees);
  bool ok = true;
  YDModule m;
  m.name = c.name;
  m.H = mod.H;
  m.kmod.space = space;
  for (const auto& r : mod.kmod.rho) {
    std::vector<Vec> cols;
    for (const auto& v : c.basis) cols.push_back(coords_vec(c.basis, r.apply(v), &ok));
    m.kmod.rho.emplace_back(space, space, std::move(cols));
  }
  std::vector<Vec> act(dh * nb), coact(nb);
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t i = 0; i < nb; ++i)
      act[h * nb + i] = coords_vec(c.basis, mod.action.apply(tensor_vec(Vec::basis(h), c.basis[i], da)), &ok);
  for (std::size_t i = 0; i < nb; ++i) {
    std::map<std::size_t, Vec> parts;
    for (const auto& [t, x] : mod.coaction.apply(c.basis[i])) parts[t / da].add(t % da, x);
    for (const auto& [h, p] : parts) coact[i] += tensor_vec(Vec::basis(h), coords_vec(c.basis, p, &ok), nb);
  }
  c.report.add("center is a YD submodule", ok);
  if (!ok) return;
  m.action = LinearMap(tensor(H.alg.space(), space), space, std::move(act));
  m.coaction = LinearMap(space, tensor(H.alg.space(), space), std::move(coact));
  c.report.merge(check_yd(m), "restricted structure: ");
  c.module = std::move(m);
}

}  // namespace

CenterResult left_center(const YDAlgebra& a) {
  LinearMap psi = yd_braiding(a.mod, a.mod), psi_inv = yd_braiding_inv(a.mod, a.mod);
  std::vector<Vec> S;
  for (const auto& g : a.alg.generators())
    if (!g.is_zero()) S.push_back(g);
  if (S.empty()) S.push_back(a.alg.one());
  CenterResult c = centralizer(a.alg, S, braid_of(psi), Side::Left);
  c.name = "C^l(" + a.alg.name() + ")";
  c.report.subject = c.name;
  c.ambient_kmod = a.mod.kmod;
  certify(c, braid_of(psi), braid_of(psi_inv));
  restrict_structure(c, a.mod);
  return c;
}

CenterResult left_center(const BasedAlgebra& A, const QTHopf& qt, const KModule& kmod) {
  std::vector<Vec> S;
  for (const auto& g : A.generators())
    if (!g.is_zero()) S.push_back(g);
  if (S.empty()) S.push_back(A.one());
  Braid psi = braid_k(qt, kmod);
  CenterResult c = centralizer(A, S, psi, Side::Left);
  c.name = "C^l(" + A.name() + ")";
  c.report.subject = c.name;
  c.ambient_kmod = kmod;
  certify(c, psi, braid_k_inv(qt, kmod));
  return c;
}

CenterResult b_center(const ModuleAlgebra& a, const std::vector<std::string>& h_names) {
  CenterResult c = left_center(rb_algebra(a, h_names));
  c.name = "Z_B(" + a.name + ")";
  c.report.subject = c.name;
  return c;
}

std::vector<Vec> filtration_part(const CenterResult& c, int d) {
  const auto& A = c.ambient;
  std::size_t nb = c.basis.size();
  std::map<std::size_t, Vec> eqs;
  for (std::size_t i = 0; i < nb; ++i)
    for (const auto& [k, x] : c.basis[i])
      if (A.degree(k) > d) eqs[k].add(i, x);
  std::vector<Vec> rows;
  for (auto& [k, r] : eqs) rows.push_back(std::move(r));
  std::vector<Vec> out;
  for (const auto& v : kernel_of_rows(rows, nb)) {
    Vec x;
    for (const auto& [i, a] : v) x.axpy(a, c.basis[i]);
    out.push_back(std::move(x));
  }
  return rref(out);
}

CheckReport check_stability(const CenterResult& small, const CenterResult& big) {
  CheckReport rep;
  rep.subject = small.name + " inside the larger truncation";
  int d = window_top(small.ambient, small.safe_degree);
  std::vector<Vec> mapped;
  std::string missing;
  for (const auto& v : filtration_part(big, d)) {
    Vec x;
    for (const auto& [k, a] : v) {
      auto label = big.ambient.space()->label(k);
      auto idx = small.ambient.space()->find(label);
      if (!idx) {
        missing = label;
        break;
      }
      x.add(*idx, a);
    }
    mapped.push_back(std::move(x));
  }
  rep.add("ambient bases match", missing.empty(), missing);
  bool same = missing.empty() && rref(mapped) == small.basis;
  rep.add("restriction agrees", same,
          same ? "" : std::to_string(mapped.size()) + " vs " + std::to_string(small.basis.size()),
          "filtration degree <= " + std::to_string(d));
  return rep;
}

RecurrenceSolution recurrence_oracle(int n, const Scalar& q, const Scalar& gamma, int window) {
  Scalar q2 = q * q;
  if ((Scalar(1) - q2).is_zero()) throw std::invalid_argument("recurrence_oracle: q^2 = 1");
  std::size_t w = static_cast<std::size_t>(window) + 1;
  auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j); };
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= window + 1; ++j) {
      Vec r;
      if (j >= 1 && j - 1 <= window) r.add(idx(i, j - 1), q2.pow(j - 1) - Scalar(1));
      if (i + 1 < n && j <= window)
        r.add(idx(i + 1, j), gamma * q2.pow(j) * (Scalar(1) - q2.pow(i + 1)) / (Scalar(1) - q2));
      if (!r.is_zero()) rows.push_back(std::move(r));
    }
  RecurrenceSolution s;
  s.n = n;
  s.window = window;
  s.basis = kernel_of_rows(rows, static_cast<std::size_t>(n) * w);
  return s;
}

std::vector<Vec> recurrence_in_ambient(const RecurrenceSolution& s, const BasedAlgebra& H, const BasedAlgebra& A) {
  std::map<int, std::size_t> hi, ai;
  for (std::size_t h = 0; h < H.dim(); ++h) hi[H.exponents()[h].at(0)] = h;
  for (std::size_t a = 0; a < A.dim(); ++a) ai[A.exponents()[a].at(0)] = a;
  std::size_t w = static_cast<std::size_t>(s.window) + 1;
  std::vector<Vec> out;
  for (const auto& v : s.basis) {
    Vec x;
    for (const auto& [k, c] : v) x.add(hi.at(static_cast<int>(k / w)) * A.dim() + ai.at(static_cast<int>(k % w)), c);
    out.push_back(std::move(x));
  }
  return rref(out);
}

CheckReport cross_check_smash(const ModuleAlgebra& a, const CenterResult& rbc) {
  const auto& H = *a.H;
  const auto& qt = *H.qt;
  CheckReport rep;
  rep.subject = "Cent^l(A # H) versus C^l(R_B(A)) for " + a.name;
  SmashProduct sp = smash_product(a);
  const auto& B = sp.alg;
  std::size_t d = B.dim();
  KModule km = tensor_kmodule(qt, a.kmod, H.kmod);
  Braid full = braid_k(qt, km), full_inv = braid_k_inv(qt, km);
  auto on_smash = [&](const Braid& f) -> Braid {
    return [&, f](std::size_t i, std::size_t j) {
      std::size_t dt = sp.dim_a * sp.dim_h;
      Vec r;
      for (const auto& [t, c] : f(sp.tensor_index[i], sp.tensor_index[j])) {
        long p = sp.position[t / dt], q = sp.position[t % dt];
        if (p < 0 || q < 0) throw std::logic_error("cross_check_smash: braiding leaves the window");
        r.add(static_cast<std::size_t>(p) * d + static_cast<std::size_t>(q), c);
      }
      return r;
    };
  };
  Braid psi = on_smash(full), psi_inv = on_smash(full_inv);
  std::size_t na = a.alg.generators().size();
  std::vector<Vec> S(B.generators().begin(), B.generators().begin() + static_cast<long>(na));
  if (S.empty()) S.push_back(B.one());
  CenterResult cent = centralizer(B, S, psi, Side::Left);

  // the condition against every element a # 1 inside the window
  std::vector<std::size_t> abasis;
  for (std::size_t x = 0; x < a.alg.dim(); ++x) {
    long p = sp.position[x * sp.dim_h + H.alg.unit_index()];
    if (p >= 0) abasis.push_back(static_cast<std::size_t>(p));
  }
  auto bad = kernels::first_failure(cent.basis.size() * abasis.size(), [&](std::size_t t) {
    const Vec& v = cent.basis[t / abasis.size()];
    Vec e = Vec::basis(abasis[t % abasis.size()]);
    Product l = B.mul(v, e), r = B.mul_at(braid_apply(psi, v, e), 1, 1);
    return l.overflow || r.overflow || l.value == r.value;
  });
  rep.add("centralizes all of A inside the window", !bad);
  rep.add("windows agree", cent.safe_degree == rbc.safe_degree,
          std::to_string(cent.safe_degree) + " vs " + std::to_string(rbc.safe_degree));

  LinearMap phi_inv = phi_inverse_map(a);
  std::vector<Vec> img;
  for (const auto& v : cent.basis) img.push_back(phi_inv.apply(sp.to_tensor(v)));
  img = rref(img);
  bool same = img == rbc.basis;
  rep.add("phi^-1 maps the centralizer onto the center", same,
          same ? "" : std::to_string(img.size()) + " vs " + std::to_string(rbc.basis.size()),
          std::to_string(img.size()) + " basis elements");

  const auto& R = rbc.ambient;
  std::size_t nb = cent.basis.size(), checked = 0;
  std::string wit;
  for (std::size_t i = 0; i < nb && wit.empty(); ++i)
    for (std::size_t j = 0; j < nb && wit.empty(); ++j) {
      const Vec& v = cent.basis[i];
      const Vec& w = cent.basis[j];
      Product lhs = B.mul_at(braid_apply(psi_inv, v, w), 1, 1);
      Product rhs = R.mul(phi_inv.apply(sp.to_tensor(v)), phi_inv.apply(sp.to_tensor(w)));
      if (lhs.overflow || rhs.overflow) continue;
      ++checked;
      if (phi_inv.apply(sp.to_tensor(lhs.value)) != rhs.value) wit = std::to_string(i) + "," + std::to_string(j);
    }
  rep.add("phi^-1 is multiplicative for m Psi^-1", wit.empty(), wit, std::to_string(checked) + " pairs");
  return rep;
}

nlohmann::ordered_json center_signature(const CenterResult& c, int up_to) {
  auto sig = nlohmann::ordered_json::array();
  for (int k = 0; k <= up_to; ++k) {
    auto part = filtration_part(c, k);
    nlohmann::ordered_json e;
    e["degree"] = k;
    e["dim"] = part.size();
    auto traces = nlohmann::ordered_json::array();
    for (const auto& r : c.ambient_kmod.rho) {
      Scalar tr(0);
      bool ok = true;
      for (std::size_t i = 0; i < part.size() && ok; ++i) {
        auto co = coordinates(part, r.apply(part[i]));
        if (!co)
          ok = false;
        else
          tr += (*co)[i];
      }
      traces.push_back(ok ? nlohmann::ordered_json(tr.str()) : nlohmann::ordered_json());
    }
    e["traces"] = traces;
    sig.push_back(e);
  }
  return sig;
}

namespace {

// Powers z^0, z^1, ... of a single generator inside the window, and whether
// they span the center.
std::optional<std::vector<Vec>> power_basis(const CenterResult& c) {
  if (c.generators.size() != 1) return std::nullopt;
  const auto& A = c.ambient;
  int top = window_top(A, c.safe_degree);
  std::vector<Vec> p{A.one()};
  for (;;) {
    Product n = A.mul(p.back(), c.generators[0]);
    if (n.overflow || n.value.is_zero() || A.degree(n.value) > top) break;
    p.push_back(n.value);
    if (p.size() > A.dim()) break;
  }
  if (rank(p) != p.size() || rref(p) != c.basis) return std::nullopt;
  return p;
}

std::vector<std::vector<Scalar>> k_matrices(const CenterResult& c, const std::vector<Vec>& basis) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : c.ambient_kmod.rho) {
    std::vector<Scalar> m;
    for (const auto& v : basis) {
      // coordinates in `basis`, which need not be echelon
      std::vector<Vec> eqs;
      Vec img = r.apply(v);
      std::map<std::size_t, Vec> rows;
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [k, x] : basis[i]) rows[k].add(i, x);
      for (const auto& [k, x] : img) rows[k].add(basis.size(), -x);
      for (auto& [k, row] : rows) eqs.push_back(std::move(row));
      auto sol = kernel_of_rows(eqs, basis.size() + 1);
      Vec s;
      for (const auto& cand : sol)
        if (!cand.get(basis.size()).is_zero()) s = cand.get(basis.size()).inverse() * cand;
      for (std::size_t i = 0; i < basis.size(); ++i) m.push_back(s.get(i));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

ComparisonResult compare_centers(const CenterResult& a, const CenterResult& b) {
  ComparisonResult r;
  int top = std::min(window_top(a.ambient, a.safe_degree), window_top(b.ambient, b.safe_degree));
  auto sa = center_signature(a, top), sb = center_signature(b, top);
  r.signatures = {{"first", sa}, {"second", sb}, {"common_degree", top}};
  for (std::size_t k = 0; k < sa.size(); ++k)
    if (sa[k] != sb[k]) {
      r.outcome = CenterComparison::Distinguishable;
      r.reason = "signatures differ in filtration degree " + std::to_string(k);
      return r;
    }
  bool same_ambient = a.ambient.dim() == b.ambient.dim() && a.ambient_kmod.rho.size() == b.ambient_kmod.rho.size();
  for (std::size_t i = 0; same_ambient && i < a.ambient.dim(); ++i)
    same_ambient = a.ambient.space()->label(i) == b.ambient.space()->label(i);
  if (same_ambient && a.basis == b.basis) {
    bool same = true;
    for (std::size_t k = 0; k < a.ambient_kmod.rho.size() && same; ++k)
      for (const auto& v : a.basis) same = same && a.ambient_kmod.rho[k].apply(v) == b.ambient_kmod.rho[k].apply(v);
    for (std::size_t i = 0; i < a.basis.size() && same; ++i)
      for (std::size_t j = 0; j < a.basis.size() && same; ++j) {
        Product x = a.ambient.mul(a.basis[i], a.basis[j]), y = b.ambient.mul(b.basis[i], b.basis[j]);
        same = x.overflow || y.overflow || x.value == y.value;
      }
    if (same) {
      r.outcome = CenterComparison::IsomorphicAsGraded;
      r.reason = "identical subspaces with identical product and K-action";
      return r;
    }
  }
  auto pa = power_basis(a), pb = power_basis(b);
  if (pa && pb && pa->size() == pb->size() && a.ambient_kmod.rho.size() == b.ambient_kmod.rho.size() &&
      k_matrices(a, *pa) == k_matrices(b, *pb)) {
    r.outcome = CenterComparison::IsomorphicAsGraded;
    r.reason = "z^k -> w^k preserves the product and the K-action";
    return r;
  }
  r.reason = "signatures agree; no structure-preserving map found";
  return r;
}

std::string to_string(CenterComparison c) {
  switch (c) {
    case CenterComparison::IsomorphicAsGraded:
      return "isomorphic-as-graded";
    case CenterComparison::Distinguishable:
      return "distinguishable";
    default:
      return "inconclusive";
  }
}

nlohmann::ordered_json CenterResult::to_json(std::string_view var) const {
  nlohmann::ordered_json j;
  const auto& sp = *ambient.space();
  j["name"] = name;
  j["ambient"] = {{"name", ambient.name()}, {"dim", ambient.dim()}, {"truncation", ambient.truncation()}};
  j["safe_degree"] = safe_degree;
  j["dim"] = basis.size();
  j["generator_sufficient"] = generator_sufficient;
  j["algebra_closed"] = algebra_closed;
  j["commutative"] = commutative;
  auto bs = nlohmann::ordered_json::array();
  for (const auto& v : basis) bs.push_back(vec_json(v, sp, var));
  j["basis"] = bs;
  auto gs = nlohmann::ordered_json::array();
  for (const auto& v : generators) gs.push_back(vec_json(v, sp, var));
  j["generators"] = gs;
  if (module && !generators.empty()) {
    // K-action, H-action and coaction on each generator, written in the ambient basis
    const auto& H = *module->H;
    std::size_t dh = H.alg.dim(), dc = basis.size();
    auto lift = [&](const Vec& x) {
      Vec r;
      for (const auto& [i, c] : x) r.axpy(c, basis[i]);
      return r;
    };
    auto hspace = tensor(H.alg.space(), ambient.space());
    auto st = nlohmann::ordered_json::array();
    for (const auto& g : generators) {
      auto co = coordinates(basis, g);
      if (!co) continue;
      Vec x;
      for (std::size_t i = 0; i < co->size(); ++i) x.add(i, (*co)[i]);
      nlohmann::ordered_json e;
      e["element"] = g.str(sp, var);
      nlohmann::ordered_json k, h;
      const auto& K = H.qt->K;
      for (std::size_t t = 0; t < K.dim(); ++t)
        if (std::find(K.generators().begin(), K.generators().end(), Vec::basis(t)) != K.generators().end())
          k[K.space()->label(t)] = lift(module->kmod.rho[t].apply(x)).str(sp, var);
      for (std::size_t t = 0; t < dh; ++t)
        if (std::find(H.alg.generators().begin(), H.alg.generators().end(), Vec::basis(t)) != H.alg.generators().end())
          h[H.alg.space()->label(t)] = lift(module->action.apply(tensor_vec(Vec::basis(t), x, dc))).str(sp, var);
      e["K"] = k;
      e["H"] = h;
      Vec cv = module->coaction.apply(x), out;
      for (const auto& [i, c] : cv) out.axpy(c, tensor_vec(Vec::basis(i / dc), lift(Vec::basis(i % dc)), ambient.dim()));
      e["coaction"] = out.str(*hspace, var);
      st.push_back(e);
    }
    j["structure"] = st;
  }
  j["checks"] = report.to_json();
  return j;
}

}  // namespace ydc
