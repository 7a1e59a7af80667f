#include "wbalg/hmodules.hpp"

#include "checks.hpp"

#include <array>
#include <functional>
#include <random>
#include <stdexcept>

namespace wbalg {

namespace {

using namespace detail;

const Prebialgebra& base_of(const LeftModule& m) {
  if (m.base == nullptr) throw std::invalid_argument("module '" + m.name + "' has no base prebialgebra");
  return *m.base;
}

void same_base(const LeftModule& a, const LeftModule& b) {
  if (a.base != b.base) throw std::invalid_argument("modules '" + a.name + "' and '" + b.name + "' have different bases");
}

// The action (k.phi)(l) = phi(lk) on all of H*.
std::vector<Mat> dual_actions(const Prebialgebra& p) {
  const std::size_t n = p.dim();
  std::vector<Mat> out;
  for (std::size_t k = 0; k < n; ++k) {
    Mat a(n, n);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t c = 0; c < n; ++c) a(l, c) = p.constants().mu(l, k, c);
    out.push_back(std::move(a));
  }
  return out;
}

Mat sum_over_delta(const Prebialgebra& p, const Vec& d, const std::vector<Mat>& left, const std::vector<Mat>& right) {
  const std::size_t n = p.dim();
  Mat out(left[0].rows() * right[0].rows(), left[0].cols() * right[0].cols());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c = d[a * n + b];
      add_kron(out, c, left[a], right[b]);
    }
  return out;
}

std::vector<Mat> tensor_actions_of(const Prebialgebra& p, const std::vector<Mat>& left, const std::vector<Mat>& right) {
  std::vector<Mat> out;
  const Mat& d = p.comult_matrix();
  for (std::size_t i = 0; i < p.dim(); ++i) out.push_back(sum_over_delta(p, d.col(i), left, right));
  return out;
}

}  // namespace

Mat LeftModule::act(const Vec& h) const {
  Mat out(dim, dim);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (sgn(h[i]) != 0) out += h[i] * action[i];
  return out;
}

std::optional<Witness> check_module(const LeftModule& m) {
  const Prebialgebra& p = base_of(m);
  const std::size_t n = p.dim();
  if (m.action.size() != n) return Witness{{}, "expected one action matrix per basis element"};
  for (std::size_t i = 0; i < n; ++i)
    if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim) return Witness{{i}, "action matrix has wrong shape"};
  if (m.act(p.one()) != Mat::identity(m.dim)) return Witness{{}, "1 does not act as the identity"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat rhs(m.dim, m.dim);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(p.constants().mu(i, j, k)) != 0) rhs += p.constants().mu(i, j, k) * m.action[k];
      if (m.action[i] * m.action[j] != rhs)
        return Witness{{i, j}, "action not associative at " + p.label(i) + "," + p.label(j)};
    }
  return std::nullopt;
}

std::optional<Witness> check_module_map(const LeftModule& m, const LeftModule& n, const Mat& f) {
  same_base(m, n);
  if (f.rows() != n.dim || f.cols() != m.dim) return Witness{{}, "map has wrong shape"};
  for (std::size_t i = 0; i < m.action.size(); ++i)
    if (f * m.action[i] != n.action[i] * f)
      return Witness{{i}, "map does not commute with the action of " + m.base->label(i)};
  return std::nullopt;
}

LeftModule regular_module(const Prebialgebra& p) {
  LeftModule m{&p, p.dim(), {}, "H"};
  for (std::size_t i = 0; i < p.dim(); ++i) m.action.push_back(p.left_mult(i));
  return m;
}

LeftModule submodule(const LeftModule& m, const Subspace& s, const std::string& name) {
  if (s.ambient() != m.dim) throw DimensionMismatch("submodule: ambient dimension mismatch");
  const Mat e = s.embedding();
  for (std::size_t i = 0; i < m.action.size(); ++i)
    if (!s.contains_columns(m.action[i] * e))
      throw std::invalid_argument("submodule: subspace not invariant under " + base_of(m).label(i));
  LeftModule out{m.base, s.dim(), {}, name.empty() ? m.name + "'" : name};
  const Mat c = s.coordinates();
  for (const auto& a : m.action) out.action.push_back(c * a * e);
  return out;
}

LeftModule cyclic_submodule(const LeftModule& m, const Vec& v, const std::string& name) {
  std::vector<Vec> gens;
  for (const auto& a : m.action) gens.push_back(a * v);
  return submodule(m, Subspace::span(m.dim, gens), name);
}

std::vector<LeftModule> random_modules(const Prebialgebra& p, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  const LeftModule h = regular_module(p);
  std::optional<LeftModule> hh;
  if (check_axioms(p).monoidal()) hh = tensor_l(h, h).module;
  std::vector<LeftModule> out;
  for (std::size_t k = 0; out.size() < count && k < 64 * count; ++k) {
    const LeftModule& src = (hh && k % 2 == 1) ? *hh : h;
    Vec v(src.dim);
    for (auto& x : v) x = entry(rng);
    if (is_zero(v)) continue;
    out.push_back(cyclic_submodule(src, v, "R" + std::to_string(out.size())));
  }
  return out;
}

std::vector<Mat> tensor_actions(const LeftModule& m, const LeftModule& n) {
  same_base(m, n);
  return tensor_actions_of(*m.base, m.action, n.action);
}

Mat pi_l(const LeftModule& m, const LeftModule& n) {
  same_base(m, n);
  return sum_over_delta(*m.base, m.base->delta_one(), m.action, n.action);
}

TensorL tensor_l(const LeftModule& m, const LeftModule& n) {
  same_base(m, n);
  if (!check_axioms(*m.base).monoidal()) throw std::invalid_argument("tensor_l: base prebialgebra is not monoidal");
  TensorL t;
  t.pi = pi_l(m, n);
  IdempotentSplit split = idempotent_split(t.pi);
  t.carrier = split.image;
  t.section = split.section;
  t.retraction = split.retraction;
  t.module = LeftModule{m.base, t.carrier.dim(), {}, "(" + m.name + " x " + n.name + ")"};
  for (const auto& a : tensor_actions(m, n)) t.module.action.push_back(t.retraction * a * t.section);
  return t;
}

TensorLQuotient tensor_l_quot(const LeftModule& m, const LeftModule& n) {
  const TensorL t = tensor_l(m, n);
  TensorLQuotient q;
  q.quotient = quotient(image(Mat::identity(t.pi.rows()) - t.pi));
  q.module = LeftModule{m.base, q.quotient.dim(), {}, "[" + m.name + " x " + n.name + "]"};
  for (const auto& a : tensor_actions(m, n)) q.module.action.push_back(q.quotient.project * a * q.quotient.lift);
  q.pi_bar = t.retraction * t.pi * q.quotient.lift;
  q.pi_bar_inverse = q.quotient.project * t.section;
  return q;
}

UnitObject unit_object(const Prebialgebra& p) {
  UnitObject u;
  u.carrier = image(canonical_maps(p).g);
  u.module = LeftModule{&p, u.carrier.dim(), {}, "U"};
  for (const auto& a : dual_actions(p)) u.module.action.push_back(restrict_to(u.carrier, a));
  return u;
}

LeftModule transported_unit(const Prebialgebra& p) {
  const CanonicalMaps cm = canonical_maps(p);
  const Subspace ht = image(cm.eps_t);
  LeftModule out{&p, ht.dim(), {}, "Ht"};
  for (std::size_t i = 0; i < p.dim(); ++i) out.action.push_back(restrict_to(ht, cm.eps_t * p.left_mult(i)));
  return out;
}

VerificationReport verify_unit_object(const Prebialgebra& p) {
  VerificationReport r;
  const AxiomFlags flags = check_axioms(p);
  const CanonicalMaps cm = canonical_maps(p);
  const std::vector<Mat> full = dual_actions(p);
  const UnitObject u = unit_object(p);
  const Mat e = u.carrier.embedding();
  const Mat c = u.carrier.coordinates();
  r.check("unit object invariant", "", [&]() -> std::optional<Witness> {
    for (std::size_t k = 0; k < p.dim(); ++k)
      if (!u.carrier.contains_columns(full[k] * e))
        return Witness{{k}, "the image of g is not invariant under " + p.label(k)};
    return std::nullopt;
  }());
  r.check("unit object module", "", check_module(u.module));
  const Mat g = c * cm.g;  // H -> U
  r.check("unit object g linear", "", check_module_map(regular_module(p), u.module, g));
  gated(r, flags, "unit object f intertwines", "m", [&]() -> std::optional<Witness> {
    const LeftModule ht = transported_unit(p);
    const Subspace hts = image(cm.eps_t);
    if (auto w = check_module(ht)) return Witness{w->indices, "transported action: " + w->detail};
    const Mat f = hts.coordinates() * cm.f * e;  // U -> Ht
    const Mat gr = c * cm.g * hts.embedding();  // Ht -> U
    if (auto w = differ(f * gr, Mat::identity(ht.dim), "f g on Ht")) return w;
    if (auto w = differ(gr * f, Mat::identity(u.module.dim), "g f on the unit object")) return w;
    return check_module_map(u.module, ht, f);
  });
  return r;
}

UnitConstraints unit_constraints(const UnitObject& u, const LeftModule& m) {
  const Prebialgebra& p = base_of(m);
  const std::size_t n = p.dim();
  const CanonicalMaps cm = canonical_maps(p);
  const Mat e = u.carrier.embedding();
  const Mat c = u.carrier.coordinates();
  const std::size_t k = u.carrier.dim();
  UnitConstraints uc;

  std::vector<Mat> lblocks;
  for (std::size_t a = 0; a < k; ++a) lblocks.push_back(m.act(cm.f * e.col(a)));
  uc.l = hcat(lblocks, m.dim);

  uc.r = Mat(m.dim, m.dim * k);
  for (std::size_t a = 0; a < k; ++a) {
    const Mat act = m.act(cm.f_prime * e.col(a));
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t q = 0; q < m.dim; ++q) uc.r(i, q * k + a) = act(i, q);
  }

  std::vector<Mat> gs;  // g(e_x) in unit coordinates, as columns
  for (std::size_t x = 0; x < n; ++x) gs.push_back(Mat::column_vector(c * cm.g.col(x)));
  uc.l_bar = sum_over_delta(p, p.delta_one(), gs, m.action);
  uc.r_bar = sum_over_delta(p, p.delta_one(), m.action, gs);
  return uc;
}

VerificationReport verify_units(const LeftModule& m) {
  const Prebialgebra& p = base_of(m);
  const AxiomFlags flags = check_axioms(p);
  const UnitObject u = unit_object(p);
  const UnitConstraints uc = unit_constraints(u, m);
  const Mat id = Mat::identity(m.dim);
  VerificationReport r;
  r.check("eq 2.0.1", "", first_failure({[&] { return differ(uc.l * uc.l_bar, id, "l l_bar"); },
                                         [&] { return differ(uc.r * uc.r_bar, id, "r r_bar"); }}));
  gated(r, flags, "Prop 2.1 l_bar linear", "lm", [&] {
    return check_module_map(m, LeftModule{m.base, u.module.dim * m.dim, tensor_actions(u.module, m), ""}, uc.l_bar);
  });
  gated(r, flags, "Prop 2.1 r_bar linear", "rm", [&] {
    return check_module_map(m, LeftModule{m.base, u.module.dim * m.dim, tensor_actions(m, u.module), ""}, uc.r_bar);
  });
  auto prop_2_3 = [&](const TensorL& t, const Mat& bar, const Mat& plain) -> std::optional<Witness> {
    if (!t.carrier.contains_columns(bar)) return Witness{{}, "the inverse candidate leaves the restricted tensor product"};
    const Mat bar_c = t.carrier.coordinates() * bar;
    const Mat plain_c = plain * t.section;
    if (auto w = differ(plain_c * bar_c, id, "restricted map after its inverse")) return w;
    if (auto w = differ(bar_c * plain_c, Mat::identity(t.carrier.dim()), "inverse after restricted map")) return w;
    return check_module_map(m, t.module, bar_c);
  };
  gated(r, flags, "Prop 2.3 left", "m", [&] { return prop_2_3(tensor_l(u.module, m), uc.l_bar, uc.l); });
  gated(r, flags, "Prop 2.3 right", "m", [&] { return prop_2_3(tensor_l(m, u.module), uc.r_bar, uc.r); });
  return r;
}

VerificationReport verify_naturality(const LeftModule& m, const LeftModule& n, const Mat& phi) {
  if (auto w = check_module_map(m, n, phi)) throw std::invalid_argument("verify_naturality: not a module map: " + w->detail);
  const UnitObject u = unit_object(base_of(m));
  const Mat iu = Mat::identity(u.module.dim);
  const UnitConstraints a = unit_constraints(u, m);
  const UnitConstraints b = unit_constraints(u, n);
  VerificationReport r;
  r.check("Thm 2.4 naturality l", "", differ(b.l * kron(iu, phi), phi * a.l, "l"));
  r.check("Thm 2.4 naturality l_bar", "", differ(kron(iu, phi) * a.l_bar, b.l_bar * phi, "l_bar"));
  r.check("Thm 2.4 naturality r", "", differ(b.r * kron(phi, iu), phi * a.r, "r"));
  r.check("Thm 2.4 naturality r_bar", "", differ(kron(phi, iu) * a.r_bar, b.r_bar * phi, "r_bar"));
  return r;
}

VerificationReport verify_prop_2_1(const Prebialgebra& p) {
  const std::size_t n = p.dim();
  const AxiomDecision ax = decide_axioms(p);
  const CanonicalMaps cm = canonical_maps(p);
  const Mat id = Mat::identity(n);
  const Vec& d1 = p.delta_one();
  VerificationReport r;

  auto cond3 = [&](bool left) -> std::optional<Witness> {
    for (std::size_t h = 0; h < n; ++h) {
      const Mat& rh = p.right_mult(h);
      const Vec lhs = left ? kron(cm.g, rh) * d1 : kron(rh, cm.g) * d1;
      const Vec rhs = left ? kron(cm.g, id) * p.comul(unit_vec(n, h)) : kron(id, cm.g) * p.comul(unit_vec(n, h));
      if (lhs != rhs) return Witness{{h}, "condition fails at h = " + p.label(h)};
    }
    return std::nullopt;
  };
  auto linear = [&](bool left) -> std::optional<Witness> {
    const LeftModule h = regular_module(p);
    std::vector<Mat> gs;
    for (std::size_t x = 0; x < n; ++x) gs.push_back(Mat::column_vector(cm.g.col(x)));
    const std::vector<Mat> dual = dual_actions(p);
    const Mat bar = left ? sum_over_delta(p, d1, gs, h.action) : sum_over_delta(p, d1, h.action, gs);
    const std::vector<Mat> t = left ? tensor_actions_of(p, dual, h.action) : tensor_actions_of(p, h.action, dual);
    for (std::size_t k = 0; k < n; ++k)
      if (t[k] * bar != bar * h.action[k]) return Witness{{k}, "not linear for the action of " + p.label(k)};
    return std::nullopt;
  };
  struct Item {
    std::string id;
    bool left;
    bool third;
  };
  for (const Item& it : {Item{"Prop 2.1 (3) left", true, true}, Item{"Prop 2.1 (2) left", true, false},
                         Item{"Prop 2.1 (3) right", false, true}, Item{"Prop 2.1 (2) right", false, false}}) {
    const std::string flag = it.left ? "lm" : "rm";
    const bool value = it.left ? ax.flags.lm : ax.flags.rm;
    const std::optional<Witness> w = it.third ? cond3(it.left) : linear(it.left);
    r.check(it.id, "iff " + flag, w);
    std::optional<Witness> mismatch;
    if (!w != value) {
      const auto& fw = it.left ? ax.lm_witness : ax.rm_witness;
      mismatch = w ? Witness{w->indices, "condition fails although (" + flag + ") holds: " + w->detail}
                   : Witness{fw ? fw->indices : std::vector<std::size_t>{}, "condition holds although (" + flag + ") fails"};
    }
    r.check(it.id + " equivalence", "", mismatch, w ? "condition fails" : "condition holds");
  }
  return r;
}

VerificationReport verify_monoidal(const LeftModule& m, const LeftModule& n, const LeftModule& q) {
  same_base(m, n);
  same_base(n, q);
  const Prebialgebra& p = base_of(m);
  const AxiomFlags flags = check_axioms(p);
  VerificationReport r;
  if (!flags.monoidal()) {
    for (const char* id : {"Thm 2.4 tensor module", "Thm 2.4 triangle", "Thm 2.4 associativity",
                           "Thm 2.4 associator linear"})
      r.not_applicable(id, "m");
    return r;
  }
  const TensorL mn = tensor_l(m, n);
  const TensorL nq = tensor_l(n, q);
  r.check("Thm 2.4 tensor module", "m", check_module(mn.module));

  const UnitObject u = unit_object(p);
  const UnitConstraints um = unit_constraints(u, m);
  const UnitConstraints un = unit_constraints(u, n);
  r.check("Thm 2.4 triangle", "m",
          differ(kron(um.r_bar, Mat::identity(n.dim)) * mn.pi, kron(Mat::identity(m.dim), un.l_bar) * mn.pi,
                 "(r_bar (x) id) pi versus (id (x) l_bar) pi"));

  const TensorL left = tensor_l(mn.module, q);
  const TensorL right = tensor_l(m, nq.module);
  const Mat emb_left = kron(mn.section, Mat::identity(q.dim)) * left.section;
  const Mat emb_right = kron(Mat::identity(m.dim), nq.section) * right.section;
  const Subspace sl = image(emb_left);
  const Subspace sr = image(emb_right);
  r.check("Thm 2.4 associativity", "m", [&]() -> std::optional<Witness> {
    if (sl != sr) return Witness{{}, "the two bracketings give different subspaces"};
    // Delta^2(1) acting on M (x) N (x) P
    const std::size_t d = p.dim();
    const Vec d2 = kron(p.comult_matrix(), Mat::identity(d)) * p.delta_one();
    Mat act(m.dim * n.dim * q.dim, m.dim * n.dim * q.dim);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
          const Rational& x = d2[(a * d + b) * d + c];
          if (sgn(x) != 0) add_kron(act, x, kron(m.action[a], n.action[b]), q.action[c]);
        }
    if (image(act) != sl) return Witness{{}, "the bracketings differ from Delta^2(1).(M (x) N (x) P)"};
    return std::nullopt;
  }());
  // the associator in carrier coordinates
  const Mat assoc = right.carrier.coordinates() * kron(Mat::identity(m.dim), nq.retraction) * emb_left;
  r.check("Thm 2.4 associator linear", "m", first_failure({
      [&] { return sl == sr ? std::nullopt : std::optional<Witness>(Witness{{}, "bracketings differ"}); },
      [&] { return differ(emb_right * assoc, emb_left, "associator"); },
      [&] { return check_module_map(left.module, right.module, assoc); },
  }));
  return r;
}

VerificationReport verify_tensor_l(const LeftModule& m, const LeftModule& n) {
  const Prebialgebra& p = base_of(m);
  VerificationReport r;
  const Mat pi = pi_l(m, n);
  const Mat id = Mat::identity(pi.rows());
  r.check("pi idempotent", "", differ(pi * pi, pi, "pi squared"));
  if (!check_axioms(p).monoidal()) {
    r.not_applicable("pi image is kernel of id - pi", "m");
    r.not_applicable("pi_bar isomorphism", "m");
    return r;
  }
  r.check("pi image is kernel of id - pi", "m",
          image(pi) == kernel(id - pi) ? std::nullopt : std::optional<Witness>(Witness{{}, "Im(pi) != Ker(id - pi)"}));
  const TensorL t = tensor_l(m, n);
  const TensorLQuotient q = tensor_l_quot(m, n);
  r.check("pi_bar isomorphism", "m", first_failure({
      [&] { return check_module(q.module); },
      [&] { return differ(q.pi_bar * q.pi_bar_inverse, Mat::identity(t.module.dim), "pi_bar after its inverse"); },
      [&] { return differ(q.pi_bar_inverse * q.pi_bar, Mat::identity(q.module.dim), "inverse after pi_bar"); },
      [&] { return check_module_map(q.module, t.module, q.pi_bar); },
  }));
  return r;
}

VerificationReport forgetful_structures(const LeftModule& m, const LeftModule& n) {
  same_base(m, n);
  const Prebialgebra& p = base_of(m);
  const std::size_t d = p.dim();
  const AxiomFlags flags = check_axioms(p);
  VerificationReport r;
  const char* always[] = {"Thm forgetful bimodule", "Thm forgetful bicomodule", "Thm forgetful S well-defined",
                          "Thm forgetful S^ S_", "Thm forgetful tensor in cotensor"};
  const char* strong[] = {"Thm forgetful S_ S^", "Thm forgetful cotensor equality", "Cor alg4 dimensions"};
  if (!flags.monoidal()) {
    for (const char* id : always) r.not_applicable(id, "m");
    for (const char* id : strong) r.not_applicable(id, "m&(lc|rc)");
    return r;
  }
  const CanonicalMaps cm = canonical_maps(p);
  const Subspace ht = image(cm.eps_t);
  const Mat e = ht.embedding();
  const Mat c = ht.coordinates();
  const std::size_t t = ht.dim();
  const Mat it = Mat::identity(t);
  const Mat im = Mat::identity(m.dim);
  const Mat in = Mat::identity(n.dim);

  r.check("Thm forgetful bimodule", "m", [&]() -> std::optional<Witness> {
    for (const LeftModule* x : {&m, &n}) {
      if (x->act(cm.eps_s_bar * p.one()) != Mat::identity(x->dim)) return Witness{{}, x->name + ": 1 does not act trivially on the right"};
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
          const Vec zi = e.col(i), zj = e.col(j);
          const Mat ri = x->act(cm.eps_s_bar * zi), rj = x->act(cm.eps_s_bar * zj);
          if (x->act(cm.eps_s_bar * p.mul(zi, zj)) != rj * ri)
            return Witness{{i, j}, x->name + ": right action not associative"};
          if (x->act(zi) * rj != rj * x->act(zi)) return Witness{{i, j}, x->name + ": left and right actions do not commute"};
        }
    }
    return std::nullopt;
  }());

  const Mat dt = kron(c, c) * subspace_comultiplications(p).t * e;
  const Mat eps_t_row = Mat::row_vector(p.counit()) * e;
  std::vector<Mat> ts;  // eps_t(e_x) in Ht coordinates
  for (std::size_t x = 0; x < d; ++x) ts.push_back(Mat::column_vector(c * cm.eps_t.col(x)));
  auto right_co = [&](const LeftModule& x) { return sum_over_delta(p, p.delta_one(), x.action, ts); };
  auto left_co = [&](const LeftModule& x) { return sum_over_delta(p, p.delta_one(), ts, x.action); };

  r.check("Thm forgetful bicomodule", "m", [&]() -> std::optional<Witness> {
    if (!tensor(ht, ht).contains_columns(subspace_comultiplications(p).t * e))
      return Witness{{}, "Delta_t leaves Ht (x) Ht"};
    for (const LeftModule* x : {&m, &n}) {
      const Mat ix = Mat::identity(x->dim);
      const Mat dr = right_co(*x), dl = left_co(*x);
      if (auto w = first_failure({
              [&] { return differ(kron(dr, it) * dr, kron(ix, dt) * dr, x->name + ": right coaction coassociativity"); },
              [&] { return differ(kron(ix, eps_t_row) * dr, ix, x->name + ": right coaction counit"); },
              [&] { return differ(kron(it, dl) * dl, kron(dt, ix) * dl, x->name + ": left coaction coassociativity"); },
              [&] { return differ(kron(eps_t_row, ix) * dl, ix, x->name + ": left coaction counit"); },
              [&] { return differ(kron(dl, it) * dr, kron(it, dr) * dl, x->name + ": coactions commute"); },
          }))
        return w;
    }
    return std::nullopt;
  }());

  const TensorL tl = tensor_l(m, n);
  std::vector<Mat> rel;
  for (std::size_t j = 0; j < t; ++j) {
    const Vec z = e.col(j);
    rel.push_back(kron(m.act(cm.eps_s_bar * z), in) - kron(im, n.act(z)));
  }
  const Mat relations = hcat(rel, m.dim * n.dim);
  const Quotient over_ht = quotient(image(relations));
  const Mat s_up = tl.retraction * tl.pi * over_ht.lift;  // M (x)_Ht N -> M (x)^l N
  const Mat s_down = over_ht.project * tl.section;        // M (x)^l N -> M (x)_Ht N
  const Subspace cotensor = kernel(kron(right_co(m), in) - kron(im, left_co(n)));

  r.check("Thm forgetful S well-defined", "m", (tl.pi * relations).is_zero()
                                                    ? std::nullopt
                                                    : std::optional<Witness>(Witness{{}, "pi does not vanish on the balancing relations"}));
  r.check("Thm forgetful S^ S_", "m", differ(s_up * s_down, Mat::identity(tl.carrier.dim()), "S^ S_"));
  r.check("Thm forgetful tensor in cotensor", "m",
          cotensor.contains(tl.carrier) ? std::nullopt
                                        : std::optional<Witness>(Witness{{}, "M (x)^l N is not inside the cotensor product"}));

  std::optional<Witness> w_inv = differ(s_down * s_up, Mat::identity(over_ht.dim()), "S_ S^");
  std::optional<Witness> w_cot =
      cotensor == tl.carrier ? std::nullopt : std::optional<Witness>(Witness{{}, "cotensor product differs from M (x)^l N"});
  const TensorLQuotient tq = tensor_l_quot(m, n);
  const std::size_t dims[] = {tl.carrier.dim(), tq.module.dim, over_ht.dim(), cotensor.dim()};
  std::optional<Witness> w_dim;
  if (!(dims[0] == dims[1] && dims[1] == dims[2] && dims[2] == dims[3]))
    w_dim = Witness{{dims[0], dims[1], dims[2], dims[3]}, "dimensions of the four tensor products differ"};
  empirical(r, flags, "Thm forgetful S_ S^", "lc|rc", w_inv);
  empirical(r, flags, "Thm forgetful cotensor equality", "lc|rc", w_cot);
  empirical(r, flags, "Cor alg4 dimensions", "lc|rc", w_dim);
  return r;
}

VerificationReport verify_section2(const Prebialgebra& p, std::uint64_t seed) {
  VerificationReport r;
  r.merge(verify_prop_2_1(p), "");
  r.merge(verify_unit_object(p), "");
  const AxiomFlags flags = check_axioms(p);
  const LeftModule h = regular_module(p);
  r.merge(verify_units(h), "H");
  for (std::size_t j = 0; j < p.dim(); ++j)
    r.merge(verify_naturality(h, h, p.right_mult(j)), "H, right multiplication by " + p.label(j));
  if (!flags.monoidal()) {
    r.merge(verify_tensor_l(h, h), "H,H");
    r.merge(verify_monoidal(h, h, h), "H,H,H");
    r.merge(forgetful_structures(h, h), "H,H");
    return r;
  }
  const LeftModule u = unit_object(p).module;
  const LeftModule ht = transported_unit(p);
  const std::vector<LeftModule> rnd = random_modules(p, 2, seed);
  for (const LeftModule* x : {&u, &ht, &rnd[0], &rnd[1]}) {
    r.check("module laws [" + x->name + "]", "", check_module(*x));
    r.merge(verify_units(*x), x->name);
  }
  const std::vector<std::array<const LeftModule*, 2>> pairs = {{&h, &h}, {&u, &h}, {&h, &ht}, {&rnd[0], &rnd[1]}, {&rnd[1], &u}};
  for (const auto& [a, b] : pairs) {
    const std::string ctx = a->name + "," + b->name;
    r.merge(verify_tensor_l(*a, *b), ctx);
    r.merge(forgetful_structures(*a, *b), ctx);
  }
  const std::vector<std::array<const LeftModule*, 3>> triples = {
      {&h, &h, &h}, {&u, &h, &ht}, {&rnd[0], &u, &rnd[1]}, {&rnd[1], &h, &rnd[0]}};
  for (const auto& [a, b, c] : triples)
    r.merge(verify_monoidal(*a, *b, *c), a->name + "," + b->name + "," + c->name);
  return r;
}

}  // namespace wbalg
