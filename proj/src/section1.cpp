#include <functional>

#include "wbalg/prebialgebra.hpp"

namespace wbalg {

namespace {

using Check = std::function<std::optional<Witness>()>;

struct Context {
  const Prebialgebra& p;
  std::size_t n;
  CanonicalMaps m;
  SubspaceCatalog c;
  AxiomDecision ax;
  Mat id;
  Mat sw;  // flip on H (x) H
  Mat eps_row;
  Vec ev_one;  // evaluation at 1, the counit of H*
  VerificationReport report;

  explicit Context(const Prebialgebra& pb)
      : p(pb), n(pb.dim()), m(canonical_maps(pb)), c(subspace_catalog(pb)), ax(decide_axioms(pb)),
        id(Mat::identity(pb.dim())), sw(flip(pb.dim(), pb.dim())), eps_row(Mat::row_vector(pb.counit())),
        ev_one(pb.one()) {}

  Vec e(std::size_t i) const { return unit_vec(n, i); }
  Vec mul(const Vec& a, const Vec& b) const { return p.mul(a, b); }
  Vec dmul(const Vec& a, const Vec& b) const { return dual_mul(p, a, b); }
  Rational eps(const Vec& a) const { return p.eps(a); }
  Rational d1(std::size_t x, std::size_t y) const { return p.delta_one()[x * n + y]; }

  void gated(const std::string& id_, const std::string& hyp, const Check& run, const std::string& note = {}) {
    if (!hypothesis_holds(ax.flags, hyp)) {
      report.not_applicable(id_, hyp, note);
      return;
    }
    report.check(id_, hyp, run(), note);
  }
};

std::string fmt(const Context& cx, std::initializer_list<std::size_t> idx) {
  std::string s;
  for (std::size_t i : idx) {
    if (!s.empty()) s += ",";
    s += cx.p.label(i);
  }
  return s;
}

std::optional<Witness> first_failure(std::initializer_list<Check> checks) {
  for (const auto& c : checks)
    if (auto w = c()) return w;
  return std::nullopt;
}

std::optional<Witness> matrix_equal(const Mat& a, const Mat& b, const std::string& what) {
  if (auto col = first_differing_column(a, b)) return Witness{{*col}, what + " differs on basis element " + std::to_string(*col)};
  return std::nullopt;
}

std::optional<Witness> subset(const Subspace& a, const Subspace& b, const std::string& what) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(a.basis_vector(i)))
      return Witness{{i}, what + ": basis vector " + std::to_string(i) + " of the left side is outside the right side"};
  return std::nullopt;
}

std::optional<Witness> same(const Subspace& a, const Subspace& b, const std::string& what) {
  if (a == b) return std::nullopt;
  if (auto w = subset(a, b, what)) return w;
  return subset(b, a, what + " (reverse)");
}

// Closed under `prod` and containing `unit`.
std::optional<Witness> subalgebra(const Subspace& s, const Vec& unit,
                                  const std::function<Vec(const Vec&, const Vec&)>& prod, const std::string& what) {
  if (!s.contains(unit)) return Witness{{}, what + ": unit not contained"};
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(prod(s.basis_vector(i), s.basis_vector(j))))
        return Witness{{i, j}, what + ": product of basis vectors " + std::to_string(i) + "," + std::to_string(j) +
                                   " leaves the subspace"};
  return std::nullopt;
}

std::optional<Witness> idempotent(const Mat& a, const std::string& what) { return matrix_equal(a * a, a, what + " squared"); }

// a: S -> T and b: T -> S are mutually inverse.
std::optional<Witness> inverse_pair(const Mat& a, const Subspace& s, const Mat& b, const Subspace& t,
                                    const std::string& what) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vec v = s.basis_vector(i);
    if (!t.contains(a * v)) return Witness{{i}, what + ": forward map leaves the target on basis vector " + std::to_string(i)};
    if (b * (a * v) != v) return Witness{{i}, what + ": backward after forward is not the identity on basis vector " + std::to_string(i)};
  }
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const Vec v = t.basis_vector(i);
    if (!s.contains(b * v)) return Witness{{i}, what + ": backward map leaves the source on basis vector " + std::to_string(i)};
    if (a * (b * v) != v) return Witness{{i}, what + ": forward after backward is not the identity on basis vector " + std::to_string(i)};
  }
  return std::nullopt;
}

// a(xy) = a(y) a(x) for x, y in s.
std::optional<Witness> anti_multiplicative(const Mat& a, const Subspace& s,
                                           const std::function<Vec(const Vec&, const Vec&)>& prod,
                                           const std::string& what) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Vec x = s.basis_vector(i);
      const Vec y = s.basis_vector(j);
      if (a * prod(x, y) != prod(a * y, a * x))
        return Witness{{i, j}, what + ": not anti-multiplicative on basis vectors " + std::to_string(i) + "," + std::to_string(j)};
    }
  return std::nullopt;
}

// Coassociative and counital on s, landing in s (x) s.
std::optional<Witness> coalgebra_on(const Mat& d, const Subspace& s, const Vec& counit, const std::string& what) {
  const std::size_t n = s.ambient();
  const Subspace ss = tensor(s, s);
  const Mat id = Mat::identity(n);
  const Mat left = kron(d, id);
  const Mat right = kron(id, d);
  const Mat c = Mat::row_vector(counit);
  const Mat c_left = kron(c, id);
  const Mat c_right = kron(id, c);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vec z = s.basis_vector(i);
    const Vec dz = d * z;
    if (!ss.contains(dz)) return Witness{{i}, what + ": comultiplication leaves S (x) S on basis vector " + std::to_string(i)};
    if (left * dz != right * dz) return Witness{{i}, what + ": not coassociative on basis vector " + std::to_string(i)};
    if (c_left * dz != z || c_right * dz != z)
      return Witness{{i}, what + ": not counital on basis vector " + std::to_string(i)};
  }
  return std::nullopt;
}

// a: S -> T intertwines the comultiplications ds and dt.
std::optional<Witness> coalgebra_map(const Mat& a, const Subspace& s, const Mat& ds, const Mat& dt,
                                     const std::string& what) {
  const Mat aa = kron(a, a);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vec z = s.basis_vector(i);
    if (aa * (ds * z) != dt * (a * z))
      return Witness{{i}, what + ": does not commute with comultiplication on basis vector " + std::to_string(i)};
  }
  return std::nullopt;
}

// --- Lemma 1.1 -----------------------------------------------------------------

struct Identity11 {
  const char* id;
  const char* flag;
  std::function<std::optional<Witness>(const Context&)> run;
};

bool flag_value(const AxiomFlags& f, const std::string& name) {
  if (name == "lm") return f.lm;
  if (name == "rm") return f.rm;
  if (name == "lc") return f.lc;
  return f.rc;
}

const std::optional<Witness>& flag_witness(const AxiomDecision& d, const std::string& name) {
  if (name == "lm") return d.lm_witness;
  if (name == "rm") return d.rm_witness;
  if (name == "lc") return d.lc_witness;
  return d.rc_witness;
}

// Left-hand sides in 1.1.1-1.1.4 use the composed maps; right-hand sides are
// expanded directly from the structure constants.
std::optional<Witness> pair_identity(const Context& cx, const Mat& map, bool map_on_left, bool use_first_leg,
                                     bool g_first, const char* text) {
  const auto& sc = cx.p.constants();
  const std::size_t n = cx.n;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      const Vec mg = map * cx.e(g);
      const Vec lhs = map_on_left ? cx.mul(mg, cx.e(h)) : cx.mul(cx.e(h), mg);
      Vec rhs = zero_vec(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Rational& d = sc.delta(h, a, b);
          if (sgn(d) == 0) continue;
          const std::size_t paired = use_first_leg ? a : b;
          const std::size_t kept = use_first_leg ? b : a;
          const Rational& coeff = g_first ? cx.p.eps2(g, paired) : cx.p.eps2(paired, g);
          if (sgn(coeff) != 0) rhs[kept] += d * coeff;
        }
      if (lhs != rhs) return Witness{{h, g}, std::string(text) + " fails at (h,g) = (" + fmt(cx, {h, g}) + ")"};
    }
  return std::nullopt;
}

std::optional<Witness> coproduct_identity(const Context& cx, bool map_on_second, const Mat& map, bool h_first,
                                          bool h_on_left, const char* text) {
  const auto& sc = cx.p.constants();
  const std::size_t n = cx.n;
  const Mat lhs_op = map_on_second ? kron(cx.id, map) : kron(map, cx.id);
  for (std::size_t h = 0; h < n; ++h) {
    const Vec lhs = lhs_op * cx.p.comul(cx.e(h));
    Vec rhs = zero_vec(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Rational d = cx.d1(x, y);
        if (sgn(d) == 0) continue;
        const std::size_t leg = h_first ? x : y;
        for (std::size_t r = 0; r < n; ++r) {
          const Rational& prod = h_on_left ? sc.mu(h, leg, r) : sc.mu(leg, h, r);
          if (sgn(prod) == 0) continue;
          rhs[h_first ? r * n + y : x * n + r] += d * prod;
        }
      }
    if (lhs != rhs) return Witness{{h}, std::string(text) + " fails at h = " + cx.p.label(h)};
  }
  return std::nullopt;
}

void lemma_1_1(Context& cx) {
  const CanonicalMaps& m = cx.m;
  const std::vector<Identity11> ids = {
      {"eq 1.1.1", "rm",
       [&m](const Context& c) { return pair_identity(c, m.eps_t, false, true, false, "h eps_t(g) = <eps, h_(1) g> h_(2)"); }},
      {"eq 1.1.2", "rm",
       [&m](const Context& c) { return pair_identity(c, m.eps_s, true, false, true, "eps_s(g) h = <eps, g h_(2)> h_(1)"); }},
      {"eq 1.1.3", "lm",
       [&m](const Context& c) { return pair_identity(c, m.eps_t_bar, true, true, true, "epsbar_t(g) h = <eps, g h_(1)> h_(2)"); }},
      {"eq 1.1.4", "lm",
       [&m](const Context& c) { return pair_identity(c, m.eps_s_bar, false, false, false, "h epsbar_s(g) = <eps, h_(2) g> h_(1)"); }},
      {"eq 1.1.5", "rc",
       [&m](const Context& c) {
         return coproduct_identity(c, true, m.eps_t, true, false, "h_(1) (x) eps_t(h_(2)) = 1_(1) h (x) 1_(2)");
       }},
      {"eq 1.1.6", "rc",
       [&m](const Context& c) {
         return coproduct_identity(c, false, m.eps_s, false, true, "eps_s(h_(1)) (x) h_(2) = 1_(1) (x) h 1_(2)");
       }},
      {"eq 1.1.7", "lc",
       [&m](const Context& c) {
         return coproduct_identity(c, true, m.eps_t_bar, true, true, "h_(1) (x) epsbar_t(h_(2)) = h 1_(1) (x) 1_(2)");
       }},
      {"eq 1.1.8", "lc",
       [&m](const Context& c) {
         return coproduct_identity(c, false, m.eps_s_bar, false, false, "epsbar_s(h_(1)) (x) h_(2) = 1_(1) (x) 1_(2) h");
       }},
  };
  for (const auto& item : ids) {
    const std::optional<Witness> w = item.run(cx);
    const bool identity_holds = !w;
    const bool flag = flag_value(cx.ax.flags, item.flag);
    cx.report.check(item.id, std::string("iff ") + item.flag, w);
    std::optional<Witness> mismatch;
    if (identity_holds != flag) {
      if (w) {
        mismatch = Witness{w->indices, "identity fails although (" + std::string(item.flag) + ") holds: " + w->detail};
      } else {
        const auto& fw = flag_witness(cx.ax, item.flag);
        mismatch = Witness{fw ? fw->indices : std::vector<std::size_t>{},
                           "identity holds although (" + std::string(item.flag) + ") fails"};
      }
    }
    cx.report.check(std::string(item.id) + " equivalence", "", mismatch,
                    identity_holds ? "identity holds" : "identity fails");
  }
}

// --- Lemma 1.2 -----------------------------------------------------------------

void lemma_1_2(Context& cx) {
  const SubspaceCatalog& c = cx.c;
  auto chain = [](const Subspace& i, const Subspace& h, const Subspace& l, const Subspace& hb, const Subspace& ib,
                  const std::string& nm) {
    return first_failure({[&] { return subset(i, h, "I" + nm + " in H" + nm); },
                          [&] { return subset(h, l, "H" + nm + " in the image of f"); },
                          [&] { return subset(hb, l, "Hbar" + nm + " in the image of f"); },
                          [&] { return subset(ib, hb, "Ibar" + nm + " in Hbar" + nm); }});
  };
  cx.report.check("Lemma 1.2 chain t", "", chain(c.I_t, c.H_t, c.H_L, c.H_t_bar, c.I_t_bar, "_t"));
  cx.report.check("Lemma 1.2 chain s", "", chain(c.I_s, c.H_s, c.H_R, c.H_s_bar, c.I_s_bar, "_s"));
  cx.report.check("Lemma 1.2 chain t*", "", chain(c.Ist_t, c.Hst_t, c.Hst_L, c.Hst_t_bar, c.Ist_t_bar, "*_t"));
  cx.report.check("Lemma 1.2 chain s*", "", chain(c.Ist_s, c.Hst_s, c.Hst_R, c.Hst_s_bar, c.Ist_s_bar, "*_s"));

  cx.gated("eq 1.2.1", "rc", [&] {
    return first_failure({[&] { return same(c.I_t, c.H_t, "I_t = H_t"); }, [&] { return same(c.H_t, c.H_L, "H_t = H_L"); },
                          [&] { return same(c.I_s, c.H_s, "I_s = H_s"); }, [&] { return same(c.H_s, c.H_R, "H_s = H_R"); },
                          [&] { return same(c.Ist_t, c.Hst_t, "I*_t = H*_t"); },
                          [&] { return same(c.Ist_s, c.Hst_s, "I*_s = H*_s"); }});
  });
  cx.gated("eq 1.2.2", "lc", [&] {
    return first_failure({[&] { return same(c.I_t_bar, c.H_t_bar, "Ibar_t = Hbar_t"); },
                          [&] { return same(c.H_t_bar, c.H_L, "Hbar_t = H_L"); },
                          [&] { return same(c.I_s_bar, c.H_s_bar, "Ibar_s = Hbar_s"); },
                          [&] { return same(c.H_s_bar, c.H_R, "Hbar_s = H_R"); },
                          [&] { return same(c.Ist_t_bar, c.Hst_t_bar, "Ibar*_t = Hbar*_t"); },
                          [&] { return same(c.Ist_s_bar, c.Hst_s_bar, "Ibar*_s = Hbar*_s"); }});
  });
  cx.gated("eq 1.2.3", "rm", [&] {
    return first_failure({[&] { return same(c.Ist_t, c.Hst_t, "I*_t = H*_t"); },
                          [&] { return same(c.Hst_t, c.Hst_L, "H*_t = H*_L"); },
                          [&] { return same(c.Ist_s, c.Hst_s, "I*_s = H*_s"); },
                          [&] { return same(c.Hst_s, c.Hst_R, "H*_s = H*_R"); },
                          [&] { return same(c.I_t, c.H_t, "I_t = H_t"); }, [&] { return same(c.I_s, c.H_s, "I_s = H_s"); }});
  });
  cx.gated("eq 1.2.4", "lm", [&] {
    return first_failure({[&] { return same(c.Ist_t_bar, c.Hst_t_bar, "Ibar*_t = Hbar*_t"); },
                          [&] { return same(c.Hst_t_bar, c.Hst_L, "Hbar*_t = H*_L"); },
                          [&] { return same(c.Ist_s_bar, c.Hst_s_bar, "Ibar*_s = Hbar*_s"); },
                          [&] { return same(c.Hst_s_bar, c.Hst_R, "Hbar*_s = H*_R"); },
                          [&] { return same(c.I_t_bar, c.H_t_bar, "Ibar_t = Hbar_t"); },
                          [&] { return same(c.I_s_bar, c.H_s_bar, "Ibar_s = Hbar_s"); }});
  });
  cx.gated("eq 1.2.7", "c", [&] {
    return first_failure({[&] { return same(c.H_t, c.H_t_bar, "H_t = Hbar_t"); },
                          [&] { return same(c.H_s, c.H_s_bar, "H_s = Hbar_s"); }});
  });
  cx.gated("eq 1.2.6", "m", [&] {
    return first_failure({[&] { return same(c.Hst_t, c.Hst_t_bar, "H*_t = Hbar*_t"); },
                          [&] { return same(c.Hst_s, c.Hst_s_bar, "H*_s = Hbar*_s"); }});
  });

  // Converse implications, valid over a finite free base.
  auto converse = [&](const std::string& flag, bool premise1, bool premise2, const std::string& text) {
    std::optional<Witness> w;
    if ((premise1 || premise2) && !flag_value(cx.ax.flags, flag)) {
      const auto& fw = flag_witness(cx.ax, flag);
      w = Witness{fw ? fw->indices : std::vector<std::size_t>{}, text + " holds but (" + flag + ") fails"};
    }
    cx.report.check("Lemma 1.2 converse " + flag, "", w);
  };
  converse("rc", c.I_t == c.H_L, c.I_s == c.H_R, "I_t = H_L or I_s = H_R");
  converse("lc", c.I_t_bar == c.H_L, c.I_s_bar == c.H_R, "Ibar_t = H_L or Ibar_s = H_R");
  converse("rm", c.Ist_t == c.Hst_L, c.Ist_s == c.Hst_R, "I*_t = H*_L or I*_s = H*_R");
  converse("lm", c.Ist_t_bar == c.Hst_L, c.Ist_s_bar == c.Hst_R, "Ibar*_t = H*_L or Ibar*_s = H*_R");
}

// --- Lemma 1.3, Lemma eps_1 ---------------------------------------------------

void lemma_1_3(Context& cx) {
  const CanonicalMaps& m = cx.m;
  cx.gated("Lemma 1.3 t/s", "rm|rc", [&] {
    return first_failure({[&] { return idempotent(m.eps_t, "eps_t"); }, [&] { return idempotent(m.eps_s, "eps_s"); },
                          [&] { return idempotent(m.eps_t_star, "eps*_t"); },
                          [&] { return idempotent(m.eps_s_star, "eps*_s"); },
                          [&]() -> std::optional<Witness> {
                            if (idempotent_split(m.eps_t).image != cx.c.H_t)
                              return Witness{{}, "split image of eps_t differs from H_t"};
                            return std::nullopt;
                          }});
  });
  cx.gated("Lemma 1.3 bar", "lm|lc", [&] {
    return first_failure({[&] { return idempotent(m.eps_t_bar, "epsbar_t"); },
                          [&] { return idempotent(m.eps_s_bar, "epsbar_s"); },
                          [&] { return idempotent(m.eps_t_bar_star, "epsbar*_t"); },
                          [&] { return idempotent(m.eps_s_bar_star, "epsbar*_s"); }});
  });
}

void lemma_eps_1(Context& cx) {
  const CanonicalMaps& m = cx.m;
  const Vec& d1 = cx.p.delta_one();
  auto cmp = [](const Vec& a, const Vec& b, const std::string& text) -> std::optional<Witness> {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return Witness{{i}, text + " differs at tensor coordinate " + std::to_string(i)};
    return std::nullopt;
  };
  cx.report.check("eq eps_1 (a)", "", cmp(kron(m.eps_s, cx.id) * d1, kron(cx.id, m.eps_t) * d1,
                                          "eps_s(1_(1)) (x) 1_(2) = 1_(1) (x) eps_t(1_(2))"));
  cx.report.check("eq eps_1 (b)", "", cmp(kron(m.eps_s_bar, cx.id) * d1, kron(cx.id, m.eps_t_bar) * d1,
                                          "epsbar_s(1_(1)) (x) 1_(2) = 1_(1) (x) epsbar_t(1_(2))"));
  cx.report.check("eq eps_1_tw (a)", "", cmp(kron(m.eps_t, cx.id) * d1, kron(cx.id, m.eps_t_bar) * (cx.sw * d1),
                                             "eps_t(1_(1)) (x) 1_(2) = 1_(2) (x) epsbar_t(1_(1))"));
  cx.report.check("eq eps_1_tw (b)", "", cmp(kron(m.eps_s_bar, cx.id) * (cx.sw * d1), kron(cx.id, m.eps_s) * d1,
                                             "epsbar_s(1_(2)) (x) 1_(1) = 1_(1) (x) eps_s(1_(2))"));
}

// --- Lemma 1.4, more_algs -------------------------------------------------------

void lemma_1_4(Context& cx) {
  const CanonicalMaps& m = cx.m;
  const SubspaceCatalog& c = cx.c;
  const std::size_t n = cx.n;
  auto hmul = [&cx](const Vec& a, const Vec& b) { return cx.mul(a, b); };
  auto dmul = [&cx](const Vec& a, const Vec& b) { return cx.dmul(a, b); };

  // prod(E h, E g) = E(combine(h, g)) for basis h, g.
  auto law = [&](const Mat& e, const std::function<Vec(const Vec&, const Vec&)>& prod,
                 const std::function<Vec(const Vec&, const Vec&)>& inner, const std::string& text)
      -> std::optional<Witness> {
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t g = 0; g < n; ++g) {
        const Vec lhs = prod(e * cx.e(h), e * cx.e(g));
        const Vec rhs = e * inner(cx.e(h), cx.e(g));
        if (lhs != rhs) return Witness{{h, g}, text + " fails at (h,g) = (" + std::to_string(h) + "," + std::to_string(g) + ")"};
      }
    return std::nullopt;
  };
  auto left_in = [](const Mat& e, const std::function<Vec(const Vec&, const Vec&)>& prod) {
    return [e, prod](const Vec& h, const Vec& g) { return prod(e * h, g); };
  };
  auto right_in = [](const Mat& e, const std::function<Vec(const Vec&, const Vec&)>& prod) {
    return [e, prod](const Vec& h, const Vec& g) { return prod(h, e * g); };
  };

  cx.gated("eq 1.4.1", "rm", [&] {
    return first_failure({[&] { return law(m.eps_t, hmul, left_in(m.eps_t, hmul), "eps_t(h)eps_t(g) = eps_t(eps_t(h)g)"); },
                          [&] { return law(m.eps_s, hmul, right_in(m.eps_s, hmul), "eps_s(h)eps_s(g) = eps_s(h eps_s(g))"); }});
  });
  cx.gated("eq 1.4.2", "lm", [&] {
    return first_failure(
        {[&] { return law(m.eps_t_bar, hmul, right_in(m.eps_t_bar, hmul), "epsbar_t(h)epsbar_t(g) = epsbar_t(h epsbar_t(g))"); },
         [&] { return law(m.eps_s_bar, hmul, left_in(m.eps_s_bar, hmul), "epsbar_s(h)epsbar_s(g) = epsbar_s(epsbar_s(h)g)"); }});
  });
  cx.gated("eq 1.4.3", "rc", [&] {
    return first_failure(
        {[&] { return law(m.eps_t_star, dmul, left_in(m.eps_t_star, dmul), "eps*_t law"); },
         [&] { return law(m.eps_s_star, dmul, right_in(m.eps_s_star, dmul), "eps*_s law"); }});
  });
  cx.gated("eq 1.4.4", "lc", [&] {
    return first_failure(
        {[&] { return law(m.eps_t_bar_star, dmul, right_in(m.eps_t_bar_star, dmul), "epsbar*_t law"); },
         [&] { return law(m.eps_s_bar_star, dmul, left_in(m.eps_s_bar_star, dmul), "epsbar*_s law"); }});
  });

  const Vec& one = cx.p.one();
  const Vec& eps = cx.p.counit();
  auto pair_of_algebras = [&](const Subspace& a, const Subspace& b, const Vec& unit,
                              const std::function<Vec(const Vec&, const Vec&)>& prod, const std::string& na,
                              const std::string& nb) {
    return first_failure({[&] { return subalgebra(a, unit, prod, na); }, [&] { return subalgebra(b, unit, prod, nb); }});
  };
  cx.gated("Lemma 1.4 (rm)", "rm", [&] { return pair_of_algebras(c.H_t, c.H_s, one, hmul, "H_t", "H_s"); });
  cx.gated("Lemma 1.4 (lm)", "lm", [&] { return pair_of_algebras(c.H_t_bar, c.H_s_bar, one, hmul, "Hbar_t", "Hbar_s"); });
  cx.gated("Lemma 1.4 (rc)", "rc", [&] { return pair_of_algebras(c.Hst_t, c.Hst_s, eps, dmul, "H*_t", "H*_s"); });
  cx.gated("Lemma 1.4 (lc)", "lc",
           [&] { return pair_of_algebras(c.Hst_t_bar, c.Hst_s_bar, eps, dmul, "Hbar*_t", "Hbar*_s"); });
  cx.gated("Lemma more_algs (rc)", "rc", [&] { return pair_of_algebras(c.H_s, c.H_t, one, hmul, "H_s", "H_t"); });
  cx.gated("Lemma more_algs (lc)", "lc",
           [&] { return pair_of_algebras(c.H_s_bar, c.H_t_bar, one, hmul, "Hbar_s", "Hbar_t"); });
  cx.gated("Lemma more_algs (rm)", "rm", [&] { return pair_of_algebras(c.Hst_s, c.Hst_t, eps, dmul, "H*_s", "H*_t"); });
  cx.gated("Lemma more_algs (lm)", "lm",
           [&] { return pair_of_algebras(c.Hst_s_bar, c.Hst_t_bar, eps, dmul, "Hbar*_s", "Hbar*_t"); });
}

// --- Lemmas 1.5, 1.7, 1.8, 1.9, 1.10 -----------------------------------------------

void lemmas_1_5_to_1_10(Context& cx) {
  const CanonicalMaps& m = cx.m;
  const SubspaceCatalog& c = cx.c;
  const Vec& d1 = cx.p.delta_one();
  const std::size_t n = cx.n;

  auto member = [](const Subspace& s, const Vec& v, const std::string& text) -> std::optional<Witness> {
    if (s.contains(v)) return std::nullopt;
    return Witness{{}, text};
  };
  cx.gated("eq 1.5.1 (rc)", "rc", [&] { return member(tensor(c.H_s, c.H_t), d1, "Delta(1) not in H_s (x) H_t"); });
  cx.gated("eq 1.5.1 (lc)", "lc",
           [&] { return member(tensor(c.H_s_bar, c.H_t_bar), d1, "Delta(1) not in Hbar_s (x) Hbar_t"); });

  cx.gated("Lemma 1.7 (rm|rc)", "rm|rc", [&] {
    return first_failure({[&] { return inverse_pair(m.g, c.H_t, m.f, c.Hst_t, "g: H_t -> H*_t, f"); },
                          [&] { return inverse_pair(m.g_prime, c.H_s, m.f_prime, c.Hst_s, "g': H_s -> H*_s, f'"); }});
  });
  cx.gated("Lemma 1.7 (lm|lc)", "lm|lc", [&] {
    return first_failure(
        {[&] { return inverse_pair(m.g_prime, c.H_t_bar, m.f, c.Hst_s_bar, "g': Hbar_t -> Hbar*_s, f"); },
         [&] { return inverse_pair(m.g, c.H_s_bar, m.f_prime, c.Hst_t_bar, "g: Hbar_s -> Hbar*_t, f'"); }});
  });

  // sum_i a_i <b_i, y> = y for y in s, where sum a_i (x) b_i = basis_vec in H (x) H*.
  auto dual_basis = [&](const Vec& element, const Subspace& s, const Subspace& owner_a, const Subspace& owner_b,
                        const std::string& text) -> std::optional<Witness> {
    if (!tensor(owner_a, owner_b).contains(element)) return Witness{{}, text + ": dual basis element outside its tensor space"};
    for (std::size_t k = 0; k < s.dim(); ++k) {
      const Vec y = s.basis_vector(k);
      Vec out = zero_vec(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (sgn(element[a * n + b]) != 0) out[a] += element[a * n + b] * y[b];
      if (out != y) return Witness{{k}, text + ": dual basis identity fails on basis vector " + std::to_string(k)};
    }
    return std::nullopt;
  };
  cx.gated("Lemma 1.8 (rm|rc)", "rm|rc", [&] {
    return first_failure({[&] { return dual_basis(kron(cx.id, m.g) * d1, c.H_s, c.H_s, c.Hst_t, "1_(1) (x) g(1_(2)) for H_s"); },
                          [&] {
                            return dual_basis(kron(cx.id, m.g_prime) * (cx.sw * d1), c.H_t, c.H_t, c.Hst_s,
                                              "1_(2) (x) g'(1_(1)) for H_t");
                          }});
  });
  cx.gated("Lemma 1.8 (lm|lc)", "lm|lc", [&] {
    return first_failure(
        {[&] {
           return dual_basis(kron(cx.id, m.g_prime) * d1, c.H_s_bar, c.H_s_bar, c.Hst_s_bar,
                             "1_(1) (x) g'(1_(2)) for Hbar_s");
         },
         [&] {
           return dual_basis(kron(cx.id, m.g) * (cx.sw * d1), c.H_t_bar, c.H_t_bar, c.Hst_t_bar,
                             "1_(2) (x) g(1_(1)) for Hbar_t");
         }});
  });

  cx.gated("eq 1.9.1", "lm", [&] {
    return first_failure({[&] { return matrix_equal(m.g * m.eps_s_bar, m.g, "g epsbar_s = g"); },
                          [&] { return matrix_equal(m.g_prime * m.eps_t_bar, m.g_prime, "g' epsbar_t = g'"); },
                          [&] { return matrix_equal(m.eps_t * m.eps_s_bar, m.eps_t, "eps_t epsbar_s = eps_t"); },
                          [&] { return matrix_equal(m.eps_s * m.eps_t_bar, m.eps_s, "eps_s epsbar_t = eps_s"); }});
  });
  cx.gated("eq 1.9.2", "rm", [&] {
    return first_failure({[&] { return matrix_equal(m.g_prime * m.eps_s, m.g_prime, "g' eps_s = g'"); },
                          [&] { return matrix_equal(m.g * m.eps_t, m.g, "g eps_t = g"); },
                          [&] { return matrix_equal(m.eps_t_bar * m.eps_s, m.eps_t_bar, "epsbar_t eps_s = epsbar_t"); },
                          [&] { return matrix_equal(m.eps_s_bar * m.eps_t, m.eps_s_bar, "epsbar_s eps_t = epsbar_s"); }});
  });
  cx.gated("Lemma 1.9 (lc)", "lc", [&] {
    return first_failure(
        {[&] { return matrix_equal(m.f * m.eps_s_bar_star, m.f, "f epsbar*_s = f"); },
         [&] { return matrix_equal(m.f_prime * m.eps_t_bar_star, m.f_prime, "f' epsbar*_t = f'"); },
         [&] { return matrix_equal(m.eps_t_star * m.eps_s_bar_star, m.eps_t_star, "eps*_t epsbar*_s = eps*_t"); },
         [&] { return matrix_equal(m.eps_s_star * m.eps_t_bar_star, m.eps_s_star, "eps*_s epsbar*_t = eps*_s"); }});
  });
  cx.gated("Lemma 1.9 (rc)", "rc", [&] {
    return first_failure(
        {[&] { return matrix_equal(m.f_prime * m.eps_s_star, m.f_prime, "f' eps*_s = f'"); },
         [&] { return matrix_equal(m.f * m.eps_t_star, m.f, "f eps*_t = f"); },
         [&] { return matrix_equal(m.eps_t_bar_star * m.eps_s_star, m.eps_t_bar_star, "epsbar*_t eps*_s = epsbar*_t"); },
         [&] { return matrix_equal(m.eps_s_bar_star * m.eps_t_star, m.eps_s_bar_star, "epsbar*_s eps*_t = epsbar*_s"); }});
  });

  auto commute = [&](const Mat& a, const Mat& b, const std::string& text) -> std::optional<Witness> {
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec x = a * cx.e(h);
        const Vec y = b * cx.e(k);
        if (cx.mul(x, y) != cx.mul(y, x)) return Witness{{h, k}, text + " fails at (h,k) = (" + fmt(cx, {h, k}) + ")"};
      }
    return std::nullopt;
  };
  cx.gated("eq 1.10.1", "c", [&] { return commute(m.eps_s, m.eps_t, "eps_s(h) eps_t(k) = eps_t(k) eps_s(h)"); });
  cx.gated("eq 1.10.2", "m", [&] {
    const Mat st = kron(m.eps_s, m.eps_t);
    return matrix_equal(st * cx.p.comult_matrix(), st * cx.sw * cx.p.comult_matrix(),
                        "eps_s(h_(1)) (x) eps_t(h_(2)) = eps_s(h_(2)) (x) eps_t(h_(1))");
  });
}

// --- Prop 1.11, eqs sbar_t / tbar_s ----------------------------------------------

void prop_1_11(Context& cx) {
  const CanonicalMaps& m = cx.m;
  const SubspaceCatalog& c = cx.c;
  const std::size_t n = cx.n;
  auto hmul = [&cx](const Vec& a, const Vec& b) { return cx.mul(a, b); };
  auto dmul = [&cx](const Vec& a, const Vec& b) { return cx.dmul(a, b); };

  auto anti_iso = [&](const Mat& a, const Subspace& s, const Mat& b, const Subspace& t,
                      const std::function<Vec(const Vec&, const Vec&)>& prod, const std::string& text) {
    return first_failure({[&] { return inverse_pair(a, s, b, t, text); },
                          [&] { return anti_multiplicative(a, s, prod, text + " forward"); },
                          [&] { return anti_multiplicative(b, t, prod, text + " backward"); }});
  };
  cx.gated("Prop 1.11 (m)", "m", [&] {
    return first_failure(
        {[&] { return anti_iso(m.eps_s_bar, c.H_t, m.eps_t, c.H_s_bar, hmul, "epsbar_s: H_t -> Hbar_s, eps_t"); },
         [&] { return anti_iso(m.eps_t_bar, c.H_s, m.eps_s, c.H_t_bar, hmul, "epsbar_t: H_s -> Hbar_t, eps_s"); }});
  });
  cx.gated(
      "Prop 1.11 (c)", "c",
      [&] {
        return first_failure(
            {[&] {
               return anti_iso(m.eps_t_bar_star, c.Hst_s, m.eps_s_star, c.Hst_t_bar, dmul,
                               "epsbar*_t: H*_s -> Hbar*_t, eps*_s");
             },
             [&] {
               return anti_iso(m.eps_s_bar_star, c.Hst_t, m.eps_t_star, c.Hst_s_bar, dmul,
                               "epsbar*_s: H*_t -> Hbar*_s, eps*_t");
             }});
      },
      "tested under exactly the stated hypothesis");

  const Vec& d1 = cx.p.delta_one();
  auto commute = [&](const Mat& a, const Mat& b, const std::string& text) -> std::optional<Witness> {
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec x = a * cx.e(h);
        const Vec y = b * cx.e(k);
        if (cx.mul(x, y) != cx.mul(y, x)) return Witness{{h, k}, text + " fails at (h,k) = (" + fmt(cx, {h, k}) + ")"};
      }
    return std::nullopt;
  };
  // (x (x) y) -> (a x (x) b y) where a, b are multiplications by fixed elements.
  auto tensor_identity = [&](const std::function<Mat(std::size_t)>& lhs, const std::function<Mat(std::size_t)>& rhs,
                             const std::string& text) -> std::optional<Witness> {
    for (std::size_t h = 0; h < n; ++h)
      if (lhs(h) * d1 != rhs(h) * d1) return Witness{{h}, text + " fails at h = " + cx.p.label(h)};
    return std::nullopt;
  };
  cx.gated("eq sbar_t", "m", [&] {
    return first_failure(
        {[&] { return commute(m.eps_s_bar, m.eps_t, "epsbar_s(h) eps_t(k) = eps_t(k) epsbar_s(h)"); },
         [&] {
           return tensor_identity(
               [&](std::size_t h) { return kron(cx.p.right_mult(m.eps_s_bar * cx.e(h)), cx.id); },
               [&](std::size_t h) { return kron(cx.id, cx.p.right_mult(m.eps_t * cx.e(h))); },
               "1_(1) epsbar_s(h) (x) 1_(2) = 1_(1) (x) 1_(2) eps_t(h)");
         }});
  });
  cx.gated("eq tbar_s", "m", [&] {
    return first_failure(
        {[&] { return commute(m.eps_s, m.eps_t_bar, "eps_s(h) epsbar_t(k) = epsbar_t(k) eps_s(h)"); },
         [&] {
           return tensor_identity(
               [&](std::size_t h) { return kron(cx.p.left_mult(m.eps_s * cx.e(h)), cx.id); },
               [&](std::size_t h) { return kron(cx.id, cx.p.left_mult(m.eps_t_bar * cx.e(h))); },
               "eps_s(h) 1_(1) (x) 1_(2) = 1_(1) (x) epsbar_t(h) 1_(2)");
         }});
  });
}

// --- Prop 1.12, coalg1 -----------------------------------------------------------

void prop_1_12(Context& cx) {
  const CanonicalMaps& m = cx.m;
  const SubspaceCatalog& c = cx.c;
  const SubspaceComultiplications d = subspace_comultiplications(cx.p);
  const Vec& eps = cx.p.counit();
  const Vec& ev = cx.ev_one;

  cx.gated("Prop 1.12 (rm|rc)", "rm|rc", [&] {
    return first_failure({[&] { return coalgebra_on(d.s, c.H_s, eps, "Delta_s on H_s"); },
                          [&] { return coalgebra_on(d.t, c.H_t, eps, "Delta_t on H_t"); },
                          [&] { return coalgebra_on(d.s_star, c.Hst_s, ev, "Delta*_s on H*_s"); },
                          [&] { return coalgebra_on(d.t_star, c.Hst_t, ev, "Delta*_t on H*_t"); }});
  });
  cx.gated("Prop 1.12 (lm|lc)", "lm|lc", [&] {
    return first_failure({[&] { return coalgebra_on(d.s_bar, c.H_s_bar, eps, "Deltabar_s on Hbar_s"); },
                          [&] { return coalgebra_on(d.t_bar, c.H_t_bar, eps, "Deltabar_t on Hbar_t"); },
                          [&] { return coalgebra_on(d.s_bar_star, c.Hst_s_bar, ev, "Deltabar*_s on Hbar*_s"); },
                          [&] { return coalgebra_on(d.t_bar_star, c.Hst_t_bar, ev, "Deltabar*_t on Hbar*_t"); }});
  });

  const Subspace all = Subspace::full(cx.n);
  auto counit_preserved = [&](const Mat& a, const std::string& text) -> std::optional<Witness> {
    if (auto col = first_differing_column(cx.eps_row * a, cx.eps_row)) return Witness{{*col}, text + " does not preserve eps"};
    return std::nullopt;
  };
  cx.gated("Prop coalg1 (rm|rc)", "rm|rc", [&] {
    return first_failure({[&] { return coalgebra_map(m.eps_t, all, cx.p.comult_matrix(), d.t, "eps_t"); },
                          [&] { return coalgebra_map(m.eps_s, all, cx.p.comult_matrix(), d.s, "eps_s"); },
                          [&] { return counit_preserved(m.eps_t, "eps_t"); },
                          [&] { return counit_preserved(m.eps_s, "eps_s"); }});
  });
  cx.gated("Prop coalg1 (lm|lc)", "lm|lc", [&] {
    return first_failure({[&] { return coalgebra_map(m.eps_t_bar, all, cx.p.comult_matrix(), d.t_bar, "epsbar_t"); },
                          [&] { return coalgebra_map(m.eps_s_bar, all, cx.p.comult_matrix(), d.s_bar, "epsbar_s"); },
                          [&] { return counit_preserved(m.eps_t_bar, "epsbar_t"); },
                          [&] { return counit_preserved(m.eps_s_bar, "epsbar_s"); }});
  });
  cx.gated("Prop coalg1 (m)", "m", [&] {
    return first_failure({[&] { return coalgebra_map(m.eps_s_bar, c.H_t, d.t, d.s_bar, "epsbar_s: H_t -> Hbar_s"); },
                          [&] { return coalgebra_map(m.eps_t, c.H_s_bar, d.s_bar, d.t, "eps_t: Hbar_s -> H_t"); },
                          [&] { return coalgebra_map(m.eps_t_bar, c.H_s, d.s, d.t_bar, "epsbar_t: H_s -> Hbar_t"); },
                          [&] { return coalgebra_map(m.eps_s, c.H_t_bar, d.t_bar, d.s, "eps_s: Hbar_t -> H_s"); }});
  });
  cx.gated("Prop coalg1 (c)", "c", [&] {
    auto cop = [&](const Mat& bar, const Mat& plain, const Subspace& s, const std::string& text) -> std::optional<Witness> {
      for (std::size_t i = 0; i < s.dim(); ++i) {
        const Vec z = s.basis_vector(i);
        if (bar * z != cx.sw * (plain * z)) return Witness{{i}, text + " fails on basis vector " + std::to_string(i)};
      }
      return std::nullopt;
    };
    return first_failure({[&] { return same(c.H_t_bar, c.H_t, "Hbar_t = H_t"); },
                          [&] { return same(c.H_s_bar, c.H_s, "Hbar_s = H_s"); },
                          [&] { return cop(d.t_bar, d.t, c.H_t, "Deltabar_t = Delta_t^cop"); },
                          [&] { return cop(d.s_bar, d.s, c.H_s, "Deltabar_s = Delta_s^cop"); }});
  });
}

void canonical_map_checks(Context& cx) {
  const CanonicalMaps& a = cx.m;
  const CanonicalMaps b = canonical_maps_explicit(cx.p);
  cx.report.check("maps composite=explicit", "",
                  first_failure({[&] { return matrix_equal(a.f, b.f, "f"); },
                                 [&] { return matrix_equal(a.f_prime, b.f_prime, "f'"); },
                                 [&] { return matrix_equal(a.g, b.g, "g"); },
                                 [&] { return matrix_equal(a.g_prime, b.g_prime, "g'"); },
                                 [&] { return matrix_equal(a.eps_t, b.eps_t, "eps_t"); },
                                 [&] { return matrix_equal(a.eps_s, b.eps_s, "eps_s"); },
                                 [&] { return matrix_equal(a.eps_t_bar, b.eps_t_bar, "epsbar_t"); },
                                 [&] { return matrix_equal(a.eps_s_bar, b.eps_s_bar, "epsbar_s"); },
                                 [&] { return matrix_equal(a.eps_t_star, b.eps_t_star, "eps*_t"); },
                                 [&] { return matrix_equal(a.eps_s_star, b.eps_s_star, "eps*_s"); },
                                 [&] { return matrix_equal(a.eps_t_bar_star, b.eps_t_bar_star, "epsbar*_t"); },
                                 [&] { return matrix_equal(a.eps_s_bar_star, b.eps_s_bar_star, "epsbar*_s"); }}));
  cx.report.check("maps transpose", "",
                  first_failure({[&] { return matrix_equal(a.eps_t.transpose(), a.eps_s_star, "eps_t^T = eps*_s"); },
                                 [&] { return matrix_equal(a.eps_s.transpose(), a.eps_t_star, "eps_s^T = eps*_t"); },
                                 [&] { return matrix_equal(a.eps_t_bar.transpose(), a.eps_t_bar_star, "epsbar_t^T = epsbar*_t"); },
                                 [&] { return matrix_equal(a.eps_s_bar.transpose(), a.eps_s_bar_star, "epsbar_s^T = epsbar*_s"); },
                                 [&] { return matrix_equal(a.f_prime, a.f.transpose(), "f' = f^T"); },
                                 [&] { return matrix_equal(a.g_prime, a.g.transpose(), "g' = g^T"); }}));
}

}  // namespace

SubspaceComultiplications subspace_comultiplications(const Prebialgebra& p) {
  const CanonicalMaps m = canonical_maps(p);
  const std::size_t n = p.dim();
  auto e = [n](std::size_t i) { return unit_vec(n, i); };
  SubspaceComultiplications d;
  for (Mat* x : {&d.t, &d.s, &d.t_bar, &d.s_bar, &d.t_star, &d.s_star, &d.t_bar_star, &d.s_bar_star})
    *x = Mat(n * n, n);
  std::vector<Vec> g(n), gp(n);
  for (std::size_t x = 0; x < n; ++x) {
    g[x] = m.g * e(x);
    gp[x] = m.g_prime * e(x);
  }
  auto add = [n](Mat& target, std::size_t col, const Rational& c, const Vec& a, const Vec& b) {
    const Vec v = kron(a, b);
    for (std::size_t r = 0; r < n * n; ++r)
      if (sgn(v[r]) != 0) target(r, col) += c * v[r];
  };
  for (std::size_t j = 0; j < n; ++j) {
    const Vec z = e(j);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Rational& c = p.delta_one()[x * n + y];
        if (sgn(c) == 0) continue;
        const Vec ex = e(x), ey = e(y);
        add(d.t, j, c, m.eps_t * p.mul(ex, z), m.eps_t * ey);
        add(d.s, j, c, m.eps_s * ex, m.eps_s * p.mul(z, ey));
        add(d.t_bar, j, c, m.eps_t_bar * p.mul(z, ex), m.eps_t_bar * ey);
        add(d.s_bar, j, c, m.eps_s_bar * ex, m.eps_s_bar * p.mul(ey, z));
        add(d.s_star, j, c, m.eps_s_star * gp[x], m.eps_s_star * dual_mul(p, z, g[y]));
        add(d.t_star, j, c, m.eps_t_star * dual_mul(p, gp[x], z), m.eps_t_star * g[y]);
        add(d.s_bar_star, j, c, m.eps_s_bar_star * dual_mul(p, z, gp[y]), m.eps_s_bar_star * g[x]);
        add(d.t_bar_star, j, c, m.eps_t_bar_star * gp[y], m.eps_t_bar_star * dual_mul(p, g[x], z));
      }
  }
  return d;
}

VerificationReport verify_section1(const Prebialgebra& p) {
  Context cx(p);
  canonical_map_checks(cx);
  lemma_1_1(cx);
  lemma_1_2(cx);
  lemma_1_3(cx);
  lemma_eps_1(cx);
  lemma_1_4(cx);
  lemmas_1_5_to_1_10(cx);
  prop_1_11(cx);
  prop_1_12(cx);
  return std::move(cx.report);
}

}  // namespace wbalg
