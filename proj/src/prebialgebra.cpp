#include "wbalg/prebialgebra.hpp"

#include <sstream>

namespace wbalg {

StructureConstants::StructureConstants(std::size_t n)
    : dim(n), mult(n * n * n, Rational(0)), comult(n * n * n, Rational(0)), unit(n, Rational(0)),
      counit(n, Rational(0)) {}

std::string StructureConstants::label(std::size_t i) const {
  if (i < basis.size() && !basis[i].empty()) return basis[i];
  return "e" + std::to_string(i);
}

namespace {

Witness witness_of(std::vector<std::size_t> indices, std::string detail) {
  return Witness{std::move(indices), std::move(detail)};
}

// Product of basis elements e_i e_j as a coordinate vector.
Vec basis_product(const StructureConstants& sc, std::size_t i, std::size_t j) {
  Vec v(sc.dim);
  for (std::size_t k = 0; k < sc.dim; ++k) v[k] = sc.mu(i, j, k);
  return v;
}

Vec combine_products(const StructureConstants& sc, const Vec& a, std::size_t right) {
  Vec out = zero_vec(sc.dim);
  for (std::size_t x = 0; x < sc.dim; ++x) {
    if (sgn(a[x]) == 0) continue;
    for (std::size_t k = 0; k < sc.dim; ++k) out[k] += a[x] * sc.mu(x, right, k);
  }
  return out;
}

Vec combine_products(const StructureConstants& sc, std::size_t left, const Vec& b) {
  Vec out = zero_vec(sc.dim);
  for (std::size_t x = 0; x < sc.dim; ++x) {
    if (sgn(b[x]) == 0) continue;
    for (std::size_t k = 0; k < sc.dim; ++k) out[k] += b[x] * sc.mu(left, x, k);
  }
  return out;
}

// Delta(e_i) as a vector of H (x) H.
Vec basis_coproduct(const StructureConstants& sc, std::size_t i) {
  const std::size_t n = sc.dim;
  Vec v(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) v[j * n + k] = sc.delta(i, j, k);
  return v;
}

std::optional<Witness> check_shape(const StructureConstants& sc) {
  const std::size_t n = sc.dim;
  const std::size_t n3 = n * n * n;
  if (n == 0) return witness_of({}, "dimension must be positive");
  if (sc.mult.size() != n3) return witness_of({}, "mult has wrong size");
  if (sc.comult.size() != n3) return witness_of({}, "comult has wrong size");
  if (sc.unit.size() != n) return witness_of({}, "unit has wrong size");
  if (sc.counit.size() != n) return witness_of({}, "counit has wrong size");
  if (!sc.basis.empty() && sc.basis.size() != n) return witness_of({}, "basis labels have wrong count");
  return std::nullopt;
}

}  // namespace

VerificationReport validate(const StructureConstants& sc) {
  VerificationReport report;
  if (auto bad = check_shape(sc)) {
    report.check("shape", "", bad);
    return report;
  }
  report.check("shape", "", std::nullopt);
  const std::size_t n = sc.dim;

  std::optional<Witness> assoc;
  for (std::size_t i = 0; i < n && !assoc; ++i)
    for (std::size_t j = 0; j < n && !assoc; ++j) {
      const Vec ij = basis_product(sc, i, j);
      for (std::size_t k = 0; k < n && !assoc; ++k) {
        const Vec lhs = combine_products(sc, ij, k);
        const Vec rhs = combine_products(sc, i, basis_product(sc, j, k));
        if (lhs != rhs) assoc = witness_of({i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)");
      }
    }
  report.check("associativity", "", assoc);

  std::optional<Witness> unital;
  for (std::size_t i = 0; i < n && !unital; ++i) {
    const Vec e = unit_vec(n, i);
    if (combine_products(sc, sc.unit, i) != e) unital = witness_of({i}, "1 e_i != e_i");
    else if (combine_products(sc, i, sc.unit) != e) unital = witness_of({i}, "e_i 1 != e_i");
  }
  report.check("unit", "", unital);

  std::optional<Witness> coassoc;
  for (std::size_t i = 0; i < n && !coassoc; ++i) {
    Vec lhs = zero_vec(n * n * n);
    Vec rhs = zero_vec(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Rational& d = sc.delta(i, a, b);
        if (sgn(d) == 0) continue;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            lhs[(x * n + y) * n + b] += d * sc.delta(a, x, y);
            rhs[(a * n + x) * n + y] += d * sc.delta(b, x, y);
          }
      }
    if (lhs != rhs) coassoc = witness_of({i}, "(Delta (x) id) Delta(e_i) != (id (x) Delta) Delta(e_i)");
  }
  report.check("coassociativity", "", coassoc);

  std::optional<Witness> counital;
  for (std::size_t i = 0; i < n && !counital; ++i) {
    Vec left = zero_vec(n);
    Vec right = zero_vec(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        left[b] += sc.counit[a] * sc.delta(i, a, b);
        right[a] += sc.counit[b] * sc.delta(i, a, b);
      }
    const Vec e = unit_vec(n, i);
    if (left != e) counital = witness_of({i}, "(eps (x) id) Delta(e_i) != e_i");
    else if (right != e) counital = witness_of({i}, "(id (x) eps) Delta(e_i) != e_i");
  }
  report.check("counit", "", counital);

  std::optional<Witness> multiplicative;
  for (std::size_t i = 0; i < n && !multiplicative; ++i) {
    const Vec di = basis_coproduct(sc, i);
    for (std::size_t j = 0; j < n && !multiplicative; ++j) {
      const Vec dj = basis_coproduct(sc, j);
      Vec lhs = zero_vec(n * n);
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(sc.mu(i, j, k)) == 0) continue;
        const Vec dk = basis_coproduct(sc, k);
        for (std::size_t t = 0; t < n * n; ++t) lhs[t] += sc.mu(i, j, k) * dk[t];
      }
      Vec rhs = zero_vec(n * n);
      for (std::size_t a = 0; a < n * n; ++a) {
        if (sgn(di[a]) == 0) continue;
        for (std::size_t b = 0; b < n * n; ++b) {
          if (sgn(dj[b]) == 0) continue;
          const Vec left = basis_product(sc, a / n, b / n);
          const Vec right = basis_product(sc, a % n, b % n);
          const Rational c = di[a] * dj[b];
          for (std::size_t x = 0; x < n; ++x) {
            if (sgn(left[x]) == 0) continue;
            for (std::size_t y = 0; y < n; ++y) {
              if (sgn(right[y]) != 0) rhs[x * n + y] += c * left[x] * right[y];
            }
          }
        }
      }
      if (lhs != rhs) multiplicative = witness_of({i, j}, "Delta(e_i e_j) != Delta(e_i) Delta(e_j)");
    }
  }
  report.check("multiplicativity", "", multiplicative);
  return report;
}

Prebialgebra::Prebialgebra(StructureConstants sc) : sc_(std::move(sc)) {
  VerificationReport report = validate(sc_);
  if (!report.all_hold()) {
    std::string msg = "not a prebialgebra:";
    for (const ReportEntry* e : report.failures()) msg += " " + e->id;
    throw StructureLawError(msg, std::move(report));
  }
  const std::size_t n = sc_.dim;
  left_.assign(n, Mat(n, n));
  right_.assign(n, Mat(n, n));
  mult_ = Mat(n, n * n);
  comult_ = Mat(n * n, n);
  eps2_ = Mat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& m = sc_.mu(i, j, k);
        left_[i](k, j) = m;
        right_[j](k, i) = m;
        mult_(k, i * n + j) = m;
        eps2_(i, j) += m * sc_.counit[k];
        comult_(j * n + k, i) = sc_.delta(i, j, k);
      }
  delta_one_ = comult_ * sc_.unit;
}

Vec Prebialgebra::mul(const Vec& a, const Vec& b) const { return mult_ * kron(a, b); }

Mat Prebialgebra::left_mult(const Vec& a) const {
  Mat out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(a[i]) != 0) out += a[i] * left_[i];
  return out;
}

Mat Prebialgebra::right_mult(const Vec& a) const {
  Mat out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(a[i]) != 0) out += a[i] * right_[i];
  return out;
}

Vec Prebialgebra::mul2(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec out = zero_vec(n * n);
  for (std::size_t a = 0; a < n * n; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < n * n; ++b) {
      if (sgn(y[b]) == 0) continue;
      const Rational c = x[a] * y[b];
      for (std::size_t p = 0; p < n; ++p) {
        const Rational& l = sc_.mu(a / n, b / n, p);
        if (sgn(l) == 0) continue;
        for (std::size_t q = 0; q < n; ++q) {
          const Rational& r = sc_.mu(a % n, b % n, q);
          if (sgn(r) != 0) out[p * n + q] += c * l * r;
        }
      }
    }
  }
  return out;
}

Vec dual_mul(const Prebialgebra& p, const Vec& phi, const Vec& psi) {
  const std::size_t n = p.dim();
  Vec out = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      if (sgn(psi[a]) == 0) continue;
      for (std::size_t b = 0; b < n; ++b) {
        const Rational& d = p.constants().delta(i, a, b);
        if (sgn(d) != 0) out[i] += d * psi[a] * phi[b];
      }
    }
  return out;
}

// --- axioms ------------------------------------------------------------------

AxiomDecision decide_axioms(const Prebialgebra& p) {
  const std::size_t n = p.dim();
  const auto& sc = p.constants();
  AxiomDecision d;

  // eps(e_h e_k e_l) for all triples.
  auto eps3 = [&](std::size_t h, std::size_t k, std::size_t l) {
    Rational acc = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (sgn(sc.mu(h, k, x)) != 0) acc += sc.mu(h, k, x) * p.eps2(x, l);
    return acc;
  };

  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const Rational lhs = eps3(h, k, l);
        Rational left_form = 0;   // eps(h k_(1)) eps(k_(2) l)
        Rational right_form = 0;  // eps(h k_(2)) eps(k_(1) l)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const Rational& c = sc.delta(k, a, b);
            if (sgn(c) == 0) continue;
            left_form += c * p.eps2(h, a) * p.eps2(b, l);
            right_form += c * p.eps2(h, b) * p.eps2(a, l);
          }
        if (!d.lm_witness && lhs != left_form)
          d.lm_witness = Witness{{h, k, l}, "eps(hkl) != eps(h k_(1)) eps(k_(2) l)"};
        if (!d.rm_witness && lhs != right_form)
          d.rm_witness = Witness{{h, k, l}, "eps(hkl) != eps(h k_(2)) eps(k_(1) l)"};
      }

  // Delta^2(1) against the two products of two copies of Delta(1).
  const Vec& d1 = p.delta_one();
  Vec lhs = zero_vec(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c = d1[a * n + b];
      if (sgn(c) == 0) continue;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) lhs[(x * n + y) * n + b] += c * sc.delta(a, x, y);
    }
  Vec lc_rhs = zero_vec(n * n * n);
  Vec rc_rhs = zero_vec(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c1 = d1[a * n + b];
      if (sgn(c1) == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          const Rational& c2 = d1[c * n + e];
          if (sgn(c2) == 0) continue;
          for (std::size_t x = 0; x < n; ++x) {
            lc_rhs[(a * n + x) * n + e] += c1 * c2 * sc.mu(b, c, x);  // 1_(1) (x) 1_(2)1_(1') (x) 1_(2')
            rc_rhs[(a * n + x) * n + e] += c1 * c2 * sc.mu(c, b, x);  // 1_(1) (x) 1_(1')1_(2) (x) 1_(2')
          }
        }
    }
  auto coordinate_witness = [&](const Vec& rhs, const char* what) -> std::optional<Witness> {
    for (std::size_t t = 0; t < lhs.size(); ++t)
      if (lhs[t] != rhs[t]) return Witness{{t / (n * n), (t / n) % n, t % n}, what};
    return std::nullopt;
  };
  d.lc_witness = coordinate_witness(lc_rhs, "Delta^2(1) != 1_(1) (x) 1_(2)1_(1') (x) 1_(2') at this coordinate");
  d.rc_witness = coordinate_witness(rc_rhs, "Delta^2(1) != 1_(1) (x) 1_(1')1_(2) (x) 1_(2') at this coordinate");

  d.flags = {!d.lm_witness, !d.rm_witness, !d.lc_witness, !d.rc_witness};
  return d;
}

AxiomFlags check_axioms(const Prebialgebra& p) { return decide_axioms(p).flags; }

namespace {

bool atom_holds(const AxiomFlags& f, const std::string& atom) {
  if (atom.empty()) return true;
  if (atom == "lm") return f.lm;
  if (atom == "rm") return f.rm;
  if (atom == "lc") return f.lc;
  if (atom == "rc") return f.rc;
  if (atom == "m") return f.monoidal();
  if (atom == "c") return f.comonoidal();
  if (atom == "weak") return f.weak_bialgebra();
  throw std::invalid_argument("unknown hypothesis atom '" + atom + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '(' && ch != ')') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

bool hypothesis_holds(const AxiomFlags& flags, const std::string& hypothesis) {
  // "iff X" marks an equivalence: the identity is checked unconditionally.
  if (hypothesis.rfind("iff ", 0) == 0) return true;
  // Disjunction of conjunctions: "m&lc|m&rc".
  for (const std::string& term : split(hypothesis, '|')) {
    bool all = true;
    for (const std::string& atom : split(term, '&')) all = all && atom_holds(flags, atom);
    if (all) return true;
  }
  return false;
}

std::string describe(const AxiomFlags& flags) {
  std::ostringstream out;
  const char* sep = "";
  auto put = [&](bool on, const char* name) {
    if (on) {
      out << sep << name;
      sep = " ";
    }
  };
  put(flags.lm, "lm");
  put(flags.rm, "rm");
  put(flags.lc, "lc");
  put(flags.rc, "rc");
  return out.str();
}

// --- canonical maps ------------------------------------------------------------

CanonicalMaps canonical_maps(const Prebialgebra& p) {
  const std::size_t n = p.dim();
  Mat d1(n, n);  // Delta(1) = sum d1(a,b) e_a (x) e_b
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d1(a, b) = p.delta_one()[a * n + b];

  Mat g(n, n);
  Mat g_prime(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      g(a, j) = p.eps2(a, j);        // g(h) = eps(- h)
      g_prime(a, j) = p.eps2(j, a);  // g'(h) = eps(h -)
    }

  CanonicalMaps m;
  m.f = d1.transpose();  // f(h*) = <h*, 1_(1)> 1_(2)
  m.f_prime = d1;        // f'(h*) = <h*, 1_(2)> 1_(1)
  m.g = std::move(g);
  m.g_prime = std::move(g_prime);
  m.eps_t = m.f * m.g;
  m.eps_s = m.f_prime * m.g_prime;
  m.eps_t_bar = m.f * m.g_prime;
  m.eps_s_bar = m.f_prime * m.g;
  m.eps_t_star = m.g * m.f;
  m.eps_s_star = m.g_prime * m.f_prime;
  m.eps_t_bar_star = m.g * m.f_prime;
  m.eps_s_bar_star = m.g_prime * m.f;
  return m;
}

CanonicalMaps canonical_maps_explicit(const Prebialgebra& p) {
  const std::size_t n = p.dim();
  const Vec& d1 = p.delta_one();
  auto e = [n](std::size_t i) { return unit_vec(n, i); };

  CanonicalMaps m;
  for (Mat* x : {&m.f, &m.f_prime, &m.g, &m.g_prime, &m.eps_t, &m.eps_s, &m.eps_t_bar, &m.eps_s_bar, &m.eps_t_star,
                 &m.eps_s_star, &m.eps_t_bar_star, &m.eps_s_bar_star})
    *x = Mat(n, n);

  for (std::size_t j = 0; j < n; ++j) {
    const Vec h = e(j);
    for (std::size_t k = 0; k < n; ++k) {
      m.g(k, j) = p.eps(p.mul(e(k), h));        // <g(h), k> = eps(k h)
      m.g_prime(k, j) = p.eps(p.mul(h, e(k)));  // <g'(h), k> = eps(h k)
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Rational& c = d1[x * n + y];
        if (sgn(c) == 0) continue;
        const Rational one1_h = p.eps(p.mul(e(x), h));  // eps(1_(1) h)
        const Rational h_one2 = p.eps(p.mul(h, e(y)));  // eps(h 1_(2))
        const Rational h_one1 = p.eps(p.mul(h, e(x)));  // eps(h 1_(1))
        const Rational one2_h = p.eps(p.mul(e(y), h));  // eps(1_(2) h)
        m.eps_t(y, j) += c * one1_h;
        m.eps_s(x, j) += c * h_one2;
        m.eps_t_bar(y, j) += c * h_one1;
        m.eps_s_bar(x, j) += c * one2_h;
        // f(e^j) = <e^j, 1_(1)> 1_(2); f'(e^j) = <e^j, 1_(2)> 1_(1)
        if (x == j) m.f(y, j) += c;
        if (y == j) m.f_prime(x, j) += c;
      }
    // Starred maps on the dual basis functional e^j, evaluated at each e_k.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const Rational& c = d1[x * n + y];
          if (sgn(c) == 0) continue;
          if (x == j) {
            m.eps_t_star(k, j) += c * p.eps(p.mul(e(k), e(y)));      // eps(k f(e^j))
            m.eps_s_bar_star(k, j) += c * p.eps(p.mul(e(y), e(k)));  // eps(f(e^j) k)
          }
          if (y == j) {
            m.eps_s_star(k, j) += c * p.eps(p.mul(e(x), e(k)));      // eps(f'(e^j) k)
            m.eps_t_bar_star(k, j) += c * p.eps(p.mul(e(k), e(x)));  // eps(k f'(e^j))
          }
        }
  }
  return m;
}

// --- subspaces -------------------------------------------------------------------

namespace {

enum class Side { left, right };

// h |-> Delta(h) - (one-leg twisted Delta(1)), columns over basis h.
Mat i_space_condition(const Prebialgebra& p, bool h_on_first_leg, Side side) {
  const std::size_t n = p.dim();
  const Vec& d1 = p.delta_one();
  Mat cond = p.comult_matrix();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Rational& c = d1[x * n + y];
        if (sgn(c) == 0) continue;
        const std::size_t leg = h_on_first_leg ? x : y;
        for (std::size_t r = 0; r < n; ++r) {
          const Rational& prod = side == Side::left ? p.constants().mu(leg, j, r) : p.constants().mu(j, leg, r);
          if (sgn(prod) == 0) continue;
          const std::size_t row = h_on_first_leg ? r * n + y : x * n + r;
          cond(row, j) -= c * prod;
        }
      }
  return cond;
}

}  // namespace

SubspaceCatalog subspace_catalog(const Prebialgebra& p) {
  const CanonicalMaps m = canonical_maps(p);
  const auto& sc = p.constants();
  const std::size_t n = p.dim();
  SubspaceCatalog c;
  c.H_L = image(m.f);
  c.H_R = image(m.f_prime);
  c.H_t = image(m.eps_t);
  c.H_s = image(m.eps_s);
  c.H_t_bar = image(m.eps_t_bar);
  c.H_s_bar = image(m.eps_s_bar);
  c.Hst_L = image(m.g);
  c.Hst_R = image(m.g_prime);
  c.Hst_t = image(m.eps_t_star);
  c.Hst_s = image(m.eps_s_star);
  c.Hst_t_bar = image(m.eps_t_bar_star);
  c.Hst_s_bar = image(m.eps_s_bar_star);

  c.I_t = kernel(i_space_condition(p, true, Side::left));       // Delta(h) = 1_(1) h (x) 1_(2)
  c.I_s = kernel(i_space_condition(p, false, Side::right));     // Delta(h) = 1_(1) (x) h 1_(2)
  c.I_t_bar = kernel(i_space_condition(p, true, Side::right));  // Delta(h) = h 1_(1) (x) 1_(2)
  c.I_s_bar = kernel(i_space_condition(p, false, Side::left));  // Delta(h) = 1_(1) (x) 1_(2) h

  // I*-spaces: one linear condition on h* per basis pair (k, l).
  Mat t(n * n, n), s(n * n, n), tb(n * n, n), sb(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t row = k * n + l;
      for (std::size_t cc = 0; cc < n; ++cc) {
        Rational vt = sc.mu(k, l, cc), vs = vt, vtb = vt, vsb = vt;
        for (std::size_t b = 0; b < n; ++b) {
          vt -= sc.delta(l, cc, b) * p.eps2(k, b);   // <eps, k l_(2)> <h*, l_(1)>
          vs -= sc.delta(k, b, cc) * p.eps2(b, l);   // <eps, k_(1) l> <h*, k_(2)>
          vtb -= sc.delta(l, b, cc) * p.eps2(k, b);  // <eps, k l_(1)> <h*, l_(2)>
          vsb -= sc.delta(k, cc, b) * p.eps2(b, l);  // <eps, k_(2) l> <h*, k_(1)>
        }
        t(row, cc) = vt;
        s(row, cc) = vs;
        tb(row, cc) = vtb;
        sb(row, cc) = vsb;
      }
    }
  c.Ist_t = kernel(t);
  c.Ist_s = kernel(s);
  c.Ist_t_bar = kernel(tb);
  c.Ist_s_bar = kernel(sb);
  return c;
}

}  // namespace wbalg
