#pragma once

// Brute-force reference computations on raw structure constants. Plain
// loops over the basis; nothing here touches Mat, Subspace or the library
// verifiers.

#include <vector>

#include "wbalg/prebialgebra.hpp"

namespace oracle {

using wbalg::Rational;
using wbalg::StructureConstants;
using V = std::vector<Rational>;

inline V basis(std::size_t n, std::size_t i) {
  V v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline V mul(const StructureConstants& sc, const V& a, const V& b) {
  const std::size_t n = sc.dim;
  V out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i] != 0 && b[j] != 0)
        for (std::size_t k = 0; k < n; ++k) out[k] += a[i] * b[j] * sc.mu(i, j, k);
  return out;
}

// Elements of H (x) H as n*n vectors, left leg major.
inline V comul(const StructureConstants& sc, const V& a) {
  const std::size_t n = sc.dim;
  V out(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[j * n + k] += a[i] * sc.delta(i, j, k);
  return out;
}

inline Rational eps(const StructureConstants& sc, const V& a) {
  Rational s = 0;
  for (std::size_t i = 0; i < sc.dim; ++i) s += a[i] * sc.counit[i];
  return s;
}

inline V mul2(const StructureConstants& sc, const V& x, const V& y) {
  const std::size_t n = sc.dim;
  V out(n * n, Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (x[a * n + b] == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (y[c * n + d] == 0) continue;
          const V l = mul(sc, basis(n, a), basis(n, c));
          const V r = mul(sc, basis(n, b), basis(n, d));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += x[a * n + b] * y[c * n + d] * l[i] * r[j];
        }
    }
  return out;
}

struct Flags {
  bool lm = true, rm = true, lc = true, rc = true;
};

// (lm) eps(hkl) = eps(h k_(1)) eps(k_(2) l), (rm) with k_(2), k_(1);
// (lc) Delta^2(1) = (Delta(1) (x) 1)(1 (x) Delta(1)), (rc) the other order.
inline Flags flags(const StructureConstants& sc) {
  const std::size_t n = sc.dim;
  Flags f;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const V eh = basis(n, h), el = basis(n, l);
        const Rational lhs = eps(sc, mul(sc, mul(sc, eh, basis(n, k)), el));
        Rational left = 0, right = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const Rational& c = sc.delta(k, a, b);
            if (c == 0) continue;
            left += c * eps(sc, mul(sc, eh, basis(n, a))) * eps(sc, mul(sc, basis(n, b), el));
            right += c * eps(sc, mul(sc, eh, basis(n, b))) * eps(sc, mul(sc, basis(n, a), el));
          }
        f.lm = f.lm && lhs == left;
        f.rm = f.rm && lhs == right;
      }
  const V d1 = comul(sc, sc.unit);
  V d2(n * n * n, Rational(0));  // (Delta (x) id) Delta(1)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) d2[(x * n + y) * n + b] += d1[a * n + b] * sc.delta(a, x, y);
  // (Delta(1) (x) 1)(1 (x) Delta(1)) = 1_(1) (x) 1_(2) 1'_(1) (x) 1'_(2), and the other order.
  V lc(n * n * n, Rational(0)), rc(n * n * n, Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Rational w = d1[a * n + b] * d1[c * n + d];
          if (w == 0) continue;
          const V bc = mul(sc, basis(n, b), basis(n, c));
          const V cb = mul(sc, basis(n, c), basis(n, b));
          for (std::size_t m = 0; m < n; ++m) {
            lc[(a * n + m) * n + d] += w * bc[m];
            rc[(a * n + m) * n + d] += w * cb[m];
          }
        }
  f.lc = d2 == lc;
  f.rc = d2 == rc;
  return f;
}

// eps_t(h) = eps(1_(1) h) 1_(2), eps_s(h) = eps(h 1_(2)) 1_(1),
// epsbar_t(h) = eps(h 1_(1)) 1_(2), epsbar_s(h) = eps(1_(2) h) 1_(1).
enum class Map { t, s, t_bar, s_bar };

inline V target_source(const StructureConstants& sc, Map which, const V& h) {
  const std::size_t n = sc.dim;
  const V d1 = comul(sc, sc.unit);
  V out(n, Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c = d1[a * n + b];
      if (c == 0) continue;
      Rational w;
      switch (which) {
        case Map::t: w = eps(sc, mul(sc, basis(n, a), h)); out[b] += c * w; break;
        case Map::s: w = eps(sc, mul(sc, h, basis(n, b))); out[a] += c * w; break;
        case Map::t_bar: w = eps(sc, mul(sc, h, basis(n, a))); out[b] += c * w; break;
        case Map::s_bar: w = eps(sc, mul(sc, basis(n, b), h)); out[a] += c * w; break;
      }
    }
  return out;
}

// h eps_t(g) = <eps, h_(1) g> h_(2) for all basis h, g.
inline bool identity_1_1_1(const StructureConstants& sc) {
  const std::size_t n = sc.dim;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      const V lhs = mul(sc, basis(n, h), target_source(sc, Map::t, basis(n, g)));
      V rhs(n, Rational(0));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (sc.delta(h, a, b) != 0) rhs[b] += sc.delta(h, a, b) * eps(sc, mul(sc, basis(n, a), basis(n, g)));
      if (lhs != rhs) return false;
    }
  return true;
}

// h_(1) (x) eps_t(h_(2)) = 1_(1) h (x) 1_(2) for all basis h.
inline bool identity_1_1_5(const StructureConstants& sc) {
  const std::size_t n = sc.dim;
  const V d1 = comul(sc, sc.unit);
  for (std::size_t h = 0; h < n; ++h) {
    V lhs(n * n, Rational(0)), rhs(n * n, Rational(0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (sc.delta(h, a, b) != 0) {
          const V t = target_source(sc, Map::t, basis(n, b));
          for (std::size_t j = 0; j < n; ++j) lhs[a * n + j] += sc.delta(h, a, b) * t[j];
        }
        if (d1[a * n + b] != 0) {
          const V ah = mul(sc, basis(n, a), basis(n, h));
          for (std::size_t i = 0; i < n; ++i) rhs[i * n + b] += d1[a * n + b] * ah[i];
        }
      }
    if (lhs != rhs) return false;
  }
  return true;
}

// Rank by fraction-free Gaussian elimination on a copy (row-major rows).
inline std::size_t rank(std::vector<V> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// dim of 1_(1) M (x) 1_(2) N for the regular modules: span of 1_(1) g (x) 1_(2) h.
inline std::size_t dim_pi_regular(const StructureConstants& sc) {
  const std::size_t n = sc.dim;
  const V d1 = comul(sc, sc.unit);
  std::vector<V> rows;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      V gh(n * n, Rational(0));
      gh[g * n + h] = 1;
      rows.push_back(mul2(sc, d1, gh));
    }
  return rank(rows);
}

}  // namespace oracle
