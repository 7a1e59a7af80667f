#include "wbalg/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "wbalg/dualization.hpp"

namespace wbalg {

std::string check_category(const FiniteCategory& c) {
  const std::size_t m = c.morphisms();
  if (c.target.size() != m || c.table.size() != m) return "morphism arrays have inconsistent sizes";
  if (c.identity.size() != c.objects) return "identity array has wrong size";
  if (!c.labels.empty() && c.labels.size() != m) return "label count differs from morphism count";
  for (std::size_t f = 0; f < m; ++f) {
    if (c.source[f] >= c.objects || c.target[f] >= c.objects) return "morphism endpoint out of range";
    if (c.table[f].size() != m) return "composition table row has wrong size";
  }
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      const auto gf = c.compose(g, f);
      const bool composable = c.target[f] == c.source[g];
      if (composable != gf.has_value()) return "composition defined exactly for matching endpoints";
      if (gf && (*gf >= m || c.source[*gf] != c.source[f] || c.target[*gf] != c.target[g]))
        return "composite has wrong endpoints";
    }
  for (std::size_t x = 0; x < c.objects; ++x) {
    const std::size_t i = c.identity[x];
    if (i >= m || c.source[i] != x || c.target[i] != x) return "identity has wrong endpoints";
    for (std::size_t f = 0; f < m; ++f) {
      if (c.source[f] == x && c.compose(f, i) != f) return "right identity law fails";
      if (c.target[f] == x && c.compose(i, f) != f) return "left identity law fails";
    }
  }
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t f = 0; f < m; ++f) {
        const auto gf = c.compose(g, f);
        const auto hg = c.compose(h, g);
        if (!gf || !hg) continue;
        if (c.compose(h, *gf) != c.compose(*hg, f)) return "composition is not associative";
      }
  return {};
}

std::string check_groupoid(const FiniteGroupoid& g) {
  if (std::string err = check_category(g); !err.empty()) return err;
  if (g.inverse.size() != g.morphisms()) return "inverse array has wrong size";
  for (std::size_t f = 0; f < g.morphisms(); ++f) {
    const std::size_t inv = g.inverse[f];
    if (inv >= g.morphisms() || g.compose(inv, f) != g.identity[g.source[f]] ||
        g.compose(f, inv) != g.identity[g.target[f]])
      return "inverse law fails";
  }
  return {};
}

namespace {

FiniteGroupoid empty_groupoid(std::size_t objects, std::size_t morphisms) {
  FiniteGroupoid g;
  g.objects = objects;
  g.source.assign(morphisms, 0);
  g.target.assign(morphisms, 0);
  g.identity.assign(objects, 0);
  g.inverse.assign(morphisms, 0);
  g.table.assign(morphisms, std::vector<std::optional<std::size_t>>(morphisms));
  return g;
}

}  // namespace

FiniteGroupoid discrete_groupoid(std::size_t objects) {
  FiniteGroupoid g = empty_groupoid(objects, objects);
  for (std::size_t x = 0; x < objects; ++x) {
    g.source[x] = g.target[x] = g.identity[x] = g.inverse[x] = x;
    g.table[x][x] = x;
    g.labels.push_back("id" + std::to_string(x));
  }
  return g;
}

FiniteGroupoid pair_groupoid(std::size_t objects) {
  const std::size_t n = objects;
  FiniteGroupoid g = empty_groupoid(n, n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t f = y * n + x;
      g.source[f] = x;
      g.target[f] = y;
      g.inverse[f] = x * n + y;
      g.labels.push_back("e" + std::to_string(y) + std::to_string(x));
    }
  for (std::size_t x = 0; x < n; ++x) g.identity[x] = x * n + x;
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = 0; b < n * n; ++b)
      if (g.source[a] == g.target[b]) g.table[a][b] = g.target[a] * n + g.source[b];
  return g;
}

FiniteGroupoid group_groupoid(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels) {
  const std::size_t m = table.size();
  FiniteGroupoid g = empty_groupoid(1, m);
  g.identity[0] = 0;
  for (std::size_t a = 0; a < m; ++a) {
    if (table[a].size() != m) throw std::invalid_argument("group table is not square");
    for (std::size_t b = 0; b < m; ++b) {
      if (table[a][b] >= m) throw std::invalid_argument("group table entry out of range");
      g.table[a][b] = table[a][b];
      if (table[a][b] == 0) g.inverse[a] = b;
    }
  }
  if (labels.empty()) {
    labels.push_back("1");
    for (std::size_t a = 1; a < m; ++a) labels.push_back("g" + std::to_string(a));
  }
  g.labels = std::move(labels);
  return g;
}

FiniteCategory arrow_category() {
  FiniteCategory c;
  c.objects = 2;
  c.source = {0, 1, 0};
  c.target = {0, 1, 1};
  c.identity = {0, 1};
  c.table.assign(3, std::vector<std::optional<std::size_t>>(3));
  c.table[0][0] = 0;
  c.table[1][1] = 1;
  c.table[2][0] = 2;
  c.table[1][2] = 2;
  c.labels = {"id0", "id1", "a"};
  return c;
}

FiniteCategory idempotent_monoid() {
  FiniteCategory c;
  c.objects = 1;
  c.source = {0, 0};
  c.target = {0, 0};
  c.identity = {0};
  c.table = {{0, 1}, {1, 1}};
  c.labels = {"1", "e"};
  return c;
}

Prebialgebra category_algebra(const FiniteCategory& c, const std::string& name) {
  if (std::string err = check_category(c); !err.empty()) throw std::invalid_argument("bad category: " + err);
  const std::size_t m = c.morphisms();
  StructureConstants sc(m);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f)
      if (auto gf = c.compose(g, f)) sc.mu(g, f, *gf) = 1;
    sc.delta(g, g, g) = 1;
    sc.counit[g] = 1;
  }
  for (std::size_t x = 0; x < c.objects; ++x) sc.unit[c.identity[x]] = 1;
  sc.name = name;
  sc.basis = c.labels;
  return Prebialgebra(std::move(sc));
}

Prebialgebra groupoid_algebra(const FiniteGroupoid& g, const std::string& name) {
  if (std::string err = check_groupoid(g); !err.empty()) throw std::invalid_argument("bad groupoid: " + err);
  return category_algebra(g, name);
}

Prebialgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, const std::string& name,
                           std::vector<std::string> labels) {
  return groupoid_algebra(group_groupoid(table, std::move(labels)), name);
}

std::vector<std::vector<std::size_t>> cyclic_group(std::size_t order) {
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) t[a][b] = (a + b) % order;
  return t;
}

std::vector<std::vector<std::size_t>> symmetric_group_3(std::vector<std::string>* labels) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::array<int, 3> ab{};
      for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  if (labels) {
    labels->clear();
    for (const auto& q : perms)
      labels->push_back("p" + std::to_string(q[0] + 1) + std::to_string(q[1] + 1) + std::to_string(q[2] + 1));
  }
  return t;
}

Prebialgebra grouplike_nilpotent() {
  StructureConstants sc(2);
  sc.mu(0, 0, 0) = 1;
  sc.mu(0, 1, 1) = 1;
  sc.mu(1, 0, 1) = 1;
  sc.delta(0, 0, 0) = 1;
  sc.delta(1, 1, 1) = 1;
  sc.unit = {1, 0};
  sc.counit = {1, 1};
  sc.name = "grouplike-nilpotent";
  sc.basis = {"1", "x"};
  return Prebialgebra(std::move(sc));
}

Prebialgebra direct_sum(const Prebialgebra& p, const Prebialgebra& q) {
  const std::size_t a = p.dim(), b = q.dim(), n = a + b;
  const auto& sp = p.constants();
  const auto& sq = q.constants();
  StructureConstants sc(n);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t k = 0; k < a; ++k) {
        sc.mu(i, j, k) = sp.mu(i, j, k);
        sc.delta(i, j, k) = sp.delta(i, j, k);
      }
    sc.unit[i] = sp.unit[i];
    sc.counit[i] = sp.counit[i];
  }
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < b; ++k) {
        sc.mu(a + i, a + j, a + k) = sq.mu(i, j, k);
        sc.delta(a + i, a + j, a + k) = sq.delta(i, j, k);
      }
    sc.unit[a + i] = sq.unit[i];
    sc.counit[a + i] = sq.counit[i];
  }
  sc.name = p.name().empty() || q.name().empty() ? "" : p.name() + "+" + q.name();
  for (std::size_t i = 0; i < a; ++i) sc.basis.push_back("L." + p.label(i));
  for (std::size_t i = 0; i < b; ++i) sc.basis.push_back("R." + q.label(i));
  return Prebialgebra(std::move(sc));
}

Prebialgebra tensor_product(const Prebialgebra& p, const Prebialgebra& q) {
  const std::size_t a = p.dim(), b = q.dim(), n = a * b;
  const auto& sp = p.constants();
  const auto& sq = q.constants();
  StructureConstants sc(n);
  auto idx = [b](std::size_t i, std::size_t j) { return i * b + j; };
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const std::size_t u = idx(i, j);
      sc.unit[u] = sp.unit[i] * sq.unit[j];
      sc.counit[u] = sp.counit[i] * sq.counit[j];
      for (std::size_t k = 0; k < a; ++k)
        for (std::size_t l = 0; l < b; ++l) {
          const std::size_t v = idx(k, l);
          for (std::size_t r = 0; r < a; ++r) {
            if (sgn(sp.mu(i, k, r)) == 0 && sgn(sp.delta(i, k, r)) == 0) continue;
            for (std::size_t s = 0; s < b; ++s) {
              sc.mu(u, v, idx(r, s)) = sp.mu(i, k, r) * sq.mu(j, l, s);
              sc.delta(u, v, idx(r, s)) = sp.delta(i, k, r) * sq.delta(j, l, s);
            }
          }
        }
    }
  sc.name = p.name().empty() || q.name().empty() ? "" : p.name() + "-x-" + q.name();
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) sc.basis.push_back(p.label(i) + "." + q.label(j));
  return Prebialgebra(std::move(sc));
}

std::vector<std::string> corpus_names() {
  return {"trivial",          "c2",
          "c3",               "s3",
          "discrete-2",       "pair-groupoid-2",
          "arrow-category",   "idempotent-monoid",
          "grouplike-nilpotent", "grouplike-nilpotent-dual",
          "c2+c2",            "trivial+pair-groupoid-2",
          "pair-groupoid-2-x-c2"};
}

namespace {

Prebialgebra renamed(const Prebialgebra& p, const std::string& name) {
  StructureConstants sc = p.constants();
  sc.name = name;
  return Prebialgebra(std::move(sc));
}

}  // namespace

Prebialgebra corpus_algebra(const std::string& name) {
  if (name == "trivial") return group_algebra(cyclic_group(1), name);
  if (name == "c2") return group_algebra(cyclic_group(2), name, {"1", "g"});
  if (name == "c3") return group_algebra(cyclic_group(3), name, {"1", "g", "g2"});
  if (name == "s3") {
    std::vector<std::string> labels;
    auto t = symmetric_group_3(&labels);
    return group_algebra(t, name, labels);
  }
  if (name == "discrete-2") return groupoid_algebra(discrete_groupoid(2), name);
  if (name == "pair-groupoid-2") return groupoid_algebra(pair_groupoid(2), name);
  if (name == "arrow-category") return category_algebra(arrow_category(), name);
  if (name == "idempotent-monoid") return category_algebra(idempotent_monoid(), name);
  if (name == "grouplike-nilpotent") return grouplike_nilpotent();
  if (name == "grouplike-nilpotent-dual") return renamed(dual(grouplike_nilpotent()), name);
  if (name == "c2+c2") return direct_sum(corpus_algebra("c2"), corpus_algebra("c2"));
  if (name == "trivial+pair-groupoid-2") return direct_sum(corpus_algebra("trivial"), corpus_algebra("pair-groupoid-2"));
  if (name == "pair-groupoid-2-x-c2") return tensor_product(corpus_algebra("pair-groupoid-2"), corpus_algebra("c2"));
  throw std::invalid_argument("unknown corpus algebra '" + name + "'");
}

}  // namespace wbalg
