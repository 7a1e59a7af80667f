#pragma once

// Example prebialgebras: group, category and groupoid algebras, the
// grouplike-nilpotent counterexample, and closure under direct sums and
// tensor products.

#include <optional>
#include <string>
#include <vector>

#include "wbalg/prebialgebra.hpp"

namespace wbalg {

/// A finite category. Morphism f goes source[f] -> target[f]; compose(g, f)
/// is g o f, defined when target[f] == source[g].
struct FiniteCategory {
  std::size_t objects = 0;
  std::vector<std::size_t> source, target;
  std::vector<std::size_t> identity;  // per object
  std::vector<std::vector<std::optional<std::size_t>>> table;  // table[g][f] = g o f
  std::vector<std::string> labels;

  std::size_t morphisms() const { return source.size(); }
  std::optional<std::size_t> compose(std::size_t g, std::size_t f) const { return table[g][f]; }
};

struct FiniteGroupoid : FiniteCategory {
  std::vector<std::size_t> inverse;
};

/// Empty on success, otherwise a description of the first violated law.
std::string check_category(const FiniteCategory& c);
std::string check_groupoid(const FiniteGroupoid& g);

FiniteGroupoid discrete_groupoid(std::size_t objects);
/// One morphism x -> y for every pair of objects; morphism y*objects + x.
FiniteGroupoid pair_groupoid(std::size_t objects);
/// One-object groupoid of a group table (table[a][b] = ab, 0 the identity).
FiniteGroupoid group_groupoid(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels = {});
/// Objects 0, 1 and a single arrow 0 -> 1 besides the identities.
FiniteCategory arrow_category();
/// One object, morphisms {1, e} with e o e = e.
FiniteCategory idempotent_monoid();

/// Basis = morphisms, e_g e_f = g o f or 0, 1 = sum of identities,
/// Delta(f) = f (x) f, eps(f) = 1. Throws std::invalid_argument on a bad category.
Prebialgebra category_algebra(const FiniteCategory& c, const std::string& name = {});
Prebialgebra groupoid_algebra(const FiniteGroupoid& g, const std::string& name = {});
Prebialgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, const std::string& name = {},
                           std::vector<std::string> labels = {});

/// Cyclic group tables and S3 (identity first).
std::vector<std::vector<std::size_t>> cyclic_group(std::size_t order);
std::vector<std::vector<std::size_t>> symmetric_group_3(std::vector<std::string>* labels = nullptr);

/// k[x]/(x^2) on the basis {1, x}, Delta(x) = x (x) x, eps(x) = 1.
Prebialgebra grouplike_nilpotent();

Prebialgebra direct_sum(const Prebialgebra& p, const Prebialgebra& q);
Prebialgebra tensor_product(const Prebialgebra& p, const Prebialgebra& q);

std::vector<std::string> corpus_names();
/// Throws std::invalid_argument for an unknown name.
Prebialgebra corpus_algebra(const std::string& name);

}  // namespace wbalg
