#include <doctest.h>

#include "oracles.hpp"
#include "wbalg/corpus.hpp"
#include "wbalg/hmodules.hpp"

using namespace wbalg;

namespace {

std::vector<std::string> weak_names() {
  std::vector<std::string> out;
  for (const auto& n : corpus_names())
    if (check_axioms(corpus_algebra(n)).weak_bialgebra()) out.push_back(n);
  return out;
}

}  // namespace

TEST_SUITE("hmodules") {

TEST_CASE("regular module and module maps") {
  const Prebialgebra p = corpus_algebra("arrow-category");
  const LeftModule h = regular_module(p);
  CHECK_FALSE(check_module(h));
  for (std::size_t j = 0; j < p.dim(); ++j) CHECK_FALSE(check_module_map(h, h, p.right_mult(j)));
  CHECK(check_module_map(h, h, p.left_mult(2)).has_value());  // a.(-) does not commute with id0.(-)
}

TEST_CASE("mutated actions are rejected") {
  const Prebialgebra p = corpus_algebra("c3");
  LeftModule h = regular_module(p);
  h.action[1](0, 0) += 1;
  CHECK(check_module(h).has_value());
  LeftModule wrong_unit = regular_module(p);
  wrong_unit.action[0] = 2 * wrong_unit.action[0];
  CHECK(check_module(wrong_unit).has_value());
}

TEST_CASE("pi_l equals the elementwise formula 1_(1) g (x) 1_(2) h") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    const std::size_t n = p.dim();
    if (n > 6) continue;
    const LeftModule h = regular_module(p);
    const Mat pi = pi_l(h, h);
    const oracle::V d1 = oracle::comul(p.constants(), p.one());
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t k = 0; k < n; ++k) {
        oracle::V gk(n * n, Rational(0));
        gk[g * n + k] = 1;
        CHECK(pi.col(g * n + k) == oracle::mul2(p.constants(), d1, gk));
      }
  }
}

TEST_CASE("dimension of H (x)^l H") {
  for (const auto& name : weak_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    if (p.dim() > 6) continue;
    const LeftModule h = regular_module(p);
    CHECK(tensor_l(h, h).carrier.dim() == oracle::dim_pi_regular(p.constants()));
  }
  // Pair groupoid: 1_(1) g (x) 1_(2) h != 0 iff g and h share their target.
  const FiniteGroupoid g = pair_groupoid(2);
  std::size_t same_target = 0;
  for (std::size_t a = 0; a < g.morphisms(); ++a)
    for (std::size_t b = 0; b < g.morphisms(); ++b) same_target += g.target[a] == g.target[b];
  CHECK(same_target == 8);
  const Prebialgebra pg = corpus_algebra("pair-groupoid-2");
  CHECK(tensor_l(regular_module(pg), regular_module(pg)).carrier.dim() == same_target);
}

TEST_CASE("tensor_l needs a monoidal base") {
  const Prebialgebra p = grouplike_nilpotent();
  const LeftModule h = regular_module(p);
  CHECK_THROWS_AS(tensor_l(h, h), std::invalid_argument);
}

TEST_CASE("submodules") {
  const Prebialgebra p = corpus_algebra("pair-groupoid-2");
  const LeftModule h = regular_module(p);
  CHECK_THROWS_AS(submodule(h, Subspace::span(4, {unit_vec(4, 0)})), std::invalid_argument);
  const LeftModule c = cyclic_submodule(h, unit_vec(4, 0));
  CHECK_FALSE(check_module(c));
  CHECK(c.dim == 2);  // the morphisms with source 0
}

TEST_CASE("random modules are seeded and valid") {
  const Prebialgebra p = corpus_algebra("s3");
  const auto a = random_modules(p, 3, 42), b = random_modules(p, 3, 42);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].action == b[i].action);
    CHECK_FALSE(check_module(a[i]));
  }
}

TEST_CASE("unit object has the dimension of H_t") {
  for (const auto& name : weak_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    CHECK(unit_object(p).carrier.dim() == subspace_catalog(p).H_t.dim());
    CHECK_FALSE(check_module(transported_unit(p)));
    CHECK(verify_unit_object(p).all_hold());
  }
}

TEST_CASE("tensor product quotient and image agree") {
  const Prebialgebra p = corpus_algebra("arrow-category");
  const LeftModule h = regular_module(p);
  CHECK(verify_tensor_l(h, h).all_hold());
  const TensorLQuotient q = tensor_l_quot(h, h);
  CHECK(q.pi_bar * q.pi_bar_inverse == Mat::identity(q.pi_bar.rows()));
}

TEST_CASE("module suite holds on every corpus weak bialgebra") {
  for (const auto& name : weak_names()) {
    CAPTURE(name);
    const VerificationReport r = verify_section2(corpus_algebra(name), 1);
    CHECK(r.all_hold());
    CHECK(r.count(Status::not_applicable) == 0);
    CHECK(r.holds("Thm 2.4 triangle [H,H,H]"));
  }
}

TEST_CASE("module suite without monoidality") {
  const VerificationReport r = verify_section2(grouplike_nilpotent(), 1);
  for (const auto* e : r.failures()) {
    CAPTURE(e->id);
    CHECK(e->hypothesis.rfind("iff ", 0) == 0);
  }
  CHECK(r.holds("Prop 2.1 (3) left equivalence"));
  const VerificationReport d = verify_section2(corpus_algebra("grouplike-nilpotent-dual"), 1);
  CHECK(d.all_hold());
  const ReportEntry* e = d.find("Thm forgetful S_ S^ [H,H]");
  REQUIRE(e != nullptr);
  CHECK(e->status == Status::not_applicable);
  CHECK(e->note.rfind("empirically ", 0) == 0);
}

}
