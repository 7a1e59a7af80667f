#include <doctest.h>

#include "oracles.hpp"
#include "wbalg/corpus.hpp"
#include "wbalg/prebialgebra.hpp"

using namespace wbalg;

namespace {

bool same_flags(const AxiomFlags& f, const oracle::Flags& o) {
  return f.lm == o.lm && f.rm == o.rm && f.lc == o.lc && f.rc == o.rc;
}

}  // namespace

TEST_SUITE("prebialgebra") {

TEST_CASE("validate rejects broken structure constants") {
  StructureConstants sc = corpus_algebra("c2").constants();
  CHECK(validate(sc).all_hold());

  StructureConstants bad_assoc = sc;
  bad_assoc.mu(1, 1, 0) = 2;  // g g = 2 (x) 1
  CHECK_FALSE(validate(bad_assoc).all_hold());
  CHECK_THROWS_AS(Prebialgebra{bad_assoc}, StructureLawError);

  StructureConstants bad_unit = sc;
  bad_unit.unit = {Rational(1), Rational(1)};
  CHECK_FALSE(validate(bad_unit).holds("unit"));

  StructureConstants bad_counit = sc;
  bad_counit.counit = {Rational(1), Rational(0)};
  CHECK_FALSE(validate(bad_counit).holds("counit"));

  StructureConstants bad_delta = sc;
  bad_delta.delta(1, 1, 1) = 0;
  bad_delta.delta(1, 0, 1) = 1;
  CHECK_FALSE(validate(bad_delta).all_hold());

  StructureConstants bad_shape = sc;
  bad_shape.unit.pop_back();
  CHECK_FALSE(validate(bad_shape).holds("shape"));
}

TEST_CASE("axiom flags agree with the brute-force oracle on the corpus") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    CHECK(same_flags(check_axioms(p), oracle::flags(p.constants())));
    const AxiomDecision d = decide_axioms(p);
    CHECK(d.flags == check_axioms(p));
    CHECK(d.flags.lm == !d.lm_witness.has_value());
    CHECK(d.flags.rm == !d.rm_witness.has_value());
    CHECK(d.flags.lc == !d.lc_witness.has_value());
    CHECK(d.flags.rc == !d.rc_witness.has_value());
  }
}

TEST_CASE("grouplike-nilpotent witness is (x, 1, x)") {
  // eps(x 1 x) = eps(x^2) = 0 but eps(x 1)eps(1 x) = 1.
  const AxiomDecision d = decide_axioms(grouplike_nilpotent());
  REQUIRE(d.lm_witness);
  CHECK(d.lm_witness->indices == std::vector<std::size_t>{1, 0, 1});
  REQUIRE(d.rm_witness);
  CHECK(d.rm_witness->indices == std::vector<std::size_t>{1, 0, 1});
  CHECK(describe(d.flags) == "lc rc");
}

TEST_CASE("hypothesis expressions") {
  const AxiomFlags none{}, m{true, true, false, false}, lc_only{false, false, true, false};
  CHECK(hypothesis_holds(none, ""));
  CHECK_FALSE(hypothesis_holds(none, "lm"));
  CHECK(hypothesis_holds(m, "m"));
  CHECK_FALSE(hypothesis_holds(m, "c"));
  CHECK_FALSE(hypothesis_holds(m, "weak"));
  CHECK(hypothesis_holds(lc_only, "rm|lc"));
  CHECK_FALSE(hypothesis_holds(lc_only, "rm|rc"));
  CHECK(describe(AxiomFlags{true, true, true, true}) == "lm rm lc rc");
}

TEST_CASE("target and source maps match their elementwise formulas") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    const CanonicalMaps cm = canonical_maps(p);
    const std::size_t n = p.dim();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec e = unit_vec(n, i);
      CHECK(cm.eps_t * e == oracle::target_source(p.constants(), oracle::Map::t, e));
      CHECK(cm.eps_s * e == oracle::target_source(p.constants(), oracle::Map::s, e));
      CHECK(cm.eps_t_bar * e == oracle::target_source(p.constants(), oracle::Map::t_bar, e));
      CHECK(cm.eps_s_bar * e == oracle::target_source(p.constants(), oracle::Map::s_bar, e));
    }
    const CanonicalMaps ex = canonical_maps_explicit(p);
    CHECK(ex.eps_t == cm.eps_t);
    CHECK(ex.eps_s_bar_star == cm.eps_s_bar_star);
  }
}

TEST_CASE("frozen target subspaces") {
  // Groupoid algebras: H_t is spanned by the identities.
  CHECK(subspace_catalog(corpus_algebra("pair-groupoid-2")).H_t.dim() == 2);
  CHECK(subspace_catalog(corpus_algebra("discrete-2")).H_t.dim() == 2);
  CHECK(subspace_catalog(corpus_algebra("s3")).H_t.dim() == 1);
  CHECK(subspace_catalog(corpus_algebra("trivial+pair-groupoid-2")).H_t.dim() == 3);
  const Prebialgebra pg = corpus_algebra("pair-groupoid-2");
  const Subspace ht = subspace_catalog(pg).H_t;
  for (std::size_t i = 0; i < pg.dim(); ++i) {
    const bool identity = pg.label(i) == "e00" || pg.label(i) == "e11";
    CHECK(ht.contains(unit_vec(pg.dim(), i)) == identity);
  }
}

TEST_CASE("Lemma 1.1 identities match independent oracles and flags") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    const oracle::Flags f = oracle::flags(p.constants());
    const VerificationReport r = verify_section1(p);
    CHECK(r.holds("eq 1.1.1") == oracle::identity_1_1_1(p.constants()));
    CHECK(oracle::identity_1_1_1(p.constants()) == f.rm);
    CHECK(r.holds("eq 1.1.5") == oracle::identity_1_1_5(p.constants()));
    CHECK(oracle::identity_1_1_5(p.constants()) == f.rc);
    for (int k = 1; k <= 8; ++k) CHECK(r.holds("eq 1.1." + std::to_string(k) + " equivalence"));
  }
}

TEST_CASE("target-source suite holds on weak bialgebras and fails only on iff entries otherwise") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    const VerificationReport r = verify_section1(p);
    if (check_axioms(p).weak_bialgebra()) {
      CHECK(r.all_hold());
      CHECK(r.count(Status::not_applicable) == 0);
    }
    for (const auto* e : r.failures()) {
      CAPTURE(e->id);
      CHECK(e->hypothesis.rfind("iff ", 0) == 0);
      CHECK(e->witness.has_value());
    }
  }
}

}
