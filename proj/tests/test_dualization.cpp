#include <doctest.h>

#include "oracles.hpp"
#include "wbalg/corpus.hpp"
#include "wbalg/dualization.hpp"

using namespace wbalg;

TEST_SUITE("dualization") {

TEST_CASE("double dual reproduces the constants exactly") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    CHECK(dual_constants(dual_constants(p.constants())) == p.constants());
    CHECK(double_dual_identity(p));
  }
}

TEST_CASE("dual constants follow the transpose formulas") {
  const StructureConstants sc = corpus_algebra("arrow-category").constants();
  const StructureConstants d = dual_constants(sc);
  for (std::size_t a = 0; a < sc.dim; ++a)
    for (std::size_t b = 0; b < sc.dim; ++b)
      for (std::size_t i = 0; i < sc.dim; ++i) {
        CHECK(d.mu(a, b, i) == sc.delta(i, b, a));
        CHECK(d.delta(i, a, b) == sc.mu(b, a, i));
      }
  CHECK(d.unit == sc.counit);
  CHECK(d.counit == sc.unit);
  CHECK(d.name == "dual(arrow-category)");
}

TEST_CASE("Lemma 00: dualizing exchanges the multiplicative and comultiplicative axioms") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    const oracle::Flags f = oracle::flags(p.constants());
    const oracle::Flags g = oracle::flags(dual(p).constants());
    CHECK((f.lm && f.rm) == (g.lc && g.rc));
    CHECK((f.lc && f.rc) == (g.lm && g.rm));
    CHECK(verify_lemma_00(p).all_hold());
  }
  CHECK(describe(check_axioms(dual(grouplike_nilpotent()))) == "lm rm");
}

TEST_CASE("f of the dual is g, on every corpus algebra") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const VerificationReport r = verify_duality(corpus_algebra(name));
    CHECK(r.holds("f_{H*} = g_H"));
    CHECK(r.holds("f'_{H*} = g'_H"));
    CHECK(r.holds("double dual"));
  }
}

TEST_CASE("convolution dual is a valid prebialgebra with the same flags as the dual") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    const Prebialgebra q = convolution_dual(p);
    const AxiomFlags a = check_axioms(q), b = check_axioms(dual(p));
    CHECK(a.monoidal() == b.monoidal());
    CHECK(a.comonoidal() == b.comonoidal());
  }
}

}
