#include <doctest.h>

#include "oracles.hpp"
#include "wbalg/corpus.hpp"

using namespace wbalg;

TEST_SUITE("corpus") {

TEST_CASE("every corpus algebra validates and has the expected flags") {
  const std::vector<std::string> not_weak = {"grouplike-nilpotent", "grouplike-nilpotent-dual"};
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Prebialgebra p = corpus_algebra(name);
    CHECK(validate(p.constants()).all_hold());
    const oracle::Flags f = oracle::flags(p.constants());
    const bool weak = f.lm && f.rm && f.lc && f.rc;
    CHECK(weak == (std::find(not_weak.begin(), not_weak.end(), name) == not_weak.end()));
  }
  CHECK_THROWS_AS(corpus_algebra("no-such-algebra"), std::invalid_argument);
}

TEST_CASE("frozen dimensions") {
  CHECK(corpus_algebra("trivial").dim() == 1);
  CHECK(corpus_algebra("s3").dim() == 6);
  CHECK(corpus_algebra("pair-groupoid-2").dim() == 4);
  CHECK(corpus_algebra("arrow-category").dim() == 3);
  CHECK(corpus_algebra("c2+c2").dim() == 4);
  CHECK(corpus_algebra("pair-groupoid-2-x-c2").dim() == 8);
}

TEST_CASE("category algebras of non-groupoids satisfy all four axioms") {
  for (const auto& c : {arrow_category(), idempotent_monoid()}) {
    CHECK(check_category(c).empty());
    const oracle::Flags f = oracle::flags(category_algebra(c).constants());
    CHECK((f.lm && f.rm && f.lc && f.rc));
  }
}

TEST_CASE("malformed categories are rejected") {
  FiniteCategory c = arrow_category();
  c.table[2][2] = 2;  // a o a is not composable
  CHECK_FALSE(check_category(c).empty());
  CHECK_THROWS_AS(category_algebra(c), std::invalid_argument);
  FiniteGroupoid g = pair_groupoid(2);
  g.inverse[1] = 1;
  CHECK_FALSE(check_groupoid(g).empty());
}

TEST_CASE("groupoid constructors") {
  CHECK(pair_groupoid(3).morphisms() == 9);
  CHECK(discrete_groupoid(3).morphisms() == 3);
  CHECK(check_groupoid(group_groupoid(symmetric_group_3())).empty());
  CHECK(cyclic_group(4)[3][2] == 1);
}

TEST_CASE("direct sum and tensor product flags are conjunctions") {
  const std::vector<std::string> small = {"trivial", "c2", "grouplike-nilpotent", "grouplike-nilpotent-dual",
                                          "arrow-category"};
  for (const auto& a : small)
    for (const auto& b : small) {
      CAPTURE(a);
      CAPTURE(b);
      const Prebialgebra p = corpus_algebra(a), q = corpus_algebra(b);
      const oracle::Flags fp = oracle::flags(p.constants()), fq = oracle::flags(q.constants());
      for (const Prebialgebra& r : {direct_sum(p, q), tensor_product(p, q)}) {
        const oracle::Flags fr = oracle::flags(r.constants());
        CHECK(fr.lm == (fp.lm && fq.lm));
        CHECK(fr.rm == (fp.rm && fq.rm));
        CHECK(fr.lc == (fp.lc && fq.lc));
        CHECK(fr.rc == (fp.rc && fq.rc));
      }
    }
  const Prebialgebra k = corpus_algebra("trivial");
  CHECK(direct_sum(k, k).dim() == 2);
  CHECK(tensor_product(corpus_algebra("pair-groupoid-2"), corpus_algebra("c2")).dim() == 8);
}

}
