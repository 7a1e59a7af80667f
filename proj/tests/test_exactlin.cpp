#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wbalg/exactlin.hpp"

using namespace wbalg;

namespace {

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

std::vector<oracle::V> rows_of(const Mat& m) {
  std::vector<oracle::V> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

}  // namespace

TEST_SUITE("exactlin") {

TEST_CASE("rational parsing is canonical and strict") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("-6/3")) == "-2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(to_string(parse_rational("7")) == "7");
  for (const char* bad : {"", "1/0", "x", "1/2/3", "1.5", "/3", "3/"}) CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("kron puts the left factor major") {
  const Vec a = {Rational(1), Rational(2)}, b = {Rational(3), Rational(5), Rational(7)};
  const Vec ab = kron(a, b);
  REQUIRE(ab.size() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(ab[i * 3 + j] == a[i] * b[j]);
  const Mat A{{1, 2}, {3, 4}}, B{{0, 1}, {1, 0}};
  CHECK(kron(A, B) * kron(a, Vec{Rational(1), Rational(-1)}) == kron(A * a, B * Vec{Rational(1), Rational(-1)}));
}

TEST_CASE("add_kron accumulates the scaled Kronecker product") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const Mat a = random_mat(rng, 2, 3), b = random_mat(rng, 3, 2), start = random_mat(rng, 6, 6);
    Mat acc = start;
    add_kron(acc, Rational(3, 2), a, b);
    CHECK(acc == start + Rational(3, 2) * kron(a, b));
  }
  Mat wrong(5, 5);
  CHECK_THROWS(add_kron(wrong, 1, Mat::identity(2), Mat::identity(2)));
}

TEST_CASE("flip swaps tensor legs") {
  const Vec a = {Rational(1), Rational(2)}, b = {Rational(3), Rational(5), Rational(7)};
  CHECK(flip(2, 3) * kron(a, b) == kron(b, a));
  CHECK(flip(3, 2) * flip(2, 3) == Mat::identity(6));
}

TEST_CASE("rank agrees with the elimination oracle; kernel is rank-nullity complete") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Mat m = random_mat(rng, r, c);
    if (t % 3 == 0 && r > 1) {  // force a dependency
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    }
    const std::size_t rk = oracle::rank(rows_of(m));
    CHECK(rank(m) == rk);
    const Subspace k = kernel(m);
    CHECK(k.dim() == c - rk);
    CHECK((m * k.embedding()).is_zero());
    CHECK(image(m).dim() == rk);
  }
}

TEST_CASE("subspaces are canonical") {
  const Vec u = {Rational(1), Rational(2), Rational(0)}, v = {Rational(0), Rational(1), Rational(1)};
  CHECK(Subspace::span(3, {u, v}) == Subspace::span(3, {v, u + v, 3 * u}));
  CHECK(Subspace::span(3, {u}) != Subspace::span(3, {v}));
  const Subspace s = Subspace::span(3, {u, v});
  CHECK(s.contains(u - v));
  CHECK_FALSE(s.contains(unit_vec(3, 2) + u));
  CHECK(s.coordinates() * s.embedding() == Mat::identity(2));
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 25; ++t) {
    const Subspace s = image(random_mat(rng, 5, 2 + rng() % 2));
    const Subspace u = image(random_mat(rng, 5, 1 + rng() % 3));
    const Subspace both = intersect(s, u), either = sum(s, u);
    CHECK(both.dim() + either.dim() == s.dim() + u.dim());
    CHECK(s.contains(both));
    CHECK(either.contains(s));
    CHECK(annihilator(s).dim() == 5 - s.dim());
    CHECK((annihilator(s).basis() * s.embedding()).is_zero());
  }
}

TEST_CASE("tensor of subspaces has multiplicative dimension") {
  const Subspace s = Subspace::span(2, {Vec{Rational(1), Rational(1)}});
  const Subspace u = Subspace::full(3);
  CHECK(tensor(s, u).dim() == 3);
  CHECK(tensor(s, u).contains(kron(Vec{Rational(2), Rational(2)}, unit_vec(3, 1))));
}

TEST_CASE("quotient coordinates") {
  const Subspace s = Subspace::span(4, {Vec{Rational(1), Rational(1), Rational(0), Rational(0)}});
  const Quotient q = quotient(s);
  CHECK(q.dim() == 3);
  CHECK(q.project * q.lift == Mat::identity(3));
  CHECK((q.project * s.embedding()).is_zero());
}

TEST_CASE("idempotent split") {
  const Mat p{{1, 1}, {0, 0}};
  const IdempotentSplit sp = idempotent_split(p);
  CHECK(sp.image.dim() == 1);
  CHECK(sp.kernel.dim() == 1);
  CHECK(sp.section * sp.retraction == p);
  const Mat notp{{1, 1}, {0, 2}};
  try {
    idempotent_split(notp);
    FAIL("expected NotIdempotent");
  } catch (const NotIdempotent& e) {
    CHECK(notp * (notp * e.witness()) != notp * e.witness());
  }
}

TEST_CASE("dimension mismatches throw") {
  CHECK_THROWS_AS(Mat::identity(2) * Mat::identity(3), DimensionMismatch);
  CHECK_THROWS_AS(Mat::identity(2) + Mat::identity(3), DimensionMismatch);
}

}
