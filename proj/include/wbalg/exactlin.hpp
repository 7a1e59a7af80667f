#pragma once

// Exact dense linear algebra over the rationals.
//
// Vectors are coordinate columns; a matrix A with A.rows() == m and
// A.cols() == n is a linear map k^n -> k^m acting by y = A x.  In every
// flattened tensor product the left factor is the major index, so the
// coordinate of e_i (x) e_j in k^m (x) k^n is i * n + j.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wbalg {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
/// Coordinates of a (x) b.
Vec kron(const Vec& a, const Vec& b);

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Mat row_vector(const Vec& v);
  static Mat column_vector(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Mat transpose() const;
  bool is_zero() const;

  /// Rows [first, first + count) as a new matrix.
  Mat row_block(std::size_t first, std::size_t count) const;
  /// Keeps the listed rows, in the listed order.
  Mat select_rows(const std::vector<std::size_t>& which) const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(const Rational& s);

  const std::vector<Rational>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rational& s, Mat a);
Vec operator*(const Mat& a, const Vec& v);

/// Kronecker product; (a (x) b)[i*rows_b + k, j*cols_b + l] = a[i,j] * b[k,l].
Mat kron(const Mat& a, const Mat& b);
/// out += c * kron(a, b), without forming the product.
void add_kron(Mat& out, const Rational& c, const Mat& a, const Mat& b);
/// The swap k^m (x) k^n -> k^n (x) k^m.
Mat flip(std::size_t m, std::size_t n);
/// [a | b] and [a ; b].
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct EchelonForm {
  Mat reduced;                     // canonical RREF, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each row
};

EchelonForm rref(const Mat& a);
std::size_t rank(const Mat& a);

/// Index of the first column where the two matrices differ, if any.
std::optional<std::size_t> first_differing_column(const Mat& a, const Mat& b);

/// A linear subspace of k^ambient, stored as a basis in canonical reduced
/// row-echelon form so that equal subspaces have equal data.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the rows of `generators`.
  static Subspace span_rows(const Mat& generators);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Every column of `m` lies in the subspace.
  bool contains_columns(const Mat& m) const;

  /// ambient x dim matrix whose columns are the basis vectors.
  Mat embedding() const { return basis_.transpose(); }
  /// dim x ambient matrix reading off basis coordinates of a vector that lies
  /// in the subspace (it selects the pivot entries).
  Mat coordinates() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(std::size_t ambient, EchelonForm form);

  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Column space of `a`, as a subspace of k^rows.
Subspace image(const Mat& a);
/// Null space of `a`, as a subspace of k^cols.
Subspace kernel(const Mat& a);

bool equal(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
/// Vectors orthogonal to s under the standard pairing.
Subspace annihilator(const Subspace& s);
/// Span of all a (x) b with a in s, b in t.
Subspace tensor(const Subspace& s, const Subspace& t);

/// k^ambient / sub, with coordinates on the non-pivot columns of sub.
struct Quotient {
  Subspace sub;
  Mat project;  // (ambient - dim sub) x ambient
  Mat lift;     // ambient x (ambient - dim sub), project * lift = I
  std::size_t dim() const { return project.rows(); }
};

Quotient quotient(const Subspace& sub);

class NotIdempotent : public std::invalid_argument {
 public:
  NotIdempotent(const std::string& what, Vec witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  /// A vector v with p(p(v)) != p(v).
  const Vec& witness() const { return witness_; }

 private:
  Vec witness_;
};

struct IdempotentSplit {
  Subspace image;
  Subspace kernel;
  Mat section;     // ambient x rank, columns span the image
  Mat retraction;  // rank x ambient, section * retraction = p
};

/// Splits an exact idempotent p into image and kernel. Throws NotIdempotent.
IdempotentSplit idempotent_split(const Mat& p);

}  // namespace wbalg
