#include "wbalg/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace wbalg {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vec operator+(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector sum: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector difference: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rational& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out = zero_vec(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

// --- Mat -------------------------------------------------------------------

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].size() == rows, "from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "from_rows: length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::row_vector(const Vec& v) { return from_rows(v.size(), {v}); }
Mat Mat::column_vector(const Vec& v) { return from_columns(v.size(), {v}); }

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Mat Mat::row_block(std::size_t first, std::size_t count) const {
  require(first + count <= rows_, "row_block out of range");
  Mat m(count, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), m.data_.begin());
  return m;
}

Mat Mat::select_rows(const std::vector<std::size_t>& which) const {
  Mat m(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(which[i], c);
  return m;
}

Mat& Mat::operator+=(const Mat& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (sgn(other.data_[i]) != 0) data_[i] += other.data_[i];
  }
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (sgn(other.data_[i]) != 0) data_[i] -= other.data_[i];
  }
  return *this;
}

Mat& Mat::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(const Rational& s, Mat a) { return a *= s; }

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), "matrix product: inner dimension mismatch");
  Mat out(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        out(i, j) += t;
      }
    }
  }
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  require(a.cols() == v.size(), "matrix-vector product: length mismatch");
  Vec out = zero_vec(a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (sgn(a(i, k)) != 0) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    }
  return out;
}

void add_kron(Mat& out, const Rational& c, const Mat& a, const Mat& b) {
  require(out.rows() == a.rows() * b.rows() && out.cols() == a.cols() * b.cols(), "add_kron: shape mismatch");
  if (sgn(c) == 0) return;
  Rational ca, t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      ca = c * a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (sgn(b(k, l)) == 0) continue;
          t = ca * b(k, l);
          out(i * b.rows() + k, j * b.cols() + l) += t;
        }
    }
}

Mat flip(std::size_t m, std::size_t n) {
  Mat out(n * m, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j * m + i, i * n + j) = 1;
  return out;
}

Mat hstack(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows(), "hstack: row mismatch");
  Mat out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  require(a.cols() == b.cols(), "vstack: column mismatch");
  Mat out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

EchelonForm rref(const Mat& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  // Rows as separate vectors so swaps are cheap.
  std::vector<Vec> m(rows);
  for (std::size_t r = 0; r < rows; ++r) m[r] = a.row(r);

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  Rational factor;
  Rational t;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[lead], m[p]);
    Vec& prow = m[lead];
    if (prow[c] != 1) {
      const Rational inv = 1 / prow[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(prow[j]) != 0) prow[j] *= inv;
      }
    }
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(prow[j]) != 0) support.push_back(j);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m[r][c]) == 0) continue;
      factor = m[r][c];
      for (std::size_t j : support) {
        t = factor * prow[j];
        m[r][j] -= t;
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  m.resize(pivots.size());
  return {Mat::from_rows(cols, m), std::move(pivots)};
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

std::optional<std::size_t> first_differing_column(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "compare: shape mismatch");
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return c;
  return std::nullopt;
}

// --- Subspace ----------------------------------------------------------------

Subspace::Subspace(std::size_t ambient, EchelonForm form)
    : ambient_(ambient), basis_(std::move(form.reduced)), pivots_(std::move(form.pivots)) {}

Subspace Subspace::span_rows(const Mat& generators) { return Subspace(generators.cols(), rref(generators)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  return span_rows(Mat::from_rows(ambient, vectors));
}

Subspace Subspace::zero(std::size_t ambient) { return span_rows(Mat(0, ambient)); }
Subspace Subspace::full(std::size_t ambient) { return span_rows(Mat::identity(ambient)); }

bool Subspace::contains(const Vec& v) const {
  require(v.size() == ambient_, "contains: ambient mismatch");
  // Reduce v against the RREF basis; v is in the span iff the residue vanishes.
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational c = r[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      if (sgn(basis_(i, j)) != 0) r[j] -= c * basis_(i, j);
    }
  }
  return wbalg::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_ == ambient_, "contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

bool Subspace::contains_columns(const Mat& m) const {
  require(m.rows() == ambient_, "contains_columns: ambient mismatch");
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!contains(m.col(c))) return false;
  return true;
}

Mat Subspace::coordinates() const {
  Mat c(dim(), ambient_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) c(i, pivots_[i]) = 1;
  return c;
}

Subspace image(const Mat& a) { return Subspace::span_rows(a.transpose()); }

Subspace kernel(const Mat& a) {
  const EchelonForm form = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : form.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(n);
    v[free] = 1;
    for (std::size_t i = 0; i < form.pivots.size(); ++i) v[form.pivots[i]] = -form.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

bool equal(const Subspace& s, const Subspace& t) {
  require(s.ambient() == t.ambient(), "equal: ambient mismatch");
  return s == t;
}

Subspace sum(const Subspace& s, const Subspace& t) {
  require(s.ambient() == t.ambient(), "sum: ambient mismatch");
  return Subspace::span_rows(vstack(s.basis(), t.basis()));
}

Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

Subspace intersect(const Subspace& s, const Subspace& t) {
  require(s.ambient() == t.ambient(), "intersect: ambient mismatch");
  return annihilator(sum(annihilator(s), annihilator(t)));
}

Subspace tensor(const Subspace& s, const Subspace& t) { return Subspace::span_rows(kron(s.basis(), t.basis())); }

Quotient quotient(const Subspace& sub) {
  const std::size_t n = sub.ambient();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : sub.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);

  // project(v) = free coordinates of v - sum_i v[p_i] b_i.
  Mat project(free.size(), n);
  Mat lift(n, free.size());
  for (std::size_t q = 0; q < free.size(); ++q) {
    project(q, free[q]) = 1;
    lift(free[q], q) = 1;
    for (std::size_t i = 0; i < sub.pivots().size(); ++i) {
      project(q, sub.pivots()[i]) = -sub.basis()(i, free[q]);
    }
  }
  return {sub, std::move(project), std::move(lift)};
}

IdempotentSplit idempotent_split(const Mat& p) {
  require(p.square(), "idempotent_split: matrix must be square");
  const Mat p2 = p * p;
  if (auto c = first_differing_column(p2, p)) {
    throw NotIdempotent("matrix is not idempotent: p(p(e_" + std::to_string(*c) + ")) != p(e_" +
                            std::to_string(*c) + ")",
                        unit_vec(p.rows(), *c));
  }
  Subspace img = image(p);
  Subspace ker = kernel(p);
  Mat section = img.embedding();
  // p = section * X with X the pivot rows of p, because the basis is in RREF.
  Mat retraction = p.select_rows(img.pivots());
  return {std::move(img), std::move(ker), std::move(section), std::move(retraction)};
}

}  // namespace wbalg
