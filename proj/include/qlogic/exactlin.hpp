#pragma once

// Exact linear algebra over the Gaussian rationals.

#include <qlogic/complex_rational.hpp>
#include <qlogic/error.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlogic {

class Vector {
 public:
  explicit Vector(std::size_t dim) : components_(dim) {
    if (dim == 0) throw std::invalid_argument("vector dimension must be positive");
  }
  explicit Vector(std::vector<ComplexRational> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("vector dimension must be positive");
  }
  Vector(std::initializer_list<ComplexRational> components)
      : Vector(std::vector<ComplexRational>(components)) {}

  /// k-th standard basis vector of C^dim (0-based).
  static Vector unit(std::size_t dim, std::size_t k) {
    Vector v(dim);
    v[k] = 1;
    return v;
  }

  std::size_t dim() const { return components_.size(); }
  const ComplexRational& operator[](std::size_t k) const { return components_[k]; }
  ComplexRational& operator[](std::size_t k) { return components_[k]; }
  std::span<const ComplexRational> components() const { return components_; }

  bool is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const ComplexRational& z) { return z.is_zero(); });
  }

  Vector& operator+=(const Vector& o) {
    require_same_dim(dim(), o.dim());
    for (std::size_t k = 0; k < dim(); ++k) components_[k] += o.components_[k];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    require_same_dim(dim(), o.dim());
    for (std::size_t k = 0; k < dim(); ++k) components_[k] -= o.components_[k];
    return *this;
  }
  Vector& operator*=(const ComplexRational& s) {
    for (auto& z : components_) z *= s;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const ComplexRational& s, Vector v) { return v *= s; }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector& a, const Vector& b) {
    return std::lexicographical_compare_three_way(a.components_.begin(), a.components_.end(),
                                                  b.components_.begin(), b.components_.end());
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < dim(); ++k) {
      if (k) out += ", ";
      out += components_[k].to_string();
    }
    return out + ")";
  }

 private:
  std::vector<ComplexRational> components_;
};

/// Row-major dense matrix. A matrix with zero rows is allowed and stands for an
/// empty generator list; the column count is always positive.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (cols == 0) throw std::invalid_argument("matrix must have at least one column");
  }

  /// Stack vectors as rows. All must share `cols`.
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      require_same_dim(rows[r].dim(), cols);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const ComplexRational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  ComplexRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    return Vector(std::vector<ComplexRational>(entries_.begin() + r * cols_,
                                               entries_.begin() + (r + 1) * cols_));
  }

  bool row_is_zero(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_dim(a.rows_, b.rows_);
    require_same_dim(a.cols_, b.cols_);
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
    return out;
  }

  friend Matrix operator*(const ComplexRational& s, Matrix m) {
    for (auto& z : m.entries_) z *= s;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a.cols_, b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ComplexRational> entries_;
};

/// Sum of conj(x_k) * y_k. Conjugate-linear in the first argument.
inline ComplexRational inner_product(const Vector& x, const Vector& y) {
  require_same_dim(x.dim(), y.dim());
  ComplexRational acc;
  for (std::size_t k = 0; k < x.dim(); ++k) acc += x[k].conj() * y[k];
  return acc;
}

/// Reduced row-echelon form (Gauss-Jordan). Leading entries are 1, zero rows sink.
inline Matrix rref(Matrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    const ComplexRational inv = ComplexRational(1) / m(pivot_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, c).is_zero()) continue;
      const ComplexRational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
    }
    ++pivot_row;
  }
  return m;
}

/// Pivot column of each nonzero row of an rref matrix, in row order.
inline std::vector<std::size_t> pivot_columns(const Matrix& reduced) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    std::size_t c = 0;
    while (c < reduced.cols() && reduced(r, c).is_zero()) ++c;
    if (c == reduced.cols()) break;
    pivots.push_back(c);
  }
  return pivots;
}

inline std::size_t rank(const Matrix& m) { return pivot_columns(rref(m)).size(); }

/// Null-space basis, one vector per free column in increasing column order.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  const Matrix reduced = rref(m);
  const auto pivots = pivot_columns(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Nonzero rows of rref of the stacked vectors: a canonical basis of their span.
inline std::vector<Vector> row_space_basis(std::span<const Vector> vs, std::size_t dim) {
  const Matrix reduced = rref(Matrix::from_rows(vs, dim));
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < reduced.rows() && !reduced.row_is_zero(r); ++r)
    basis.push_back(reduced.row(r));
  return basis;
}

/// Linearly independent subset of the columns of m (the pivot columns), as vectors.
inline std::vector<Vector> column_space_basis(const Matrix& m) {
  std::vector<Vector> basis;
  for (auto c : pivot_columns(rref(m))) {
    Vector v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {x : <v, x> = 0 for every v in vs}: kernel of the conjugated rows.
inline std::vector<Vector> orth_complement_basis(std::span<const Vector> vs, std::size_t dim) {
  Matrix m(vs.size(), dim);
  for (std::size_t r = 0; r < vs.size(); ++r) {
    require_same_dim(vs[r].dim(), dim);
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vs[r][c].conj();
  }
  return kernel_basis(m);
}

namespace detail {

class LiteralReader {
 public:
  LiteralReader(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(base_ + pos_, what); }
  std::size_t offset() const { return base_ + pos_; }

  mpz_class unsigned_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  /// digits [ '/' digits ]
  Rational unsigned_rational() {
    mpz_class num = unsigned_integer();
    mpz_class den = 1;
    if (accept('/')) {
      den = unsigned_integer();
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  /// One component: `[sign] q [(+|-) q i]` or `[sign] q i`. A coefficient of
  /// 1 before `i` may be omitted.
  ComplexRational component() {
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    if (accept('i')) return {Rational(0), Rational(sign)};
    Rational first = sign * unsigned_rational();
    if (accept('i')) return {Rational(0), first};
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      Rational im(1);
      if (!accept('i')) {
        im = unsigned_rational();
        expect('i');
      }
      if (c == '-') im = -im;
      return {first, im};
    }
    return {first, Rational(0)};
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `(c1, c2, ...)` with components as in ComplexRational::to_string.
/// `base_offset` shifts reported error offsets when the literal is embedded in a longer line.
inline Vector parse_vector(std::string_view text, std::size_t base_offset = 0) {
  detail::LiteralReader in(text, base_offset);
  in.expect('(');
  std::vector<ComplexRational> comps;
  do {
    comps.push_back(in.component());
  } while (in.accept(','));
  in.expect(')');
  if (!in.at_end()) in.fail("trailing characters after vector literal");
  return Vector(std::move(comps));
}

}  // namespace qlogic
