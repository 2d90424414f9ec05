#pragma once

// Dense exact matrices over a field object, with reduced row echelon form,
// nullspace, and inversion. No floating point anywhere.

#include <optional>
#include <utility>
#include <vector>

#include "gyrorep/errors.hpp"

namespace gyrorep {

template <class F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix(F field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field.zero()) {}

  static Matrix identity(F field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(F field, const std::vector<std::vector<Elem>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
        fail(errc::ambient_mismatch, "ragged row list");
      for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Elem> row(int i) const {
    std::vector<Elem> r(static_cast<std::size_t>(cols_), field_.zero());
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = (*this)(i, j);
    return r;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !field_.same(o.field_)) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (!field_.eq(e_[i], o.e_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const {
    require_same_field(o);
    if (cols_ != o.rows_) fail(errc::ambient_mismatch, "matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Elem& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j)
          out(i, j) = field_.add(out(i, j), field_.mul(a, o(k, j)));
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const { return zip(o, [&](const Elem& a, const Elem& b) { return field_.add(a, b); }); }
  Matrix operator-(const Matrix& o) const { return zip(o, [&](const Elem& a, const Elem& b) { return field_.sub(a, b); }); }

  Matrix scaled(const Elem& c) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.mul(c, e_[i]);
    return out;
  }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Matrix-vector product M v.
  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    if (static_cast<int>(v.size()) != cols_) fail(errc::ambient_mismatch, "matrix-vector shape mismatch");
    std::vector<Elem> out(static_cast<std::size_t>(rows_), field_.zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        out[static_cast<std::size_t>(i)] =
            field_.add(out[static_cast<std::size_t>(i)], field_.mul((*this)(i, j), v[static_cast<std::size_t>(j)]));
    return out;
  }

  bool is_zero() const {
    for (const Elem& x : e_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  void require_same_field(const Matrix& o) const {
    if (!field_.same(o.field_)) fail(errc::field_mismatch, "matrices over different fields");
  }

private:
  template <class Op>
  Matrix zip(const Matrix& o, Op op) const {
    require_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::ambient_mismatch, "matrix shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = op(e_[i], o.e_[i]);
    return out;
  }

  F field_;
  int rows_, cols_;
  std::vector<Elem> e_;
};

template <class F>
struct RrefResult {
  Matrix<F> mat;
  int rank;
  std::vector<int> pivots; // pivot column per nonzero row, strictly increasing
};

/// Unique reduced row echelon form. Pivot choice: leftmost column, then
/// topmost remaining row.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& fld = m.field();
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!fld.is_zero(m(i, c))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    m.swap_rows(r, pr);
    auto scale = fld.inv(m(r, c));
    for (int j = c; j < m.cols(); ++j) m(r, j) = fld.mul(scale, m(r, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || fld.is_zero(m(i, c))) continue;
      auto f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) = fld.sub(m(i, j), fld.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

/// Rows spanning {v : M v = 0}, one per free column of rref(M).
template <class F>
Matrix<F> nullspace_rows(const Matrix<F>& m) {
  const F& fld = m.field();
  auto red = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : red.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix<F> out(fld, m.cols() - red.rank, m.cols());
  int row = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    out(row, free) = fld.one();
    for (int i = 0; i < red.rank; ++i)
      out(row, red.pivots[static_cast<std::size_t>(i)]) = fld.neg(red.mat(i, free));
    ++row;
  }
  return out;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const F& fld = m.field();
  const int n = m.rows();
  if (n == 0) return Matrix<F>(fld, 0, 0);
  Matrix<F> aug(fld, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = fld.one();
  }
  auto red = rref(std::move(aug));
  if (red.rank != n || red.pivots.back() != n - 1) return std::nullopt;
  Matrix<F> inv(fld, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = red.mat(i, n + j);
  return inv;
}

} // namespace gyrorep
