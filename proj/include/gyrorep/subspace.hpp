#pragma once

// Subspaces of F^n in canonical form: the basis is the reduced row echelon
// form of any spanning set, so equality and containment are structural.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "gyrorep/matrix.hpp"

namespace gyrorep {

template <class F>
class Subspace {
public:
  using Elem = typename F::Elem;

  static Subspace zero(F field, int ambient) { return from_rows(Matrix<F>(field, 0, ambient)); }
  static Subspace full(F field, int ambient) { return from_rows(Matrix<F>::identity(field, ambient)); }

  /// Canonicalizes a spanning set: rref, zero rows dropped.
  static Subspace from_rows(const Matrix<F>& spanning) {
    auto red = rref(spanning);
    Matrix<F> basis(spanning.field(), red.rank, spanning.cols());
    for (int i = 0; i < red.rank; ++i)
      for (int j = 0; j < spanning.cols(); ++j) basis(i, j) = red.mat(i, j);
    return Subspace(std::move(basis), std::move(red.pivots));
  }

  static Subspace from_vectors(F field, int ambient, const std::vector<std::vector<Elem>>& vecs) {
    for (const auto& v : vecs)
      if (static_cast<int>(v.size()) != ambient) fail(errc::ambient_mismatch, "vector length differs from ambient dimension");
    auto m = Matrix<F>::from_rows(field, vecs);
    if (vecs.empty()) m = Matrix<F>(field, 0, ambient);
    return from_rows(m);
  }

  int dim() const { return basis_.rows(); }
  int ambient_dim() const { return basis_.cols(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const F& field() const { return basis_.field(); }

  std::vector<Elem> basis_vector(int i) const { return basis_.row(i); }

  bool contains(const std::vector<Elem>& v) const {
    const F& fld = field();
    if (static_cast<int>(v.size()) != ambient_dim()) fail(errc::ambient_mismatch, "vector length differs from ambient dimension");
    std::vector<Elem> w = v;
    for (int i = 0; i < dim(); ++i) {
      const Elem& c = w[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])];
      if (fld.is_zero(c)) continue;
      Elem f = c;
      for (int j = 0; j < ambient_dim(); ++j)
        w[static_cast<std::size_t>(j)] = fld.sub(w[static_cast<std::size_t>(j)], fld.mul(f, basis_(i, j)));
    }
    for (const Elem& x : w)
      if (!fld.is_zero(x)) return false;
    return true;
  }

  bool contains_subspace(const Subspace& other) const {
    require_compatible(other);
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return ambient_dim() == o.ambient_dim() && field().same(o.field()) && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  void require_compatible(const Subspace& o) const {
    if (!field().same(o.field())) fail(errc::field_mismatch, "subspaces over different fields");
    if (ambient_dim() != o.ambient_dim()) fail(errc::ambient_mismatch, "subspaces in different ambient spaces");
  }

private:
  Subspace(Matrix<F> basis, std::vector<int> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix<F> basis_;      // RREF, no zero rows
  std::vector<int> pivots_;
};

/// Basis of {v : M v = 0} in canonical form.
template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  return Subspace<F>::from_rows(nullspace_rows(m));
}

template <class F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& w) {
  u.require_compatible(w);
  const F& fld = u.field();
  Matrix<F> stacked(fld, u.dim() + w.dim(), u.ambient_dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < u.ambient_dim(); ++j) stacked(i, j) = u.basis()(i, j);
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < w.ambient_dim(); ++j) stacked(u.dim() + i, j) = w.basis()(i, j);
  return Subspace<F>::from_rows(stacked);
}

/// U cap W, via the coefficient-space kernel of [Bu^T | -Bw^T].
template <class F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& w) {
  u.require_compatible(w);
  const F& fld = u.field();
  const int n = u.ambient_dim();
  const int ru = u.dim(), rw = w.dim();
  Matrix<F> sys(fld, n, ru + rw);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < ru; ++i) sys(j, i) = u.basis()(i, j);
    for (int i = 0; i < rw; ++i) sys(j, ru + i) = fld.neg(w.basis()(i, j));
  }
  Matrix<F> coeffs = nullspace_rows(sys);
  Matrix<F> vecs(fld, coeffs.rows(), n);
  for (int r = 0; r < coeffs.rows(); ++r)
    for (int i = 0; i < ru; ++i) {
      const auto& c = coeffs(r, i);
      if (fld.is_zero(c)) continue;
      for (int j = 0; j < n; ++j) vecs(r, j) = fld.add(vecs(r, j), fld.mul(c, u.basis()(i, j)));
    }
  return Subspace<F>::from_rows(vecs);
}

/// True iff dim U + dim W = ambient and U cap W = {0}.
template <class F>
bool is_direct_sum(const Subspace<F>& u, const Subspace<F>& w) {
  u.require_compatible(w);
  if (u.dim() + w.dim() != u.ambient_dim()) return false;
  return intersect(u, w).dim() == 0;
}

/// Parses vector files: '#' comments, one vector per line, whitespace-separated
/// scalars in the field's text syntax. All rows must have equal length.
template <class F>
std::vector<std::vector<typename F::Elem>> parse_vector_rows(std::istream& in, const F& field) {
  std::vector<std::vector<typename F::Elem>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<typename F::Elem> row;
    std::string tok;
    while (ls >> tok) {
      auto v = field.parse(tok);
      if (!v) fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad scalar '" + tok + "'");
      row.push_back(*v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && rows.front().size() != row.size())
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(rows.front().size()) + " entries, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace gyrorep
