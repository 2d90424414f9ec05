#pragma once

// Linear representations of a finite gyrogroup over an exact field:
// verification, invariant subspaces, the averaging projection, Maschke
// complements, spinning, irreducibility search, complete decomposition and
// intertwiners.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gyrorep/gyrogroup.hpp"
#include "gyrorep/subspace.hpp"

namespace gyrorep {

inline constexpr std::uint64_t default_point_bound = std::uint64_t(1) << 24;

template <class F>
class Representation {
public:
  using Elem = typename F::Elem;

  /// mats[a] is the matrix of element a; shape checks only, homomorphism
  /// verification is verify_representation's job.
  Representation(GyroTable gyro, F field, std::vector<Matrix<F>> mats)
      : gyro_(std::move(gyro)), field_(field), mats_(std::move(mats)) {
    if (static_cast<int>(mats_.size()) != gyro_.order())
      fail(errc::ambient_mismatch, "one matrix per gyrogroup element required");
    degree_ = mats_.empty() ? 0 : mats_.front().rows();
    for (const auto& m : mats_)
      if (m.rows() != degree_ || m.cols() != degree_) fail(errc::ambient_mismatch, "representation matrices must share a square shape");
  }

  static Representation trivial(GyroTable gyro, F field, int degree) {
    std::vector<Matrix<F>> mats(static_cast<std::size_t>(gyro.order()), Matrix<F>::identity(field, degree));
    return Representation(std::move(gyro), field, std::move(mats));
  }

  const GyroTable& gyro() const { return gyro_; }
  const F& field() const { return field_; }
  int degree() const { return degree_; }
  const Matrix<F>& mat(int a) const { return mats_[static_cast<std::size_t>(a)]; }

private:
  GyroTable gyro_;
  F field_;
  int degree_ = 0;
  std::vector<Matrix<F>> mats_;
};

struct RepReport {
  bool ok = true;
  std::string message; // first violation
};

/// Exhaustive check of phi(e) = I, invertibility, phi(-a) = phi(a)^{-1} and
/// phi(a+b) = phi(a) phi(b). Reports the first violation.
template <class F>
RepReport verify_representation(const Representation<F>& r) {
  const auto& g = r.gyro();
  const F& fld = r.field();
  const int n = g.order();
  auto id = Matrix<F>::identity(fld, r.degree());
  if (r.mat(g.identity()) != id) return {false, "matrix of the identity element is not the identity"};
  for (int a = 0; a < n; ++a) {
    auto prod = r.mat(g.inverse(a)) * r.mat(a);
    if (prod != id) {
      if (!inverse(r.mat(a)))
        return {false, "matrix of element " + std::to_string(a) + " is singular"};
      return {false, "matrix of -" + std::to_string(a) + " is not the inverse of the matrix of " + std::to_string(a)};
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.mat(g.add(a, b)) != r.mat(a) * r.mat(b))
        return {false, "homomorphism fails at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
  return {};
}

template <class F>
bool is_invariant(const Representation<F>& r, const Subspace<F>& u) {
  if (u.ambient_dim() != r.degree()) fail(errc::ambient_mismatch, "subspace ambient differs from representation degree");
  if (!u.field().same(r.field())) fail(errc::field_mismatch, "subspace and representation over different fields");
  for (int a = 0; a < r.gyro().order(); ++a)
    for (int i = 0; i < u.dim(); ++i)
      if (!u.contains(r.mat(a).apply(u.basis_vector(i)))) return false;
  return true;
}

namespace detail {

/// Coordinate projection onto U along the span of the standard basis vectors
/// at U's non-pivot columns: pi0 v = sum_i v[p_i] * (i-th basis row).
template <class F>
Matrix<F> coordinate_projection(const Subspace<F>& u) {
  const F& fld = u.field();
  const int d = u.ambient_dim();
  Matrix<F> pi0(fld, d, d);
  for (int i = 0; i < u.dim(); ++i) {
    int p = u.pivots()[static_cast<std::size_t>(i)];
    for (int row = 0; row < d; ++row) pi0(row, p) = u.basis()(i, row);
  }
  return pi0;
}

} // namespace detail

/// The averaged intertwining projection pi = (1/n) sum_a phi(a) pi0 phi(-a),
/// where pi0 projects onto U along the coordinate complement of U's RREF
/// basis. Requires U invariant and |G| invertible in the field; then
/// pi^2 = pi, pi|U = id, image(pi) = U and pi commutes with every phi(b).
template <class F>
Matrix<F> averaging_projection(const Representation<F>& r, const Subspace<F>& u) {
  const F& fld = r.field();
  const auto& g = r.gyro();
  auto n_scalar = fld.from_int(g.order());
  if (fld.is_zero(n_scalar))
    fail(errc::characteristic_divides_order,
         "field characteristic " + std::to_string(fld.characteristic()) + " divides the order " + std::to_string(g.order()));
  if (!is_invariant(r, u)) fail(errc::not_invariant, "subspace is not invariant");

  auto pi0 = detail::coordinate_projection(u);
  Matrix<F> acc(fld, r.degree(), r.degree());
  for (int a = 0; a < g.order(); ++a) acc = acc + r.mat(a) * pi0 * r.mat(g.inverse(a));
  return acc.scaled(fld.inv(n_scalar));
}

/// W = ker(pi): the invariant direct-sum complement of U.
template <class F>
Subspace<F> maschke_complement(const Representation<F>& r, const Subspace<F>& u) {
  return kernel(averaging_projection(r, u));
}

/// Smallest invariant subspace containing v: closure of span{v} under all
/// phi(a), grown until the rank stabilizes.
template <class F>
Subspace<F> spin(const Representation<F>& r, const std::vector<typename F::Elem>& v) {
  const F& fld = r.field();
  if (static_cast<int>(v.size()) != r.degree()) fail(errc::ambient_mismatch, "vector length differs from representation degree");
  auto current = Subspace<F>::from_vectors(fld, r.degree(), {v});
  for (;;) {
    std::vector<std::vector<typename F::Elem>> rows;
    for (int i = 0; i < current.dim(); ++i) rows.push_back(current.basis_vector(i));
    for (int a = 0; a < r.gyro().order(); ++a)
      for (int i = 0; i < current.dim(); ++i) rows.push_back(r.mat(a).apply(current.basis_vector(i)));
    auto next = Subspace<F>::from_vectors(fld, r.degree(), rows);
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

namespace detail {

/// Visits candidate vectors of F^dim in a fixed order; fn returning true
/// stops the scan. Returns the number of vectors visited.
///
/// Over GF(p): all projective points (first nonzero coordinate normalized to
/// 1) in lexicographic order; complete, and guarded by p^dim <= bound.
/// Over Q: all {-1,0,1}-vectors, first nonzero +1, by base-3 odometer with
/// digit order (0, 1, -1); if 3^dim exceeds the bound, standard basis vectors
/// only. Incomplete by design; callers must not conclude "none exists".
template <class F, class Fn>
std::uint64_t enumerate_candidate_vectors(const F& fld, int dim, std::uint64_t bound, Fn&& fn) {
  using Elem = typename F::Elem;
  std::uint64_t visited = 0;
  if (dim <= 0) return visited;

  if constexpr (F::finite) {
    const std::uint64_t p = fld.characteristic();
    long double total = 1.0L;
    for (int i = 0; i < dim; ++i) total *= static_cast<long double>(p);
    if (total > static_cast<long double>(bound))
      fail(errc::search_space_too_large,
           "p^degree = " + std::to_string(p) + "^" + std::to_string(dim) + " exceeds the point bound " + std::to_string(bound));
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(dim), 0);
    for (;;) {
      int i = dim - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == p - 1) digits[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) return visited;
      ++digits[static_cast<std::size_t>(i)];
      int lead = 0;
      while (digits[static_cast<std::size_t>(lead)] == 0) ++lead;
      if (digits[static_cast<std::size_t>(lead)] != 1) continue;
      std::vector<Elem> v(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) v[static_cast<std::size_t>(j)] = static_cast<Elem>(digits[static_cast<std::size_t>(j)]);
      ++visited;
      if (fn(v)) return visited;
    }
  } else {
    long double total = 1.0L;
    bool small_enough = true;
    for (int i = 0; i < dim; ++i) {
      total *= 3.0L;
      if (total > static_cast<long double>(bound)) {
        small_enough = false;
        break;
      }
    }
    if (!small_enough) {
      for (int i = dim - 1; i >= 0; --i) {
        std::vector<Elem> v(static_cast<std::size_t>(dim), fld.zero());
        v[static_cast<std::size_t>(i)] = fld.one();
        ++visited;
        if (fn(v)) return visited;
      }
      return visited;
    }
    std::vector<int> digits(static_cast<std::size_t>(dim), 0); // symbols 0,1,2 -> values 0,1,-1
    for (;;) {
      int i = dim - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == 2) digits[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) return visited;
      ++digits[static_cast<std::size_t>(i)];
      int lead = 0;
      while (digits[static_cast<std::size_t>(lead)] == 0) ++lead;
      if (digits[static_cast<std::size_t>(lead)] != 1) continue;
      std::vector<Elem> v(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) {
        int s = digits[static_cast<std::size_t>(j)];
        v[static_cast<std::size_t>(j)] = s == 0 ? fld.zero() : (s == 1 ? fld.one() : fld.neg(fld.one()));
      }
      ++visited;
      if (fn(v)) return visited;
    }
  }
}

} // namespace detail

enum class SearchVerdict { found, none_exists, unknown };

template <class F>
struct InvariantSearch {
  SearchVerdict verdict = SearchVerdict::unknown;
  std::optional<Subspace<F>> found;
  std::uint64_t vectors_tried = 0;
};

/// Searches for a proper nonzero invariant subspace by spinning candidate
/// vectors. Over GF(p) the projective scan is complete: every proper
/// invariant subspace contains a nonzero vector whose spin is proper, so an
/// empty scan certifies irreducibility. Over Q an exhausted scan yields
/// `unknown`, never `none_exists`.
template <class F>
InvariantSearch<F> find_proper_invariant(const Representation<F>& r, std::uint64_t point_bound = default_point_bound) {
  InvariantSearch<F> res;
  const int d = r.degree();
  if (d <= 1) {
    res.verdict = SearchVerdict::none_exists;
    return res;
  }
  res.vectors_tried = detail::enumerate_candidate_vectors(r.field(), d, point_bound, [&](const auto& v) {
    auto s = spin(r, v);
    if (s.dim() > 0 && s.dim() < d) {
      res.found = std::move(s);
      return true;
    }
    return false;
  });
  if (res.found)
    res.verdict = SearchVerdict::found;
  else
    res.verdict = F::finite ? SearchVerdict::none_exists : SearchVerdict::unknown;
  return res;
}

/// Distinct subspaces obtained by spinning every vector of the deterministic
/// candidate scan (dimension 0 and full space included when they occur).
template <class F>
std::vector<Subspace<F>> spin_generated_subspaces(const Representation<F>& r,
                                                  std::uint64_t point_bound = default_point_bound) {
  std::vector<Subspace<F>> seen;
  detail::enumerate_candidate_vectors(r.field(), r.degree(), point_bound, [&](const auto& v) {
    auto s = spin(r, v);
    bool known = false;
    for (const auto& t : seen)
      if (t == s) {
        known = true;
        break;
      }
    if (!known) seen.push_back(std::move(s));
    return false;
  });
  return seen;
}

/// Expresses the action on an invariant subspace in the subspace's canonical
/// basis: solves basis^T M_a = phi(a) basis^T columnwise via U's pivots.
template <class F>
Representation<F> restrict_to(const Representation<F>& r, const Subspace<F>& u) {
  const F& fld = r.field();
  if (u.ambient_dim() != r.degree()) fail(errc::ambient_mismatch, "subspace ambient differs from representation degree");
  if (u.dim() == 0) fail(errc::not_invariant, "cannot restrict to the zero subspace");
  const int k = u.dim();
  std::vector<Matrix<F>> mats;
  mats.reserve(static_cast<std::size_t>(r.gyro().order()));
  for (int a = 0; a < r.gyro().order(); ++a) {
    Matrix<F> m(fld, k, k);
    for (int j = 0; j < k; ++j) {
      auto image = r.mat(a).apply(u.basis_vector(j));
      // coordinates w.r.t. the RREF basis are read off at the pivot columns
      std::vector<typename F::Elem> coords(static_cast<std::size_t>(k), fld.zero());
      for (int i = 0; i < k; ++i)
        coords[static_cast<std::size_t>(i)] = image[static_cast<std::size_t>(u.pivots()[static_cast<std::size_t>(i)])];
      // the image must reconstruct exactly, otherwise U was not invariant
      std::vector<typename F::Elem> recon(image.size(), fld.zero());
      for (int i = 0; i < k; ++i)
        for (int c = 0; c < u.ambient_dim(); ++c)
          recon[static_cast<std::size_t>(c)] =
              fld.add(recon[static_cast<std::size_t>(c)], fld.mul(coords[static_cast<std::size_t>(i)], u.basis()(i, c)));
      for (std::size_t c = 0; c < image.size(); ++c)
        if (!fld.eq(recon[c], image[c]))
          fail(errc::not_invariant, "phi(" + std::to_string(a) + ") maps a basis vector outside the subspace");
      for (int i = 0; i < k; ++i) m(i, j) = coords[static_cast<std::size_t>(i)];
    }
    mats.push_back(std::move(m));
  }
  return Representation<F>(r.gyro(), fld, std::move(mats));
}

template <class F>
struct Summand {
  Subspace<F> space;          // in the coordinates of the decomposed representation
  Representation<F> rep;      // restriction, in the subspace's canonical basis
  SearchVerdict irreducible;  // none_exists = certified irreducible
  std::uint64_t vectors_tried = 0;
};

template <class F>
struct Decomposition {
  std::vector<Summand<F>> summands;
  std::uint64_t total_vectors_tried = 0;
  bool direct_sum_verified = false;
  std::vector<std::string> log;
};

namespace detail {

template <class F>
void decompose_rec(const Representation<F>& r, const Matrix<F>& into_ambient, std::uint64_t bound,
                   Decomposition<F>& out) {
  auto search = find_proper_invariant(r, bound);
  out.total_vectors_tried += search.vectors_tried;
  if (search.verdict != SearchVerdict::found) {
    auto space = Subspace<F>::from_rows(into_ambient);
    out.log.push_back("leaf dim " + std::to_string(r.degree()) + ": " +
                      (search.verdict == SearchVerdict::none_exists ? "irreducible" : "irreducibility unknown") +
                      " after " + std::to_string(search.vectors_tried) + " candidate vectors");
    out.summands.push_back({std::move(space), r, search.verdict, search.vectors_tried});
    return;
  }
  const auto& u = *search.found;
  auto w = maschke_complement(r, u);
  out.log.push_back("split dim " + std::to_string(r.degree()) + " = " + std::to_string(u.dim()) + " + " +
                    std::to_string(w.dim()) + " after " + std::to_string(search.vectors_tried) +
                    " candidate vectors");
  auto ru = restrict_to(r, u);
  auto rw = restrict_to(r, w);
  decompose_rec(ru, u.basis() * into_ambient, bound, out);
  decompose_rec(rw, w.basis() * into_ambient, bound, out);
}

} // namespace detail

/// Complete reduction: recursively split off proper invariant subspaces and
/// their Maschke complements (U branch first, depth first). Over GF(p) every
/// leaf is certified irreducible; over Q leaves may be marked unknown.
template <class F>
Decomposition<F> decompose(const Representation<F>& r, std::uint64_t point_bound = default_point_bound) {
  const F& fld = r.field();
  if (fld.is_zero(fld.from_int(r.gyro().order())))
    fail(errc::characteristic_divides_order,
         "field characteristic " + std::to_string(fld.characteristic()) + " divides the order " +
             std::to_string(r.gyro().order()));
  Decomposition<F> out;
  detail::decompose_rec(r, Matrix<F>::identity(fld, r.degree()), point_bound, out);

  int dim_total = 0;
  std::vector<std::vector<typename F::Elem>> all_rows;
  for (const auto& s : out.summands) {
    dim_total += s.space.dim();
    for (int i = 0; i < s.space.dim(); ++i) all_rows.push_back(s.space.basis_vector(i));
  }
  auto joint = Subspace<F>::from_vectors(fld, r.degree(), all_rows);
  out.direct_sum_verified = dim_total == r.degree() && joint.dim() == r.degree();
  return out;
}

/// Solution space of Phi phi(a) = psi(a) Phi for all a, as a subspace of
/// (deg S x deg R)-matrices flattened row-major.
template <class F>
Subspace<F> intertwiner_space(const Representation<F>& r, const Representation<F>& s) {
  const F& fld = r.field();
  if (!fld.same(s.field())) fail(errc::field_mismatch, "representations over different fields");
  if (r.gyro() != s.gyro()) fail(errc::gyrogroup_mismatch, "representations of different gyrogroups");
  const int dr = r.degree(), ds = s.degree();
  const int unknowns = dr * ds;
  const int n = r.gyro().order();
  Matrix<F> sys(fld, n * unknowns, unknowns);
  int row = 0;
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < ds; ++i)
      for (int j = 0; j < dr; ++j) {
        // coefficient of Phi[u][v] in (Phi phi(a) - psi(a) Phi)[i][j]
        for (int v = 0; v < dr; ++v)
          sys(row, i * dr + v) = fld.add(sys(row, i * dr + v), r.mat(a)(v, j));
        for (int u = 0; u < ds; ++u)
          sys(row, u * dr + j) = fld.sub(sys(row, u * dr + j), s.mat(a)(i, u));
        ++row;
      }
  }
  return kernel(sys);
}

template <class F>
struct EquivalenceSearch {
  SearchVerdict verdict = SearchVerdict::unknown; // found / none_exists / unknown
  std::optional<Matrix<F>> map;                   // an invertible intertwiner, when found
  std::uint64_t combinations_tried = 0;
};

/// Scans the intertwiner space for an invertible element. Complete over
/// GF(p) (any equivalence has a normalized scalar multiple in the scan);
/// over Q a fruitless scan reports `unknown` unless the space is trivial.
template <class F>
EquivalenceSearch<F> find_equivalence(const Representation<F>& r, const Representation<F>& s,
                                      std::uint64_t point_bound = default_point_bound) {
  const F& fld = r.field();
  EquivalenceSearch<F> res;
  if (r.degree() != s.degree()) {
    res.verdict = SearchVerdict::none_exists;
    return res;
  }
  auto space = intertwiner_space(r, s);
  if (space.dim() == 0) {
    res.verdict = SearchVerdict::none_exists;
    return res;
  }
  const int d = r.degree();
  res.combinations_tried = detail::enumerate_candidate_vectors(fld, space.dim(), point_bound, [&](const auto& coeffs) {
    Matrix<F> phi(fld, d, d);
    for (int t = 0; t < space.dim(); ++t) {
      const auto& c = coeffs[static_cast<std::size_t>(t)];
      if (fld.is_zero(c)) continue;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          phi(i, j) = fld.add(phi(i, j), fld.mul(c, space.basis()(t, i * d + j)));
    }
    if (inverse(phi).has_value()) {
      res.map = std::move(phi);
      return true;
    }
    return false;
  });
  if (res.map)
    res.verdict = SearchVerdict::found;
  else
    res.verdict = F::finite ? SearchVerdict::none_exists : SearchVerdict::unknown;
  return res;
}

// --- representation file format ---
// '#' comments; first non-comment line is the degree d; then one d x d block
// per gyrogroup element in index order, one row per line, scalars in the
// field's text syntax.

template <class F>
Representation<F> parse_representation(std::istream& in, const GyroTable& g, const F& field) {
  std::string line;
  int lineno = 0;
  long d = -1;
  while (d < 0 && std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!(ls >> d)) {
      d = -1;
      continue; // blank
    }
    std::string extra;
    if (d < 1 || (ls >> extra)) fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad degree line");
  }
  if (d < 1) fail(errc::parse_error, "missing degree line");
  auto rows = parse_vector_rows(in, field);
  const std::size_t expected = static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(d);
  if (rows.size() != expected)
    fail(errc::parse_error, "expected " + std::to_string(expected) + " matrix rows, got " + std::to_string(rows.size()));
  if (!rows.empty() && rows.front().size() != static_cast<std::size_t>(d))
    fail(errc::parse_error, "matrix rows must have " + std::to_string(d) + " entries");
  std::vector<Matrix<F>> mats;
  std::size_t at = 0;
  for (int a = 0; a < g.order(); ++a) {
    Matrix<F> m(field, static_cast<int>(d), static_cast<int>(d));
    for (int i = 0; i < d; ++i, ++at)
      for (int j = 0; j < d; ++j) m(i, j) = rows[at][static_cast<std::size_t>(j)];
    mats.push_back(std::move(m));
  }
  return Representation<F>(g, field, std::move(mats));
}

template <class F>
void emit_representation(const Representation<F>& r, std::ostream& out) {
  const F& fld = r.field();
  out << r.degree() << "\n";
  for (int a = 0; a < r.gyro().order(); ++a) {
    out << "# element " << a << "\n";
    for (int i = 0; i < r.degree(); ++i) {
      for (int j = 0; j < r.degree(); ++j) out << (j ? " " : "") << fld.str(r.mat(a)(i, j));
      out << "\n";
    }
  }
}

} // namespace gyrorep
