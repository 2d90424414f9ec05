#pragma once

// The left regular representation of a finite gyrogroup on L^gyr(G), the
// subspace of functions f: G -> F with f(a + gyr[x,y]z) = f(a + z) for all
// a, x, y, z. Those constraints are pure value equalities between
// coordinates, so L^gyr is spanned by indicator functions of the classes of
// the partition they generate; the linear-system route is kept alongside as
// an independent oracle.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gyrorep/fields.hpp"
#include "gyrorep/representation.hpp"

namespace gyrorep {

namespace detail {

// plain union-find with path halving
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

} // namespace detail

/// Partition of G whose class indicators span L^gyr(G); classes are ordered
/// by smallest member, members ascending.
struct GyroClassPartition {
  int order = 0;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  int count() const { return static_cast<int>(classes.size()); }
  std::vector<std::uint64_t> class_sizes() const {
    std::vector<std::uint64_t> s;
    s.reserve(classes.size());
    for (const auto& c : classes) s.push_back(c.size());
    return s;
  }
};

/// Generates the partition by merging a + rho(z) with a + z for every
/// distinct gyroautomorphism rho and all a, z.
inline GyroClassPartition lgyr_partition(const GyroTable& g) {
  const int n = g.order();
  detail::UnionFind uf(n);
  for (const Permutation& rho : g.gyr_perms()) {
    if (rho.is_identity()) continue;
    for (int a = 0; a < n; ++a)
      for (int z = 0; z < n; ++z) uf.unite(g.add(a, rho(z)), g.add(a, z));
  }
  GyroClassPartition part;
  part.order = n;
  part.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int root = uf.find(x);
    if (part.class_of[static_cast<std::size_t>(root)] < 0) {
      part.class_of[static_cast<std::size_t>(root)] = part.count();
      part.classes.emplace_back();
    }
    int c = part.class_of[static_cast<std::size_t>(root)];
    part.class_of[static_cast<std::size_t>(x)] = c;
    part.classes[static_cast<std::size_t>(c)].push_back(x);
  }
  return part;
}

/// Rows = class indicator vectors in F^|G| (one per class, class order).
template <class F>
Matrix<F> class_indicator_matrix(const GyroClassPartition& part, F field) {
  Matrix<F> m(field, part.count(), part.order);
  for (int c = 0; c < part.count(); ++c)
    for (int x : part.classes[static_cast<std::size_t>(c)]) m(c, x) = field.one();
  return m;
}

/// L^gyr(G) as a subspace of L(G) = F^|G|, from the partition.
template <class F>
Subspace<F> lgyr_span(const GyroTable& g, F field) {
  return Subspace<F>::from_rows(class_indicator_matrix(lgyr_partition(g), field));
}

/// Independent oracle: L^gyr(G) as the kernel of the defining constraint
/// matrix with rows e_{a + rho(z)} - e_{a + z}. Never consults the partition.
template <class F>
Subspace<F> lgyr_constraint_kernel(const GyroTable& g, F field) {
  const int n = g.order();
  std::vector<std::vector<typename F::Elem>> rows;
  for (const Permutation& rho : g.gyr_perms()) {
    if (rho.is_identity()) continue;
    for (int a = 0; a < n; ++a)
      for (int z = 0; z < n; ++z) {
        int u = g.add(a, rho(z)), v = g.add(a, z);
        if (u == v) continue;
        std::vector<typename F::Elem> row(static_cast<std::size_t>(n), field.zero());
        row[static_cast<std::size_t>(u)] = field.one();
        row[static_cast<std::size_t>(v)] = field.neg(field.one());
        rows.push_back(std::move(row));
      }
  }
  auto m = rows.empty() ? Matrix<F>(field, 0, n) : Matrix<F>::from_rows(field, rows);
  return kernel(m);
}

template <class F>
struct RegularRep {
  GyroClassPartition partition;
  Representation<F> rep; // degree = number of classes, class-indicator basis
};

/// lambda(a): indicator of C -> indicator of L_a(C), from the definition
/// (a.f)(x) = f(-a + x). Construction verifies that left translation maps
/// classes onto classes, that the permutation-level homomorphism law holds,
/// and the action pointwise against the definition; violations would
/// contradict the underlying theorems and throw internal_inconsistency.
template <class F>
RegularRep<F> regular_representation(const GyroTable& g, F field) {
  auto part = lgyr_partition(g);
  const int n = g.order();
  const int k = part.count();

  std::vector<int> class_image(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), -1);
  auto image_of = [&](int a, int c) -> int& { return class_image[static_cast<std::size_t>(a) * k + c]; };

  std::vector<Matrix<F>> mats;
  mats.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    Matrix<F> m(field, k, k);
    for (int c = 0; c < k; ++c) {
      std::vector<int> image;
      image.reserve(part.classes[static_cast<std::size_t>(c)].size());
      for (int x : part.classes[static_cast<std::size_t>(c)]) image.push_back(g.add(a, x));
      std::sort(image.begin(), image.end());
      int target = part.class_of[static_cast<std::size_t>(image.front())];
      if (image != part.classes[static_cast<std::size_t>(target)])
        fail(errc::internal_inconsistency, "left translation by " + std::to_string(a) + " does not permute the classes");
      image_of(a, c) = target;
      m(target, c) = field.one();
    }
    mats.push_back(std::move(m));
  }

  // homomorphism at the class-permutation level: lambda(a+b) = lambda(a) lambda(b)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < k; ++c)
        if (image_of(g.add(a, b), c) != image_of(a, image_of(b, c)))
          fail(errc::internal_inconsistency, "regular action is not a homomorphism at (" + std::to_string(a) + "," +
                                                 std::to_string(b) + ")");

  // pointwise against the definition: (lambda(a) chi_C)(x) = chi_C(-a + x)
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < k; ++c)
      for (int x = 0; x < n; ++x) {
        bool lhs = part.class_of[static_cast<std::size_t>(x)] == image_of(a, c);
        bool rhs = part.class_of[static_cast<std::size_t>(g.add(g.inverse(a), x))] == c;
        if (lhs != rhs)
          fail(errc::internal_inconsistency, "regular action disagrees with its definition at a=" + std::to_string(a));
      }

  return {std::move(part), Representation<F>(g, field, std::move(mats))};
}

/// Pairs a < b with lambda(a) = lambda(b) (the regular rep on L^gyr need not
/// be faithful; reported, not interpreted).
template <class F>
std::vector<std::pair<int, int>> lambda_coincidences(const RegularRep<F>& rr) {
  std::vector<std::pair<int, int>> out;
  const int n = rr.rep.gyro().order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rr.rep.mat(a) == rr.rep.mat(b)) out.emplace_back(a, b);
  return out;
}

template <class F>
struct SigmaReport {
  int dim_lg = 0;                 // |G|
  int dim_lgyr = 0;               // number of classes
  int dim_ker_sigma_in_lg = 0;    // |G| - 1
  bool lgyr_subset_ker_sigma = false;
  int dim_u = 0;                  // U = L^gyr cap ker sigma
  std::vector<std::uint64_t> class_sizes_mod_char; // plain sizes in char 0
  Subspace<F> u;                  // in the class-indicator basis
};

/// Analysis of sigma(f) = sum_a f(a): kernel dimension inside L(G), the
/// invariant subspace U = L^gyr cap ker sigma in the class basis, and the
/// dichotomy branch (either L^gyr lies inside ker sigma or U has codimension
/// one in L^gyr). U's invariance under every lambda(a) is verified
/// exhaustively.
template <class F>
SigmaReport<F> sigma_analysis(const GyroTable& g, F field) {
  auto rr = regular_representation(g, field);
  const int n = g.order();
  const int k = rr.partition.count();

  // sigma on L(G) in the delta basis is the all-ones row; sigma(delta_e) = 1 != 0
  Matrix<F> sigma_lg(field, 1, n);
  for (int x = 0; x < n; ++x) sigma_lg(0, x) = field.one();
  auto ker_lg = kernel(sigma_lg);

  // restricted to the class basis: sigma(chi_C) = |C| * 1
  Matrix<F> sigma_classes(field, 1, k);
  bool subset = true;
  std::vector<std::uint64_t> sizes_mod;
  const std::uint64_t ch = field.characteristic();
  for (int c = 0; c < k; ++c) {
    std::uint64_t size = rr.partition.classes[static_cast<std::size_t>(c)].size();
    sigma_classes(0, c) = field.from_int(static_cast<long>(size));
    if (!field.is_zero(sigma_classes(0, c))) subset = false;
    sizes_mod.push_back(ch == 0 ? size : size % ch);
  }
  auto u = kernel(sigma_classes);

  for (int a = 0; a < n; ++a)
    for (int i = 0; i < u.dim(); ++i)
      if (!u.contains(rr.rep.mat(a).apply(u.basis_vector(i))))
        fail(errc::internal_inconsistency, "L^gyr cap ker sigma is not invariant under lambda(" + std::to_string(a) + ")");

  SigmaReport<F> rep{n, k, ker_lg.dim(), subset, u.dim(), std::move(sizes_mod), std::move(u)};
  if (rep.dim_ker_sigma_in_lg != n - 1)
    fail(errc::internal_inconsistency, "dim ker sigma != |G| - 1");
  if (rep.dim_u != (rep.lgyr_subset_ker_sigma ? k : k - 1))
    fail(errc::internal_inconsistency, "dichotomy of dim(L^gyr cap ker sigma) violated");
  return rep;
}

/// The fixed subspace of the regular action in the class basis: the line
/// spanned by the all-ones vector (the constant function). Verified against
/// the stacked fixed-point system {(lambda(a) - I) v = 0 : a in G}.
template <class F>
Subspace<F> fix_subspace(const GyroTable& g, F field) {
  auto rr = regular_representation(g, field);
  const int k = rr.partition.count();
  Matrix<F> ones(field, 1, k);
  for (int c = 0; c < k; ++c) ones(0, c) = field.one();
  auto fix = Subspace<F>::from_rows(ones);

  const int n = g.order();
  Matrix<F> stacked(field, n * k, k);
  auto id = Matrix<F>::identity(field, k);
  for (int a = 0; a < n; ++a) {
    auto diff = rr.rep.mat(a) - id;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) stacked(a * k + i, j) = diff(i, j);
  }
  if (kernel(stacked) != fix)
    fail(errc::internal_inconsistency, "fixed subspace is not the line of constants");
  return fix;
}

struct ChainReport {
  std::uint64_t p = 0;
  int dim_fix = 0, dim_u = 0, dim_lgyr = 0, dim_lg = 0;
  bool inclusions_hold = false;   // {0} <= Fix <= U <= L^gyr <= L(G), verified as subspaces of L(G)
  bool strict_zero_fix = false;
  bool strict_fix_u = false;
  bool strict_u_lgyr = false;
  bool strict_lgyr_lg = false;
  bool is_group = false;
  bool remarks_hold = false;      // first inclusion strict; last strict iff not a group
  std::string rendered;
};

/// Verifies the subspace chain {0} < Fix <= U <= L^gyr <= L(G) over GF(p)
/// for p dividing |G| and reports which inclusions are strict.
inline ChainReport inclusion_chain(const GyroTable& g, std::uint64_t p) {
  if (!is_prime(p)) fail(errc::invalid_field, "not a prime: " + std::to_string(p));
  if (g.order() % static_cast<int>(p) != 0)
    fail(errc::prime_does_not_divide_order,
         std::to_string(p) + " does not divide the order " + std::to_string(g.order()));
  PrimeField field(p);
  auto rr = regular_representation(g, field);
  auto sig = sigma_analysis(g, field);
  auto fix = fix_subspace(g, field);
  const int n = g.order();

  // embed the class-basis subspaces into L(G) = F^n
  auto indicators = class_indicator_matrix<PrimeField>(rr.partition, field);
  auto lgyr_amb = Subspace<PrimeField>::from_rows(indicators);
  auto u_amb = Subspace<PrimeField>::from_rows(sig.u.basis() * indicators);
  auto fix_amb = Subspace<PrimeField>::from_rows(fix.basis() * indicators);
  auto full = Subspace<PrimeField>::full(field, n);

  ChainReport rep;
  rep.p = p;
  rep.dim_fix = fix_amb.dim();
  rep.dim_u = u_amb.dim();
  rep.dim_lgyr = lgyr_amb.dim();
  rep.dim_lg = n;
  rep.is_group = g.is_group();
  rep.inclusions_hold = fix_amb.dim() > 0 && u_amb.contains_subspace(fix_amb) &&
                        lgyr_amb.contains_subspace(u_amb) && full.contains_subspace(lgyr_amb);
  rep.strict_zero_fix = rep.dim_fix > 0;
  rep.strict_fix_u = rep.dim_u > rep.dim_fix;
  rep.strict_u_lgyr = rep.dim_lgyr > rep.dim_u;
  rep.strict_lgyr_lg = rep.dim_lg > rep.dim_lgyr;
  rep.remarks_hold = rep.strict_zero_fix && (rep.strict_lgyr_lg == !rep.is_group);

  rep.rendered = "{0} < Fix";
  rep.rendered += rep.strict_fix_u ? " < U" : " = U";
  rep.rendered += rep.strict_u_lgyr ? " < Lgyr" : " = Lgyr";
  rep.rendered += rep.strict_lgyr_lg ? " < L(G)" : " = L(G)";
  return rep;
}

struct ConverseCandidate {
  std::vector<std::uint64_t> coords; // class-basis coordinates in GF(p)
  enum class Status { not_invariant, not_direct_sum, invariant_complement } status;
  int witness = -1; // element a with lambda(a) b outside span{b}, when not invariant
};

struct ConverseReport {
  std::uint64_t p = 0;
  bool hypothesis_holds = false; // exists f in L^gyr with sigma(f) != 0
  int dim_lgyr = 0;
  int dim_u = 0;
  std::uint64_t candidates_checked = 0;
  std::vector<ConverseCandidate> candidates;
  std::optional<std::vector<std::uint64_t>> complement_found; // must stay empty by the theorem
  std::vector<std::uint64_t> class_sizes_mod_p;
  std::string narrative;
};

/// Certifies the converse of Maschke's theorem on the left regular
/// representation over GF(p), p | |G|. When some class size is nonzero mod p
/// (equivalently, sigma does not vanish on L^gyr), U = L^gyr cap ker sigma
/// has codimension 1, so any invariant complement would be an invariant line
/// outside U; the certifier enumerates every projective point outside U and
/// logs why each fails. Otherwise L^gyr lies inside ker sigma, the theorem's
/// hypothesis fails, and U = L^gyr trivially has complement {0}.
inline ConverseReport converse_maschke(const GyroTable& g, std::uint64_t p,
                                       std::uint64_t point_bound = default_point_bound) {
  if (!is_prime(p)) fail(errc::invalid_field, "not a prime: " + std::to_string(p));
  if (g.order() % static_cast<int>(p) != 0)
    fail(errc::prime_does_not_divide_order,
         std::to_string(p) + " does not divide the order " + std::to_string(g.order()));
  PrimeField field(p);
  auto rr = regular_representation(g, field);
  auto sig = sigma_analysis(g, field);
  const int k = rr.partition.count();
  const int n = g.order();

  ConverseReport rep;
  rep.p = p;
  rep.dim_lgyr = k;
  rep.dim_u = sig.dim_u;
  rep.class_sizes_mod_p = sig.class_sizes_mod_char;
  rep.hypothesis_holds = !sig.lgyr_subset_ker_sigma;

  if (!rep.hypothesis_holds) {
    rep.narrative = "all class sizes are 0 mod " + std::to_string(p) +
                    ": L^gyr is contained in ker sigma, the hypothesis fails, and U = L^gyr has complement {0}";
    return rep;
  }

  rep.narrative = "some f in L^gyr has sigma(f) != 0: dim U = dim L^gyr - 1; any invariant complement is an "
                  "invariant line outside U; scanning all projective points outside U";
  detail::enumerate_candidate_vectors(field, k, point_bound, [&](const std::vector<std::uint64_t>& b) {
    if (sig.u.contains(b)) return false;
    ++rep.candidates_checked;
    ConverseCandidate cand;
    cand.coords = b;
    cand.status = ConverseCandidate::Status::invariant_complement;
    auto line = Subspace<PrimeField>::from_vectors(field, k, {b});
    for (int a = 0; a < n && cand.status == ConverseCandidate::Status::invariant_complement; ++a) {
      if (!line.contains(rr.rep.mat(a).apply(b))) {
        cand.status = ConverseCandidate::Status::not_invariant;
        cand.witness = a;
      }
    }
    if (cand.status == ConverseCandidate::Status::invariant_complement) {
      auto u_plus = sum(sig.u, line);
      if (!(u_plus.dim() == k && intersect(sig.u, line).dim() == 0))
        cand.status = ConverseCandidate::Status::not_direct_sum;
    }
    if (cand.status == ConverseCandidate::Status::invariant_complement) rep.complement_found = b;
    rep.candidates.push_back(std::move(cand));
    return false; // full scan for a complete certificate
  });
  return rep;
}

} // namespace gyrorep
