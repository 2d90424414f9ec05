#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "gyrorep/fields.hpp"
#include "gyrorep/representation.hpp"

using namespace gyrorep;

namespace {

template <class F>
Matrix<F> mat(F f, std::vector<std::vector<long>> rows) {
  Matrix<F> m(f, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = f.from_int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

template <class F>
Subspace<F> span(F f, std::vector<std::vector<long>> rows, int ambient) {
  std::vector<std::vector<typename F::Elem>> vecs;
  for (const auto& r : rows) {
    std::vector<typename F::Elem> v;
    for (long x : r) v.push_back(f.from_int(x));
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::from_vectors(f, ambient, vecs);
}

template <class F>
std::vector<typename F::Elem> vec(F f, std::vector<long> xs) {
  std::vector<typename F::Elem> v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

/// Left regular permutation representation of a group builtin: phi(a) e_x = e_{a+x}.
template <class F>
Representation<F> group_permutation_rep(const GyroTable& g, F f) {
  std::vector<Matrix<F>> mats;
  for (int a = 0; a < g.order(); ++a) {
    Matrix<F> m(f, g.order(), g.order());
    for (int x = 0; x < g.order(); ++x) m(g.add(a, x), x) = f.one();
    mats.push_back(std::move(m));
  }
  return Representation<F>(g, f, std::move(mats));
}

/// The exact contract of the averaging projection.
template <class F>
void check_projection_contract(const Representation<F>& r, const Subspace<F>& u, const Matrix<F>& pi) {
  CHECK(pi * pi == pi);
  for (int i = 0; i < u.dim(); ++i) {
    auto b = u.basis_vector(i);
    CHECK(pi.apply(b) == b);
  }
  CHECK(Subspace<F>::from_rows(pi.transpose()) == u); // image(pi) = U
  for (int a = 0; a < r.gyro().order(); ++a) CHECK(pi * r.mat(a) == r.mat(a) * pi);
}

template <class F>
Matrix<F> random_invertible(F f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(0, static_cast<long>(f.characteristic()) - 1);
  for (;;) {
    Matrix<F> m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = f.from_int(d(rng));
    if (inverse(m).has_value()) return m;
  }
}

template <class F>
Representation<F> conjugate(const Representation<F>& r, const Matrix<F>& t) {
  auto tinv = inverse(t);
  REQUIRE(tinv.has_value());
  std::vector<Matrix<F>> mats;
  for (int a = 0; a < r.gyro().order(); ++a) mats.push_back(t * r.mat(a) * *tinv);
  return Representation<F>(r.gyro(), r.field(), std::move(mats));
}

} // namespace

TEST_CASE("trivial representation verifies for any gyrogroup and degree") {
  RationalField q;
  for (const char* name : {"g8", "klein", "cyclic:5"})
    for (int d : {1, 2, 3}) {
      auto r = Representation<RationalField>::trivial(builtin_gyrogroup(name), q, d);
      CHECK(verify_representation(r).ok);
    }
}

TEST_CASE("mutated representation is reported") {
  RationalField q;
  auto z2 = builtin_gyrogroup("cyclic:2");
  auto r = group_permutation_rep(z2, q);
  REQUIRE(verify_representation(r).ok);

  auto bad_mat = mat(q, {{1, 1}, {1, 0}});
  auto bad = Representation<RationalField>(z2, q, {Matrix<RationalField>::identity(q, 2), bad_mat});
  auto rep = verify_representation(bad);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.message.empty());

  auto singular = Representation<RationalField>(z2, q, {Matrix<RationalField>::identity(q, 2), mat(q, {{1, 1}, {1, 1}})});
  auto rep2 = verify_representation(singular);
  CHECK_FALSE(rep2.ok);
}

TEST_CASE("identity matrix requirement at the identity element") {
  RationalField q;
  auto z2 = builtin_gyrogroup("cyclic:2");
  auto swap = mat(q, {{0, 1}, {1, 0}});
  auto bad = Representation<RationalField>(z2, q, {swap, swap});
  CHECK_FALSE(verify_representation(bad).ok);
}

TEST_CASE("invariance of subspaces under the Z2 swap representation") {
  RationalField q;
  auto r = group_permutation_rep(builtin_gyrogroup("cyclic:2"), q);
  CHECK(is_invariant(r, span(q, {{1, 1}}, 2)));
  CHECK_FALSE(is_invariant(r, span(q, {{1, 0}}, 2)));
  CHECK(is_invariant(r, Subspace<RationalField>::zero(q, 2)));
  CHECK(is_invariant(r, Subspace<RationalField>::full(q, 2)));
}

TEST_CASE("averaging projection for Z2 over Q: hand-computed matrix") {
  RationalField q;
  auto r = group_permutation_rep(builtin_gyrogroup("cyclic:2"), q);
  auto u = span(q, {{1, 1}}, 2);
  auto pi = averaging_projection(r, u);
  Matrix<RationalField> expect(q, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) expect(i, j) = Rational(1, 2);
  CHECK(pi == expect);
  check_projection_contract(r, u, pi);
}

TEST_CASE("averaging projection edge cases: full space and zero space") {
  RationalField q;
  auto r = group_permutation_rep(builtin_gyrogroup("klein"), q);
  auto full = Subspace<RationalField>::full(q, 4);
  CHECK(averaging_projection(r, full) == Matrix<RationalField>::identity(q, 4));
  auto zero = Subspace<RationalField>::zero(q, 4);
  CHECK(averaging_projection(r, zero).is_zero());
}

TEST_CASE("averaging projection guards") {
  auto z2 = builtin_gyrogroup("cyclic:2");
  PrimeField f2(2);
  auto r2 = group_permutation_rep(z2, f2);
  try {
    averaging_projection(r2, span(f2, {{1, 1}}, 2));
    FAIL("characteristic 2 divides |Z2|");
  } catch (const error& e) {
    CHECK(e.code() == errc::characteristic_divides_order);
  }
  RationalField q;
  auto rq = group_permutation_rep(z2, q);
  try {
    averaging_projection(rq, span(q, {{1, 0}}, 2));
    FAIL("span{(1,0)} is not invariant");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_invariant);
  }
}

TEST_CASE("maschke complement for Z2 over Q") {
  RationalField q;
  auto r = group_permutation_rep(builtin_gyrogroup("cyclic:2"), q);
  auto u = span(q, {{1, 1}}, 2);
  auto w = maschke_complement(r, u);
  CHECK(w == span(q, {{1, -1}}, 2));
  CHECK(is_invariant(r, w));
  CHECK(is_direct_sum(u, w));
  CHECK(maschke_complement(r, Subspace<RationalField>::full(q, 2)).dim() == 0);
}

TEST_CASE("spin examples") {
  RationalField q;
  auto r = group_permutation_rep(builtin_gyrogroup("cyclic:2"), q);
  CHECK(spin(r, vec(q, {0, 0})).dim() == 0);
  CHECK(spin(r, vec(q, {1, 0})) == Subspace<RationalField>::full(q, 2));
  CHECK(spin(r, vec(q, {1, 1})) == span(q, {{1, 1}}, 2));
  auto s = spin(r, vec(q, {2, 0}));
  CHECK(is_invariant(r, s));
  CHECK(s.contains(vec(q, {2, 0})));
}

TEST_CASE("find_proper_invariant: degree-1 has none; Z2 over GF(3) finds the diagonal") {
  PrimeField f3(3);
  auto z2 = builtin_gyrogroup("cyclic:2");
  auto r1 = Representation<PrimeField>::trivial(z2, f3, 1);
  CHECK(find_proper_invariant(r1).verdict == SearchVerdict::none_exists);

  auto r = group_permutation_rep(z2, f3);
  auto res = find_proper_invariant(r);
  REQUIRE(res.verdict == SearchVerdict::found);
  CHECK(*res.found == span(f3, {{1, 1}}, 2));
}

TEST_CASE("find_proper_invariant respects the point bound") {
  PrimeField f3(3);
  auto r = group_permutation_rep(builtin_gyrogroup("cyclic:2"), f3);
  try {
    find_proper_invariant(r, 4); // 3^2 = 9 > 4
    FAIL("expected search_space_too_large");
  } catch (const error& e) {
    CHECK(e.code() == errc::search_space_too_large);
  }
}

TEST_CASE("irreducible over GF(p): the 2-dim rotation rep of Z4 over GF(3)") {
  // phi(1) = [[0,-1],[1,0]]: x^2 + 1 is irreducible over GF(3), so no
  // invariant line exists and the projective scan certifies it.
  PrimeField f3(3);
  auto z4 = builtin_gyrogroup("cyclic:4");
  auto rot = mat(f3, {{0, 2}, {1, 0}});
  std::vector<Matrix<PrimeField>> mats{Matrix<PrimeField>::identity(f3, 2), rot, rot * rot, rot * rot * rot};
  Representation<PrimeField> r(z4, f3, std::move(mats));
  REQUIRE(verify_representation(r).ok);
  auto res = find_proper_invariant(r);
  CHECK(res.verdict == SearchVerdict::none_exists);
  CHECK(res.vectors_tried == 4); // projective points of GF(3)^2

  auto dec = decompose(r);
  REQUIRE(dec.summands.size() == 1);
  CHECK(dec.summands[0].irreducible == SearchVerdict::none_exists);
  CHECK(dec.direct_sum_verified);
}

TEST_CASE("over Q an exhausted scan reports unknown, never a certificate") {
  // the rotation rep of Z4 over Q: eigenvalues are +-i, so no rational
  // invariant line exists; the scan cannot prove that and must say unknown
  RationalField q;
  auto z4 = builtin_gyrogroup("cyclic:4");
  auto rot = mat(q, {{0, -1}, {1, 0}});
  std::vector<Matrix<RationalField>> mats{Matrix<RationalField>::identity(q, 2), rot, rot * rot, rot * rot * rot};
  Representation<RationalField> r(z4, q, std::move(mats));
  REQUIRE(verify_representation(r).ok);
  auto res = find_proper_invariant(r);
  CHECK(res.verdict == SearchVerdict::unknown);
  auto dec = decompose(r);
  REQUIRE(dec.summands.size() == 1);
  CHECK(dec.summands[0].irreducible == SearchVerdict::unknown);
  CHECK(dec.direct_sum_verified);
}

TEST_CASE("decompose Z2 over Q: the two sign lines, in deterministic order") {
  RationalField q;
  auto r = group_permutation_rep(builtin_gyrogroup("cyclic:2"), q);
  auto dec = decompose(r);
  REQUIRE(dec.summands.size() == 2);
  CHECK(dec.summands[0].space == span(q, {{1, 1}}, 2));
  CHECK(dec.summands[1].space == span(q, {{1, -1}}, 2));
  CHECK(dec.direct_sum_verified);
  for (const auto& s : dec.summands) {
    CHECK(s.space.dim() == 1);
    CHECK(s.irreducible == SearchVerdict::none_exists); // degree 1 is trivially irreducible
    CHECK(verify_representation(s.rep).ok);
  }
}

TEST_CASE("decompose the Klein regular permutation rep over GF(3) and over Q") {
  auto klein = builtin_gyrogroup("klein");
  PrimeField f3(3);
  auto dec3 = decompose(group_permutation_rep(klein, f3));
  CHECK(dec3.summands.size() == 4);
  for (const auto& s : dec3.summands) {
    CHECK(s.space.dim() == 1);
    CHECK(s.irreducible == SearchVerdict::none_exists);
  }
  CHECK(dec3.direct_sum_verified);

  RationalField q;
  auto decq = decompose(group_permutation_rep(klein, q));
  CHECK(decq.summands.size() == 4);
  CHECK(decq.direct_sum_verified);
}

TEST_CASE("decompose refuses a dividing characteristic") {
  PrimeField f2(2);
  auto r = group_permutation_rep(builtin_gyrogroup("klein"), f2);
  try {
    decompose(r);
    FAIL("characteristic 2 divides 4");
  } catch (const error& e) {
    CHECK(e.code() == errc::characteristic_divides_order);
  }
}

TEST_CASE("restrict expresses the action in the subspace basis") {
  RationalField q;
  auto r = group_permutation_rep(builtin_gyrogroup("cyclic:2"), q);
  auto plus = restrict_to(r, span(q, {{1, 1}}, 2));
  CHECK(plus.degree() == 1);
  CHECK(plus.mat(1) == mat(q, {{1}}));
  auto minus = restrict_to(r, span(q, {{1, -1}}, 2));
  CHECK(minus.mat(1) == mat(q, {{-1}}));
  CHECK(verify_representation(plus).ok);
  CHECK(verify_representation(minus).ok);

  auto full = restrict_to(r, Subspace<RationalField>::full(q, 2));
  CHECK(verify_representation(full).ok);
  for (int a = 0; a < 2; ++a) CHECK(full.mat(a) == r.mat(a)); // RREF basis of the full space is standard

  CHECK_THROWS_AS(restrict_to(r, span(q, {{1, 0}}, 2)), error);
}

TEST_CASE("intertwiner space of Z2 with itself has dimension 2 and contains I") {
  RationalField q;
  auto r = group_permutation_rep(builtin_gyrogroup("cyclic:2"), q);
  auto space = intertwiner_space(r, r);
  CHECK(space.dim() == 2);
  CHECK(space.contains(vec(q, {1, 0, 0, 1}))); // identity, row-major
  CHECK(space.contains(vec(q, {0, 1, 1, 0}))); // the swap
}

TEST_CASE("trivial vs sign rep of Z2: zero intertwiner space, no equivalence") {
  RationalField q;
  auto z2 = builtin_gyrogroup("cyclic:2");
  auto triv = Representation<RationalField>::trivial(z2, q, 1);
  Representation<RationalField> sign(z2, q, {mat(q, {{1}}), mat(q, {{-1}})});
  auto space = intertwiner_space(triv, sign);
  CHECK(space.dim() == 0);
  CHECK(find_equivalence(triv, sign).verdict == SearchVerdict::none_exists);
  CHECK(find_equivalence(triv, triv).verdict == SearchVerdict::found);
}

TEST_CASE("equivalence transport: conjugation preserves summand dimensions and verdicts") {
  PrimeField f3(3);
  auto klein = builtin_gyrogroup("klein");
  auto r = group_permutation_rep(klein, f3);
  auto base = decompose(r);
  std::vector<int> base_dims;
  for (const auto& s : base.summands) base_dims.push_back(s.space.dim());
  std::sort(base_dims.begin(), base_dims.end());

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    auto t = random_invertible(f3, 4, rng);
    auto conj = conjugate(r, t);
    REQUIRE(verify_representation(conj).ok);
    CHECK(find_equivalence(r, conj).verdict == SearchVerdict::found);

    auto dec = decompose(conj);
    std::vector<int> dims;
    for (const auto& s : dec.summands) dims.push_back(s.space.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == base_dims);
    for (const auto& s : dec.summands) CHECK(s.irreducible == SearchVerdict::none_exists);

    // the image of an invariant subspace under the equivalence is invariant
    for (const auto& s : base.summands) {
      auto mapped = Subspace<PrimeField>::from_rows(s.space.basis() * t.transpose());
      CHECK(is_invariant(conj, mapped));
    }
  }
}

TEST_CASE("projection contract holds for every spin-generated invariant subspace") {
  RationalField q;
  auto r = group_permutation_rep(builtin_gyrogroup("klein"), q);
  auto seen = spin_generated_subspaces(r);
  CHECK(seen.size() > 4);
  for (const auto& u : seen) {
    auto pi = averaging_projection(r, u);
    check_projection_contract(r, u, pi);
    if (u.dim() < 4) {
      auto w = maschke_complement(r, u);
      CHECK(is_invariant(r, w));
      CHECK(is_direct_sum(u, w));
    }
  }
}

TEST_CASE("representation file round trip") {
  PrimeField f3(3);
  auto klein = builtin_gyrogroup("klein");
  auto r = group_permutation_rep(klein, f3);
  std::ostringstream out;
  emit_representation(r, out);
  std::istringstream in(out.str());
  auto back = parse_representation(in, klein, f3);
  CHECK(back.degree() == r.degree());
  for (int a = 0; a < klein.order(); ++a) CHECK(back.mat(a) == r.mat(a));

  std::istringstream bad("2\n1 0\n0 1\n");
  CHECK_THROWS_AS(parse_representation(bad, klein, f3), error);
}

TEST_CASE("gyrogroup and field mismatches are rejected") {
  PrimeField f3(3);
  auto a = group_permutation_rep(builtin_gyrogroup("cyclic:2"), f3);
  auto b = group_permutation_rep(builtin_gyrogroup("klein"), f3);
  CHECK_THROWS_AS(intertwiner_space(a, b), error);
  auto c = group_permutation_rep(builtin_gyrogroup("cyclic:2"), PrimeField(5));
  CHECK_THROWS_AS(intertwiner_space(a, c), error);
}
