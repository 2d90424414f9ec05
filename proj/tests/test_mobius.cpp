#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gyrorep/mobius.hpp"

using namespace gyrorep;

TEST_CASE("points outside the disk are rejected") {
  CHECK_THROWS_AS(MobiusPoint(1.0, 0.0), error);
  CHECK_THROWS_AS(MobiusPoint(0.8, 0.7), error);
  CHECK_NOTHROW(MobiusPoint(0.0, 0.0));
  CHECK_NOTHROW(MobiusPoint(0.7, 0.7));
}

TEST_CASE("zero is the identity of Mobius addition, exactly") {
  std::complex<double> b(0.31, -0.44);
  CHECK(mobius_add({0.0, 0.0}, b) == b);
}

TEST_CASE("gyr[a,a] is the identity rotation, exactly") {
  std::complex<double> a(0.5, -0.2);
  CHECK(mobius_gyr_factor(a, a) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("sampled residuals stay below 1e-12 at seed 42") {
  auto rep = mobius_sample_check(10000, 1e-12, 42);
  CHECK(rep.pass);
  CHECK(rep.max_gyroassoc_residual < 1e-12);
  CHECK(rep.max_left_loop_residual < 1e-12);
  CHECK(rep.max_unimodular_residual < 1e-12);
}

TEST_CASE("sampling is deterministic in the seed") {
  auto a = mobius_sample_check(500, 1e-12, 7);
  auto b = mobius_sample_check(500, 1e-12, 7);
  CHECK(a.max_gyroassoc_residual == b.max_gyroassoc_residual);
  CHECK(a.max_left_loop_residual == b.max_left_loop_residual);
  CHECK(a.max_unimodular_residual == b.max_unimodular_residual);
  auto c = mobius_sample_check(500, 1e-12, 8);
  CHECK(a.max_gyroassoc_residual != c.max_gyroassoc_residual);
}

TEST_CASE("bad parameters are rejected") {
  CHECK_THROWS_AS(mobius_sample_check(0, 1e-12, 1), error);
  CHECK_THROWS_AS(mobius_sample_check(10, 0.0, 1), error);
  CHECK_THROWS_AS(mobius_sample_check(10, -1.0, 1), error);
}
