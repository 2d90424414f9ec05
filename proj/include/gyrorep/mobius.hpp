#pragma once

// Floating-point sampled check of the Mobius gyrogroup on the open unit
// disk: a (+) b = (a+b)/(1+conj(a)b), gyr[a,b] z = ((1+a conj(b))/(1+conj(a)b)) z.
// This is the one numeric module; everything else in the library is exact.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>

#include "gyrorep/errors.hpp"

namespace gyrorep {

/// Point of the open unit disk; construction rejects |z| >= 1.
struct MobiusPoint {
  double re, im;
  MobiusPoint(double re_, double im_) : re(re_), im(im_) {
    if (re * re + im * im >= 1.0) fail(errc::point_outside_disk, "point is not inside the unit disk");
  }
  std::complex<double> value() const { return {re, im}; }
};

inline std::complex<double> mobius_add(std::complex<double> a, std::complex<double> b) {
  return (a + b) / (1.0 + std::conj(a) * b);
}

/// The unimodular factor of the gyration: gyr[a,b] z = factor * z.
inline std::complex<double> mobius_gyr_factor(std::complex<double> a, std::complex<double> b) {
  return (1.0 + a * std::conj(b)) / (1.0 + std::conj(a) * b);
}

struct MobiusReport {
  int samples = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  double max_gyroassoc_residual = 0.0;
  double max_left_loop_residual = 0.0;
  double max_unimodular_residual = 0.0;
  bool pass = false;
};

/// Draws sample triples deterministically from the seed (rejection sampling,
/// modulus capped at 0.95 to stay away from the disk boundary) and reports the
/// worst residual of the left gyroassociative law, the left loop property and
/// unimodularity of the gyration factor.
inline MobiusReport mobius_sample_check(int samples, double tol, std::uint64_t seed) {
  if (samples < 1) fail(errc::invalid_tolerance, "sample count must be >= 1");
  if (!(tol > 0.0)) fail(errc::invalid_tolerance, "tolerance must be positive");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto draw = [&]() -> std::complex<double> {
    for (;;) {
      double re = dist(rng), im = dist(rng);
      if (re * re + im * im <= 0.95 * 0.95) return MobiusPoint(re, im).value();
    }
  };

  MobiusReport rep;
  rep.samples = samples;
  rep.tol = tol;
  rep.seed = seed;
  for (int i = 0; i < samples; ++i) {
    auto a = draw(), b = draw(), c = draw();
    auto lhs = mobius_add(a, mobius_add(b, c));
    auto rhs = mobius_add(mobius_add(a, b), mobius_gyr_factor(a, b) * c);
    rep.max_gyroassoc_residual = std::max(rep.max_gyroassoc_residual, std::abs(lhs - rhs));
    auto loop = std::abs(mobius_gyr_factor(mobius_add(a, b), b) - mobius_gyr_factor(a, b));
    rep.max_left_loop_residual = std::max(rep.max_left_loop_residual, loop);
    auto uni = std::abs(std::abs(mobius_gyr_factor(a, b)) - 1.0);
    rep.max_unimodular_residual = std::max(rep.max_unimodular_residual, uni);
  }
  rep.pass = rep.max_gyroassoc_residual < tol && rep.max_left_loop_residual < tol &&
             rep.max_unimodular_residual < tol;
  return rep;
}

} // namespace gyrorep
