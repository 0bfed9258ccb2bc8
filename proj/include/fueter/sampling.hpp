#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "fueter/paravector.hpp"

namespace fueter {

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of case `index` in a suite run with seed `seed`.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic random points. Rational coordinates have numerators in
/// [-16, 16] and denominators in [1, 16].
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  Rational small_rational();
  Paravector<Rational> rational_paravector(unsigned n);
  /// (s, x) with Q_{c,s}(x) != 0, i.e. s not on [x].
  std::pair<Paravector<Rational>, Paravector<Rational>> kernel_point(unsigned n);
  /// Uniform in the ball of the given radius around center (on the real axis).
  Paravector<double> ball_point(unsigned n, double center, double radius);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fueter
