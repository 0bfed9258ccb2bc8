#include "fueter/sampling.hpp"

#include <cmath>

#include "fueter/kernels.hpp"

namespace fueter {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed + index); }

long PointSampler::integer(long lo, long hi) {
  if (hi < lo) throw InvalidParams("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

double PointSampler::uniform(double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Rational PointSampler::small_rational() {
  const long num = integer(-16, 16);
  const long den = integer(1, 16);
  return Rational(num, den);
}

Paravector<Rational> PointSampler::rational_paravector(unsigned n) {
  std::vector<Rational> c;
  c.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) c.push_back(small_rational());
  return Paravector<Rational>::from_components(c);
}

std::pair<Paravector<Rational>, Paravector<Rational>> PointSampler::kernel_point(unsigned n) {
  for (;;) {
    Paravector<Rational> s = rational_paravector(n);
    Paravector<Rational> x = rational_paravector(n);
    if (!norm_sq(pseudo_cauchy_q(s, x)).is_zero()) return {std::move(s), std::move(x)};
  }
}

Paravector<double> PointSampler::ball_point(unsigned n, double center, double radius) {
  for (;;) {
    std::vector<double> c(n + 1);
    double r2 = 0.0;
    for (double& v : c) {
      v = uniform(-radius, radius);
      r2 += v * v;
    }
    if (r2 < radius * radius) {
      c[0] += center;
      return Paravector<double>::from_components(c);
    }
  }
}

}  // namespace fueter
