#pragma once

#include <cmath>
#include <concepts>
#include <cstdio>
#include <string>

#include "fueter/error.hpp"
#include "fueter/rational.hpp"

namespace fueter {

/// Absolute tolerance used for zero tests over floating point coefficients.
inline constexpr double kDefaultTolerance = 1e-12;

/// Coefficient ring contract. Specializations supply the ring constants,
/// the integer embedding, zero tests and (partial) inversion. Tolerances are
/// ignored by exact rings.
template <class R>
struct RingTraits;

template <>
struct RingTraits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_integer(const BigInt& v) { return v.get_d(); }
  static double from_rational(const Rational& v) { return v.to_double(); }
  static bool is_exact_zero(double v) { return v == 0.0; }
  static bool is_zero(double v, double tol) { return std::fabs(v) <= tol; }
  static bool negligible(double v, double scale, double tol) {
    return std::fabs(v) <= tol * std::fabs(scale);
  }
  static double reciprocal(double v, double tol) {
    if (is_zero(v, tol)) throw ZeroNorm("reciprocal of (near) zero float");
    return 1.0 / v;
  }
  static void add_product(double& acc, double a, double b) { acc += a * b; }
  static double magnitude(double v) { return std::fabs(v); }
  static std::string to_string(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
};

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_integer(const BigInt& v) { return Rational(v); }
  static Rational from_rational(const Rational& v) { return v; }
  static bool is_exact_zero(const Rational& v) { return v.is_zero(); }
  static bool is_zero(const Rational& v, double /*tol*/) { return v.is_zero(); }
  static bool negligible(const Rational& v, const Rational& /*scale*/, double /*tol*/) {
    return v.is_zero();
  }
  static Rational reciprocal(const Rational& v, double /*tol*/) {
    if (v.is_zero()) throw ZeroNorm("reciprocal of zero rational");
    return Rational(1) / v;
  }
  static void add_product(Rational& acc, const Rational& a, const Rational& b) {
    acc.add_product(a, b);
  }
  static double magnitude(const Rational& v) { return std::fabs(v.to_double()); }
  static std::string to_string(const Rational& v) { return v.to_string(); }
};

template <class R>
concept CoefficientRing = requires(R a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { RingTraits<R>::zero() } -> std::convertible_to<R>;
  { RingTraits<R>::one() } -> std::convertible_to<R>;
  { RingTraits<R>::from_integer(BigInt{}) } -> std::convertible_to<R>;
  { RingTraits<R>::is_exact_zero(b) } -> std::same_as<bool>;
};

}  // namespace fueter
