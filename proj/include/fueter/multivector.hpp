#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "fueter/error.hpp"
#include "fueter/ring.hpp"

namespace fueter {

using Blade = std::uint32_t;

inline constexpr unsigned kMaxCliffordDim = 15;

/// Sign of e_A e_B = sign * e_{A xor B} for blades given as bitmasks
/// (bit i <=> e_{i+1}). Counts the transpositions needed to sort the
/// concatenated generator list and one factor -1 per repeated generator.
constexpr int blade_product_sign(Blade a, Blade b) {
  unsigned swaps = 0;
  for (Blade x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  swaps += std::popcount(a & b);
  return (swaps & 1U) ? -1 : 1;
}

constexpr unsigned blade_grade(Blade a) { return std::popcount(a); }

/// Dense element of the real Clifford algebra R_n with e_i e_j + e_j e_i = -2 delta_ij.
template <class R>
class Multivector {
 public:
  Multivector() : Multivector(1) {}
  explicit Multivector(unsigned n) : n_(n) {
    if (n < 1 || n > kMaxCliffordDim) throw InvalidParams("Clifford dimension out of range");
    coeffs_.assign(std::size_t{1} << n, RingTraits<R>::zero());
  }

  static Multivector scalar(unsigned n, R value) {
    Multivector m(n);
    m.coeffs_[0] = std::move(value);
    return m;
  }
  static Multivector blade(unsigned n, Blade b, R value = RingTraits<R>::one()) {
    Multivector m(n);
    m.coeffs_.at(b) = std::move(value);
    return m;
  }
  /// The generator e_i, 1 <= i <= n.
  static Multivector generator(unsigned n, unsigned i) {
    if (i < 1 || i > n) throw InvalidParams("generator index out of range");
    return blade(n, Blade{1} << (i - 1));
  }

  unsigned dim() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  const R& operator[](Blade b) const { return coeffs_[b]; }
  R& operator[](Blade b) { return coeffs_[b]; }
  const R& scalar_part() const { return coeffs_[0]; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  bool is_exact_zero() const {
    for (const R& c : coeffs_)
      if (!RingTraits<R>::is_exact_zero(c)) return false;
    return true;
  }
  bool is_zero(double tol = kDefaultTolerance) const {
    for (const R& c : coeffs_)
      if (!RingTraits<R>::is_zero(c, tol)) return false;
    return true;
  }
  /// Highest grade carrying a nonzero coefficient (0 for the zero element).
  unsigned max_grade() const {
    unsigned g = 0;
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (!RingTraits<R>::is_exact_zero(coeffs_[b])) g = std::max(g, blade_grade(b));
    return g;
  }

  template <class F>
  auto map(F&& f) const {
    using S = decltype(f(coeffs_[0]));
    Multivector<S> out(n_);
    for (Blade b = 0; b < coeffs_.size(); ++b) out[b] = f(coeffs_[b]);
    return out;
  }

  Multivector& operator+=(const Multivector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (R& c : a.coeffs_) c = -c;
    return a;
  }

  /// Scalar (ring) multiplication; ring elements are central.
  friend Multivector operator*(const R& k, Multivector a) {
    for (R& c : a.coeffs_) c = k * c;
    return a;
  }
  friend Multivector operator*(Multivector a, const R& k) {
    for (R& c : a.coeffs_) c = c * k;
    return a;
  }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_dim(b);
    Multivector out(a.n_);
    const auto nz_a = a.nonzero_blades();
    const auto nz_b = b.nonzero_blades();
    for (Blade i : nz_a) {
      for (Blade j : nz_b) {
        R term = a.coeffs_[i] * b.coeffs_[j];
        if (blade_product_sign(i, j) < 0)
          out.coeffs_[i ^ j] -= term;
        else
          out.coeffs_[i ^ j] += term;
      }
    }
    return out;
  }
  Multivector& operator*=(const Multivector& o) { return *this = *this * o; }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  std::vector<Blade> nonzero_blades() const {
    std::vector<Blade> out;
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (!RingTraits<R>::is_exact_zero(coeffs_[b])) out.push_back(b);
    return out;
  }

 private:
  void check_dim(const Multivector& o) const {
    if (o.n_ != n_) throw DimensionMismatch("multivector dimension mismatch");
  }

  unsigned n_;
  std::vector<R> coeffs_;
};

/// Euclidean norm of the coefficient vector, as a double.
template <class R>
double norm(const Multivector<R>& m) {
  double acc = 0.0;
  for (const R& c : m.coefficients()) {
    const double v = RingTraits<R>::magnitude(c);
    acc += v * v;
  }
  return std::sqrt(acc);
}

/// Exact squared norm (sum of squared coefficients).
inline Rational norm_sq_exact(const Multivector<Rational>& m) {
  Rational acc;
  for (const Rational& c : m.coefficients()) acc.add_product(c, c);
  return acc;
}

}  // namespace fueter
