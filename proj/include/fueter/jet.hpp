#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "fueter/error.hpp"
#include "fueter/ring.hpp"

namespace fueter {

using MultiIndex = std::vector<unsigned>;

/// Monomial table shared by all jets with the same (num_vars, order).
///
/// Monomials are enumerated in graded lexicographic order, so every degree
/// occupies a contiguous index range and the monomials of degree <= d form a
/// prefix. For each monomial p the table stores, for every q in the prefix of
/// degree <= order - deg(p), the index of the product monomial p*q.
class JetLayout {
 public:
  static constexpr std::size_t kMaxVars = 16;
  static constexpr unsigned kMaxOrder = 15;

  /// Returns the (cached) layout; construction is thread safe.
  static std::shared_ptr<const JetLayout> get(std::size_t num_vars, unsigned order);

  JetLayout(std::size_t num_vars, unsigned order);

  std::size_t num_vars() const { return num_vars_; }
  unsigned order() const { return order_; }
  std::size_t size() const { return degree_of_.size(); }

  unsigned degree(std::size_t idx) const { return degree_of_[idx]; }
  /// One past the last index of degree <= d.
  std::size_t prefix_end(unsigned d) const { return degree_end_[d]; }
  std::size_t degree_begin(unsigned d) const { return d == 0 ? 0 : degree_end_[d - 1]; }

  MultiIndex exponents(std::size_t idx) const;
  /// Throws OrderExceeded when |alpha| > order.
  std::size_t index_of(std::span<const unsigned> alpha) const;
  std::size_t variable_index(std::size_t var) const;

  /// Product indices for monomial p, indexed by the partner monomial q.
  std::span<const std::uint32_t> products(std::size_t p) const {
    return {products_.data() + offsets_[p], offsets_[p + 1] - offsets_[p]};
  }

  /// alpha! for the monomial at idx.
  const BigInt& factorial_weight(std::size_t idx) const { return weight_[idx]; }

 private:
  std::uint64_t pack(std::span<const unsigned> alpha) const;
  std::size_t lookup(std::uint64_t key) const;

  std::size_t num_vars_;
  unsigned order_;
  std::vector<std::uint64_t> keys_;
  std::vector<unsigned> degree_of_;
  std::vector<std::size_t> degree_end_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> products_;
  std::vector<BigInt> weight_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> sorted_keys_;
};

/// Truncated multivariate Taylor expansion of a scalar function.
///
/// Coefficients are Taylor coefficients d^alpha f / alpha!. A jet without a
/// layout is a constant and broadcasts against any layout, which keeps
/// parameters such as s cheap inside jet-valued Clifford arithmetic.
template <class R>
class Jet {
 public:
  Jet() : coeffs_{RingTraits<R>::zero()} {}
  Jet(R value) : coeffs_{std::move(value)} {}  // NOLINT(google-explicit-constructor)
  Jet(int value) : coeffs_{R(value)} {}         // NOLINT(google-explicit-constructor)

  /// Jet of the coordinate function t_var + value.
  static Jet seed_coordinate(std::shared_ptr<const JetLayout> layout, std::size_t var,
                             R value) {
    if (var >= layout->num_vars()) throw InvalidParams("jet seed variable out of range");
    Jet j = dense(std::move(layout));
    j.coeffs_[0] = std::move(value);
    if (j.layout_->order() > 0) j.coeffs_[j.layout_->variable_index(var)] = RingTraits<R>::one();
    return j;
  }

  static Jet dense(std::shared_ptr<const JetLayout> layout) {
    Jet j;
    j.coeffs_.assign(layout->size(), RingTraits<R>::zero());
    j.layout_ = std::move(layout);
    return j;
  }

  bool is_constant() const { return !layout_; }
  const std::shared_ptr<const JetLayout>& layout() const { return layout_; }
  const R& constant_term() const { return coeffs_[0]; }
  std::span<const R> coefficients() const { return coeffs_; }

  /// Taylor coefficient of t^alpha.
  R coefficient(std::span<const unsigned> alpha) const {
    unsigned total = 0;
    for (unsigned a : alpha) total += a;
    if (!layout_) return total == 0 ? coeffs_[0] : RingTraits<R>::zero();
    return coeffs_[layout_->index_of(alpha)];
  }

  /// d^alpha f at the base point.
  R derivative(std::span<const unsigned> alpha) const {
    if (!layout_) return coefficient(alpha);
    const std::size_t idx = layout_->index_of(alpha);
    return coeffs_[idx] * RingTraits<R>::from_integer(layout_->factorial_weight(idx));
  }

  bool is_exact_zero() const {
    for (const R& c : coeffs_)
      if (!RingTraits<R>::is_exact_zero(c)) return false;
    return true;
  }
  bool is_zero(double tol) const {
    for (const R& c : coeffs_)
      if (!RingTraits<R>::is_zero(c, tol)) return false;
    return true;
  }

  Jet& operator+=(const Jet& o) { return accumulate(o, false); }
  Jet& operator-=(const Jet& o) { return accumulate(o, true); }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) {
    for (R& c : a.coeffs_) c = -c;
    return a;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    if (a.is_constant()) return b.scaled(a.coeffs_[0]);
    if (b.is_constant()) return a.scaled(b.coeffs_[0]);
    check_shape(a, b);
    const JetLayout& lay = *a.layout_;
    Jet out = dense(a.layout_);
    std::vector<char> b_nonzero(b.coeffs_.size());
    for (std::size_t q = 0; q < b.coeffs_.size(); ++q)
      b_nonzero[q] = !RingTraits<R>::is_exact_zero(b.coeffs_[q]);
    for (std::size_t p = 0; p < a.coeffs_.size(); ++p) {
      if (RingTraits<R>::is_exact_zero(a.coeffs_[p])) continue;
      const auto targets = lay.products(p);
      for (std::size_t q = 0; q < targets.size(); ++q) {
        if (!b_nonzero[q]) continue;
        RingTraits<R>::add_product(out.coeffs_[targets[q]], a.coeffs_[p], b.coeffs_[q]);
      }
    }
    return out;
  }

  /// Multiplicative inverse up to truncation order, by order-by-order recursion.
  Jet reciprocal(double tol = kDefaultTolerance) const {
    if (RingTraits<R>::is_zero(coeffs_[0], tol))
      throw NonInvertibleConstantTerm("jet constant term is not invertible");
    const R inv0 = RingTraits<R>::reciprocal(coeffs_[0], tol);
    if (!layout_) return Jet(inv0);
    const JetLayout& lay = *layout_;
    Jet out = dense(layout_);
    std::vector<R> acc(lay.size(), RingTraits<R>::zero());
    std::vector<std::size_t> a_nonzero;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!RingTraits<R>::is_exact_zero(coeffs_[i])) a_nonzero.push_back(i);
    for (unsigned e = 0; e <= lay.order(); ++e) {
      const std::size_t lo = lay.degree_begin(e), hi = lay.prefix_end(e);
      for (std::size_t k = lo; k < hi; ++k) {
        R rhs = (k == 0 ? RingTraits<R>::one() : RingTraits<R>::zero()) - acc[k];
        out.coeffs_[k] = rhs * inv0;
      }
      if (e == lay.order()) break;
      for (std::size_t j = lo; j < hi; ++j) {
        if (RingTraits<R>::is_exact_zero(out.coeffs_[j])) continue;
        const auto targets = lay.products(j);
        for (std::size_t i : a_nonzero) {
          if (i >= targets.size()) break;
          RingTraits<R>::add_product(acc[targets[i]], coeffs_[i], out.coeffs_[j]);
        }
      }
    }
    return out;
  }

 private:
  static void check_shape(const Jet& a, const Jet& b) {
    if (a.layout_ == b.layout_) return;
    if (a.layout_->num_vars() != b.layout_->num_vars() || a.layout_->order() != b.layout_->order())
      throw DimensionMismatch("jet shape mismatch");
  }

  Jet scaled(const R& k) const {
    Jet out = *this;
    if (RingTraits<R>::is_exact_zero(k)) {
      out.layout_.reset();
      out.coeffs_.assign(1, RingTraits<R>::zero());
      return out;
    }
    for (R& c : out.coeffs_) c = c * k;
    return out;
  }

  Jet& accumulate(const Jet& o, bool subtract) {
    if (o.is_constant()) {
      coeffs_[0] = subtract ? coeffs_[0] - o.coeffs_[0] : coeffs_[0] + o.coeffs_[0];
      return *this;
    }
    if (is_constant()) {
      R c0 = coeffs_[0];
      *this = dense(o.layout_);
      coeffs_[0] = std::move(c0);
    } else {
      check_shape(*this, o);
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] = subtract ? coeffs_[i] - o.coeffs_[i] : coeffs_[i] + o.coeffs_[i];
    return *this;
  }

  std::shared_ptr<const JetLayout> layout_;
  std::vector<R> coeffs_;
};

template <class R>
struct RingTraits<Jet<R>> {
  static Jet<R> zero() { return Jet<R>(RingTraits<R>::zero()); }
  static Jet<R> one() { return Jet<R>(RingTraits<R>::one()); }
  static Jet<R> from_integer(const BigInt& v) { return Jet<R>(RingTraits<R>::from_integer(v)); }
  static Jet<R> from_rational(const Rational& v) {
    return Jet<R>(RingTraits<R>::from_rational(v));
  }
  static bool is_exact_zero(const Jet<R>& v) { return v.is_exact_zero(); }
  static bool is_zero(const Jet<R>& v, double tol) { return v.is_zero(tol); }
  /// Judged on the base-point value only.
  static bool negligible(const Jet<R>& v, const Jet<R>& scale, double tol) {
    return RingTraits<R>::negligible(v.constant_term(), scale.constant_term(), tol);
  }
  static Jet<R> reciprocal(const Jet<R>& v, double tol) { return v.reciprocal(tol); }
  static void add_product(Jet<R>& acc, const Jet<R>& a, const Jet<R>& b) { acc += a * b; }
  static double magnitude(const Jet<R>& v) { return RingTraits<R>::magnitude(v.constant_term()); }
};

}  // namespace fueter
