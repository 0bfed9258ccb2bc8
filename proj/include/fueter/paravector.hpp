#pragma once

#include <vector>

#include "fueter/multivector.hpp"

namespace fueter {

/// x = x0 + x1 e1 + ... + xn en, an element of R^{n+1} inside R_n.
template <class R>
class Paravector {
 public:
  Paravector() : Paravector(1) {}
  explicit Paravector(unsigned n) : x0_(RingTraits<R>::zero()), xu_(n, RingTraits<R>::zero()) {
    if (n < 1 || n > kMaxCliffordDim) throw InvalidParams("Clifford dimension out of range");
  }
  Paravector(R x0, std::vector<R> xu) : x0_(std::move(x0)), xu_(std::move(xu)) {
    if (xu_.empty() || xu_.size() > kMaxCliffordDim)
      throw InvalidParams("Clifford dimension out of range");
  }
  static Paravector real(unsigned n, R v) {
    Paravector p(n);
    p.x0_ = std::move(v);
    return p;
  }
  /// Components given as (x0, x1, ..., xn).
  static Paravector from_components(const std::vector<R>& c) {
    if (c.size() < 2) throw InvalidParams("paravector needs at least two components");
    return Paravector(c[0], std::vector<R>(c.begin() + 1, c.end()));
  }

  /// Projection of a multivector that only occupies grades 0 and 1.
  static Paravector from_multivector(const Multivector<R>& m, double tol = kDefaultTolerance) {
    Paravector p(m.dim());
    p.x0_ = m[0];
    for (Blade b = 1; b < m.size(); ++b) {
      if (blade_grade(b) == 1) {
        p.xu_[std::countr_zero(b)] = m[b];
      } else if (!RingTraits<R>::is_zero(m[b], tol)) {
        throw InvalidParams("multivector is not a paravector");
      }
    }
    return p;
  }

  unsigned dim() const { return static_cast<unsigned>(xu_.size()); }
  const R& scalar() const { return x0_; }
  R& scalar() { return x0_; }
  /// Coefficient of e_{i+1}.
  const R& vec(std::size_t i) const { return xu_.at(i); }
  R& vec(std::size_t i) { return xu_.at(i); }
  const std::vector<R>& vector_part() const { return xu_; }

  std::vector<R> components() const {
    std::vector<R> c{x0_};
    c.insert(c.end(), xu_.begin(), xu_.end());
    return c;
  }

  Multivector<R> to_multivector() const {
    Multivector<R> m(dim());
    m[0] = x0_;
    for (std::size_t i = 0; i < xu_.size(); ++i) m[Blade{1} << i] = xu_[i];
    return m;
  }

  template <class F>
  auto map(F&& f) const {
    using S = decltype(f(x0_));
    std::vector<S> u;
    u.reserve(xu_.size());
    for (const R& c : xu_) u.push_back(f(c));
    return Paravector<S>(f(x0_), std::move(u));
  }

  Paravector& operator+=(const Paravector& o) {
    check_dim(o);
    x0_ += o.x0_;
    for (std::size_t i = 0; i < xu_.size(); ++i) xu_[i] += o.xu_[i];
    return *this;
  }
  Paravector& operator-=(const Paravector& o) {
    check_dim(o);
    x0_ -= o.x0_;
    for (std::size_t i = 0; i < xu_.size(); ++i) xu_[i] -= o.xu_[i];
    return *this;
  }
  friend Paravector operator+(Paravector a, const Paravector& b) { return a += b; }
  friend Paravector operator-(Paravector a, const Paravector& b) { return a -= b; }
  friend Paravector operator-(Paravector a) {
    a.x0_ = -a.x0_;
    for (R& c : a.xu_) c = -c;
    return a;
  }
  friend Paravector operator*(const R& k, Paravector a) {
    a.x0_ = k * a.x0_;
    for (R& c : a.xu_) c = k * c;
    return a;
  }

  friend Multivector<R> operator*(const Paravector& a, const Paravector& b) {
    return a.to_multivector() * b.to_multivector();
  }
  friend Multivector<R> operator*(const Paravector& a, const Multivector<R>& b) {
    return a.to_multivector() * b;
  }
  friend Multivector<R> operator*(const Multivector<R>& a, const Paravector& b) {
    return a * b.to_multivector();
  }

  friend bool operator==(const Paravector& a, const Paravector& b) {
    return a.x0_ == b.x0_ && a.xu_ == b.xu_;
  }

 private:
  void check_dim(const Paravector& o) const {
    if (o.xu_.size() != xu_.size()) throw DimensionMismatch("paravector dimension mismatch");
  }

  R x0_;
  std::vector<R> xu_;
};

/// x0 - x_vec
template <class R>
Paravector<R> conjugate(const Paravector<R>& x) {
  Paravector<R> out = -x;
  out.scalar() = x.scalar();
  return out;
}

/// |x_vec|^2
template <class R>
R vector_norm_sq(const Paravector<R>& x) {
  R acc = RingTraits<R>::zero();
  for (const R& c : x.vector_part()) RingTraits<R>::add_product(acc, c, c);
  return acc;
}

/// |x|^2 = x0^2 + ... + xn^2 (the scalar x * conj(x)).
template <class R>
R norm_sq(const Paravector<R>& x) {
  R acc = vector_norm_sq(x);
  RingTraits<R>::add_product(acc, x.scalar(), x.scalar());
  return acc;
}

/// conj(x) / |x|^2; throws ZeroNorm when |x| vanishes.
template <class R>
Paravector<R> inverse(const Paravector<R>& x, double tol = kDefaultTolerance) {
  const R n2 = norm_sq(x);
  if (RingTraits<R>::is_zero(n2, tol)) throw ZeroNorm("paravector with zero norm");
  return RingTraits<R>::reciprocal(n2, tol) * conjugate(x);
}

/// x^k. Powers of a paravector stay in the commutative algebra R[x], so the
/// result is computed from x^k = a_k + b_k x_vec with
/// a_{k+1} = a_k x0 - b_k |x_vec|^2, b_{k+1} = a_k + b_k x0.
template <class R>
Paravector<R> pow(const Paravector<R>& x, unsigned k) {
  R a = RingTraits<R>::one();
  R b = RingTraits<R>::zero();
  if (k > 0) {
    const R v2 = vector_norm_sq(x);
    for (unsigned i = 0; i < k; ++i) {
      R a_next = a * x.scalar() - b * v2;
      b = a + b * x.scalar();
      a = std::move(a_next);
    }
  }
  std::vector<R> u;
  u.reserve(x.dim());
  for (const R& c : x.vector_part()) u.push_back(b * c);
  return Paravector<R>(std::move(a), std::move(u));
}

/// True iff y lies on the sphere [x] = {x0 + J |x_vec| : J in S}.
template <class R>
bool same_sphere(const Paravector<R>& x, const Paravector<R>& y, double tol = kDefaultTolerance) {
  if (x.dim() != y.dim()) throw DimensionMismatch("paravector dimension mismatch");
  return RingTraits<R>::is_zero(x.scalar() - y.scalar(), tol) &&
         RingTraits<R>::is_zero(vector_norm_sq(x) - vector_norm_sq(y), tol);
}

}  // namespace fueter
