#pragma once

#include <functional>
#include <map>

#include "fueter/jet.hpp"
#include "fueter/paravector.hpp"

namespace fueter {

/// Constant-coefficient operator L f = sum_alpha c_alpha * d^alpha f acting on
/// functions of x = (x0, ..., xn). Coefficients multiply from the left.
/// Multi-indices have n + 1 entries, entry 0 belonging to x0.
class DiffOperator {
 public:
  using Terms = std::map<MultiIndex, Multivector<Rational>>;

  explicit DiffOperator(unsigned n);
  static DiffOperator identity(unsigned n);
  /// coeff * d/dx_var
  static DiffOperator partial(unsigned n, unsigned var, const Multivector<Rational>& coeff);

  unsigned dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  /// Largest |alpha| among the terms (0 for the zero operator).
  unsigned max_order() const;

  /// Adds coeff * d^alpha, dropping the term if the coefficient cancels.
  void add_term(const MultiIndex& alpha, const Multivector<Rational>& coeff);

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(const Rational& k, DiffOperator a);
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  unsigned n_;
  Terms terms_;
};

/// D = d0 + sum e_i d_i
DiffOperator make_dirac(unsigned n);
/// D-bar = d0 - sum e_i d_i
DiffOperator make_dirac_conj(unsigned n);
/// Delta_{n+1} = sum_{i=0}^{n} d_i^2
DiffOperator make_laplacian(unsigned n);

/// (A o B) f = A(B f): multi-indices add, coefficients multiply in order a * b.
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
DiffOperator power(const DiffOperator& base, unsigned k);
/// base^beta o Delta^m
DiffOperator operator_power_compose(const DiffOperator& base, unsigned beta, unsigned m);

template <class R>
using JetFunction = std::function<Multivector<Jet<R>>(const Paravector<Jet<R>>&)>;

/// Constant jets with the same values; used to pass s into jet closures.
template <class R>
Paravector<Jet<R>> lift_constant(const Paravector<R>& p) {
  return p.map([](const R& v) { return Jet<R>(v); });
}

/// Paravector whose coordinates are seeded jets t_i + x_i.
template <class R>
Paravector<Jet<R>> seed_point(const Paravector<R>& x, unsigned order) {
  const auto layout = JetLayout::get(x.dim() + 1, order);
  std::vector<Jet<R>> u;
  for (std::size_t i = 0; i < x.dim(); ++i)
    u.push_back(Jet<R>::seed_coordinate(layout, i + 1, x.vec(i)));
  return Paravector<Jet<R>>(Jet<R>::seed_coordinate(layout, 0, x.scalar()), std::move(u));
}

/// Multivector of partial derivatives d^alpha f at the base point.
template <class R>
Multivector<R> extract_derivative(const Multivector<Jet<R>>& value, const MultiIndex& alpha) {
  Multivector<R> d(value.dim());
  for (Blade b = 0; b < value.size(); ++b) d[b] = value[b].derivative(alpha);
  return d;
}

/// Applies op to an already expanded jet value f(x + t).
template <class R>
Multivector<R> apply_to_jet(const DiffOperator& op, const Multivector<Jet<R>>& value) {
  if (op.dim() != value.dim()) throw DimensionMismatch("operator / function dimension mismatch");
  Multivector<R> out(op.dim());
  for (const auto& [alpha, coeff] : op.terms()) {
    const Multivector<R> c = coeff.map([](const Rational& r) { return RingTraits<R>::from_rational(r); });
    out += c * extract_derivative(value, alpha);
  }
  return out;
}

/// Sum over terms of |c_alpha d^alpha f|; the natural scale for judging a
/// floating point cancellation to zero.
template <class R>
double term_magnitude(const DiffOperator& op, const Multivector<Jet<R>>& value) {
  double total = 0.0;
  for (const auto& [alpha, coeff] : op.terms()) {
    const Multivector<R> c = coeff.map([](const Rational& r) { return RingTraits<R>::from_rational(r); });
    total += norm(c * extract_derivative(value, alpha));
  }
  return total;
}

/// Evaluates f over jets at x and returns (op f)(x). This is the independent
/// differentiation route every closed form is checked against.
template <class R>
Multivector<R> oracle_apply(const DiffOperator& op, const JetFunction<R>& f, const Paravector<R>& x) {
  if (op.dim() != x.dim()) throw DimensionMismatch("operator / point dimension mismatch");
  return apply_to_jet<R>(op, f(seed_point(x, op.max_order())));
}

}  // namespace fueter
