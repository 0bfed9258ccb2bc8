#pragma once

#include "fueter/coeffs.hpp"
#include "fueter/paravector.hpp"

namespace fueter {

enum class Side { left, right };
enum class CauchyForm { I, II };

template <class R>
R ring_integer(const BigInt& v) {
  return RingTraits<R>::from_integer(v);
}

template <class R>
R ring_integer(long v) {
  return RingTraits<R>::from_integer(BigInt(v));
}

/// Q_{c,s}(x) = s^2 - 2 x0 s + |x|^2, an element of R[s].
template <class R>
Paravector<R> pseudo_cauchy_q(const Paravector<R>& s, const Paravector<R>& x) {
  if (s.dim() != x.dim()) throw DimensionMismatch("kernel point dimension mismatch");
  Paravector<R> q = pow(s, 2);
  q -= (ring_integer<R>(2) * x.scalar()) * s;
  q.scalar() += norm_sq(x);
  return q;
}

/// Throws SingularKernel when the denominator d vanishes. Exact over
/// rationals; over floats |d|^2 is compared with tol^2 (|s|^2 + |x|^2)^2.
template <class R>
void require_nonsingular(const Paravector<R>& d, const Paravector<R>& s, const Paravector<R>& x,
                         double tol) {
  const R scale = norm_sq(s) + norm_sq(x);
  if (RingTraits<R>::negligible(norm_sq(d), scale * scale, tol * tol)) throw SingularKernel();
}

template <class R>
Paravector<R> pseudo_cauchy_inverse(const Paravector<R>& s, const Paravector<R>& x,
                                    double tol = kDefaultTolerance) {
  const Paravector<R> q = pseudo_cauchy_q(s, x);
  require_nonsingular(q, s, x, tol);
  return inverse(q, 0.0);
}

/// Q_{c,s}(x)^{-m} for m >= 1.
template <class R>
Multivector<R> pseudo_cauchy_pow(const Paravector<R>& s, const Paravector<R>& x, long m,
                                 double tol = kDefaultTolerance) {
  if (m < 1) throw InvalidParams("pseudo-Cauchy power needs m >= 1");
  return pow(pseudo_cauchy_inverse(s, x, tol), static_cast<unsigned>(m)).to_multivector();
}

namespace detail {

/// x^2 - 2 s0 x + |s|^2, the form I denominator.
template <class R>
Paravector<R> form_one_denominator(const Paravector<R>& s, const Paravector<R>& x) {
  Paravector<R> d = pow(x, 2);
  d -= (ring_integer<R>(2) * s.scalar()) * x;
  d.scalar() += norm_sq(s);
  return d;
}

template <class R>
Paravector<R> form_one_inverse(const Paravector<R>& s, const Paravector<R>& x, double tol) {
  const Paravector<R> d = form_one_denominator(s, x);
  require_nonsingular(d, s, x, tol);
  return inverse(d, 0.0);
}

}  // namespace detail

template <class R>
Multivector<R> cauchy_left(const Paravector<R>& s, const Paravector<R>& x, CauchyForm form,
                           double tol = kDefaultTolerance) {
  if (form == CauchyForm::II) return (s - conjugate(x)) * pseudo_cauchy_inverse(s, x, tol);
  return -(detail::form_one_inverse(s, x, tol) * (x - conjugate(s)));
}

template <class R>
Multivector<R> cauchy_right(const Paravector<R>& s, const Paravector<R>& x, CauchyForm form,
                            double tol = kDefaultTolerance) {
  if (form == CauchyForm::II) return pseudo_cauchy_inverse(s, x, tol) * (s - conjugate(x));
  return -((x - conjugate(s)) * detail::form_one_inverse(s, x, tol));
}

template <class R>
Multivector<R> cauchy_kernel(const Paravector<R>& s, const Paravector<R>& x, Side side,
                             CauchyForm form, double tol = kDefaultTolerance) {
  return side == Side::left ? cauchy_left(s, x, form, tol) : cauchy_right(s, x, form, tol);
}

/// sum_{k=0}^{N} x^k s^{-1-k}; requires |x| < |s|.
template <class R>
Multivector<R> cauchy_series_partial(const Paravector<R>& s, const Paravector<R>& x, unsigned N,
                                     double tol = kDefaultTolerance) {
  if (s.dim() != x.dim()) throw DimensionMismatch("kernel point dimension mismatch");
  if (!(RingTraits<R>::magnitude(norm_sq(x)) < RingTraits<R>::magnitude(norm_sq(s))))
    throw InvalidParams("series needs |x| < |s|");
  const Paravector<R> s_inv = inverse(s, tol);
  Multivector<R> sum(s.dim());
  for (unsigned k = 0; k <= N; ++k) sum += pow(x, k) * pow(s_inv, k + 1);
  return sum;
}

/// Shared pieces of the kernel formulas at one point: s - conj(x), Q^{-1} and
/// T = s - x0.
template <class R>
class KernelTerms {
 public:
  KernelTerms(const Paravector<R>& s, const Paravector<R>& x, double tol)
      : n_(s.dim()), s_minus_xbar_(s - conjugate(x)), q_inv_(pseudo_cauchy_inverse(s, x, tol)), t_(s) {
    t_.scalar() -= x.scalar();
  }

  unsigned dim() const { return n_; }
  const Paravector<R>& s_minus_xbar() const { return s_minus_xbar_; }
  Paravector<R> q_neg(long e) const { return pow(q_inv_, static_cast<unsigned>(e)); }
  Paravector<R> t_pow(long e) const { return pow(t_, static_cast<unsigned>(e)); }
  /// Q^{-qe} (s - x0)^{te}
  Multivector<R> qt(long qe, long te) const { return q_neg(qe) * t_pow(te); }
  /// (s - x0)^{te} Q^{-qe}
  Multivector<R> tq(long te, long qe) const { return t_pow(te) * q_neg(qe); }
  /// (s - conj(x)) m
  Multivector<R> sx(const Multivector<R>& m) const { return s_minus_xbar_ * m; }

 private:
  unsigned n_;
  Paravector<R> s_minus_xbar_;
  Paravector<R> q_inv_;
  Paravector<R> t_;
};

/// F^n = gamma_n (s - conj(x)) Q^{-h_n-1} on the left, mirrored on the right.
template <class R>
Multivector<R> fueter_sce_kernel(const Paravector<R>& s, const Paravector<R>& x, Side side,
                                 double tol = kDefaultTolerance) {
  const long h = coeffs::half_dim(s.dim());
  const R gamma = ring_integer<R>(coeffs::gamma_n(s.dim()));
  const KernelTerms<R> K(s, x, tol);
  const Paravector<R> q = K.q_neg(h + 1);
  if (side == Side::left) return gamma * (K.s_minus_xbar() * q);
  return gamma * (q * K.s_minus_xbar());
}

inline void check_theorem_range(unsigned n, long m, long beta) {
  const long h = coeffs::half_dim(n);
  if (n < 3) throw InvalidParams("kernel dimension n must be odd and >= 3");
  if (beta < 1 || m < 0 || m + beta > h)
    throw InvalidParams("need beta >= 1, m >= 0 and m + beta <= h_n");
}

/// Closed form of D^beta Delta^m applied to the form II left Cauchy kernel.
template <class R>
Multivector<R> d_beta_delta_m_kernel(const Paravector<R>& s, const Paravector<R>& x, long m, long beta,
                                     double tol = kDefaultTolerance) {
  check_theorem_range(s.dim(), m, beta);
  const long h = coeffs::half_dim(s.dim());
  const KernelTerms<R> K(s, x, tol);
  Multivector<R> first(s.dim());
  Multivector<R> second(s.dim());
  if (beta % 2 == 1) {
    const long k = (beta - 1) / 2;
    for (long j = 0; j <= k - 1; ++j)
      first += ring_integer<R>(coeffs::a1({h, m, k, j})) * K.qt(m + j + 2 + k, 2 * j + 1);
    for (long j = 0; j <= k; ++j)
      second += ring_integer<R>(coeffs::b1({h, m, k, j})) * K.qt(m + 1 + k + j, 2 * j);
  } else {
    const long k = beta / 2;
    for (long j = 0; j <= k - 1; ++j) {
      first += ring_integer<R>(coeffs::a2({h, m, k, j})) * K.qt(m + j + 1 + k, 2 * j);
      second += ring_integer<R>(coeffs::b2({h, m, k, j})) * K.qt(m + 1 + k + j, 2 * j + 1);
    }
  }
  return ring_integer<R>(coeffs::d_kernel_prefactor(h, m, beta)) * (K.sx(first) - second);
}

/// Closed form of D-bar^beta Delta^m applied to the form II left Cauchy kernel.
template <class R>
Multivector<R> dbar_beta_delta_m_kernel(const Paravector<R>& s, const Paravector<R>& x, long m,
                                        long beta, double tol = kDefaultTolerance) {
  check_theorem_range(s.dim(), m, beta);
  const long h = coeffs::half_dim(s.dim());
  const KernelTerms<R> K(s, x, tol);
  Multivector<R> first(s.dim());
  Multivector<R> second(s.dim());
  if (beta % 2 == 1) {
    const long k = (beta - 1) / 2;
    for (long j = 0; j <= k; ++j) {
      first += ring_integer<R>(coeffs::A1({h, m, k, j})) * K.qt(m + j + 2 + k, 2 * j + 1);
      second += ring_integer<R>(coeffs::B1({h, m, k, j})) * K.qt(m + 1 + k + j, 2 * j);
    }
  } else {
    const long k = beta / 2;
    for (long j = 0; j <= k; ++j)
      first += ring_integer<R>(coeffs::A2({h, m, k, j})) * K.qt(m + j + 1 + k, 2 * j);
    for (long j = 0; j <= k - 1; ++j)
      second += ring_integer<R>(coeffs::B2({h, m, k, j})) * K.qt(m + 1 + k + j, 2 * j + 1);
  }
  return ring_integer<R>(coeffs::dbar_kernel_prefactor(h, m, beta)) * (K.sx(first) + second);
}

/// new1: sigma_{n,m} Q^{-m}; appL: gamma_m (s - conj(x)) Q^{-m-1};
/// polyapp: ((-1)^{h-l} / (h-l)!) F_L^n (s - x0)^{h-l}.
enum class SpecialCase { new1, appL, polyapp };

inline void check_special_range(SpecialCase id, unsigned n, long p) {
  const long h = coeffs::half_dim(n);
  if (n < 3) throw InvalidParams("kernel dimension n must be odd and >= 3");
  const long lo = id == SpecialCase::new1 ? 1 : 0;
  if (p < lo || p > h) throw InvalidParams("special-case parameter out of range");
}

template <class R>
Multivector<R> special_case_kernel(const Paravector<R>& s, const Paravector<R>& x, SpecialCase id, long p,
                                   double tol = kDefaultTolerance) {
  check_special_range(id, s.dim(), p);
  const long h = coeffs::half_dim(s.dim());
  const KernelTerms<R> K(s, x, tol);
  switch (id) {
    case SpecialCase::new1:
      return ring_integer<R>(coeffs::sigma_nm(h, p)) * K.q_neg(p).to_multivector();
    case SpecialCase::appL:
      return ring_integer<R>(coeffs::gamma_m(h, p)) * (K.s_minus_xbar() * K.q_neg(p + 1));
    case SpecialCase::polyapp: {
      BigInt c = coeffs::gamma_n(s.dim()) / coeffs::factorial(h - p);
      if ((h - p) % 2 == 1) c = -c;
      return ring_integer<R>(c) * K.sx(K.qt(h + 1, h - p));
    }
  }
  throw InvalidParams("unknown special case");
}

/// Building blocks of the Dirac (l_one) and conjugate Dirac (l_one1) lemmas:
/// 1: (s - conj(x)) Q^{-m}, 2: Q^{-m}, 3: (s - x0)^k Q^{-m},
/// 4: (s - conj(x)) Q^{-m} (s - x0)^k.
enum class LemmaId { l_one, l_one1 };

inline void check_lemma_params(int formula, long m, long k) {
  if (formula < 1 || formula > 4) throw InvalidParams("lemma formula must be 1..4");
  if (m < 0 || k < 0) throw InvalidParams("lemma parameters must be nonnegative");
}

template <class R>
Multivector<R> lemma_block(const Paravector<R>& s, const Paravector<R>& x, int formula, long m, long k,
                           double tol = kDefaultTolerance) {
  check_lemma_params(formula, m, k);
  const KernelTerms<R> K(s, x, tol);
  switch (formula) {
    case 1:
      return K.s_minus_xbar() * K.q_neg(m);
    case 2:
      return K.q_neg(m).to_multivector();
    case 3:
      return K.tq(k, m);
    default:
      return K.sx(K.qt(m, k));
  }
}

/// Printed right-hand side of the lemma formula.
template <class R>
Multivector<R> lemma_rhs(const Paravector<R>& s, const Paravector<R>& x, LemmaId lemma, int formula, long m,
                         long k, double tol = kDefaultTolerance) {
  check_lemma_params(formula, m, k);
  const long h = coeffs::half_dim(s.dim());
  const KernelTerms<R> K(s, x, tol);
  auto c = [](long v) { return ring_integer<R>(v); };
  Multivector<R> out(s.dim());
  if (lemma == LemmaId::l_one) {
    switch (formula) {
      case 1:
        return c(-2 * (h - m + 1)) * K.q_neg(m).to_multivector();
      case 2:
        return c(4 * m) * K.tq(1, m + 1) - c(2 * m) * (K.s_minus_xbar() * K.q_neg(m + 1));
      case 3:
        out = c(4 * m) * K.tq(k + 1, m + 1) - c(2 * m) * K.sx(K.qt(m + 1, k));
        if (k > 0) out -= c(k) * K.tq(k - 1, m);
        return out;
      default:
        out = c(2 * (m - h - 1)) * K.qt(m, k);
        if (k > 0) out -= c(k) * K.sx(K.qt(m, k - 1));
        return out;
    }
  }
  switch (formula) {
    case 1:
      return c(2 * (h - m)) * K.q_neg(m).to_multivector() + c(4 * m) * K.sx(K.tq(1, m + 1));
    case 2:
      return c(2 * m) * (K.s_minus_xbar() * K.q_neg(m + 1));
    case 3:
      out = c(2 * m) * K.sx(K.tq(k, m + 1));
      if (k > 0) out = c(-k) * K.tq(k - 1, m) + out;
      return out;
    default:
      out = c(2 * (h - m)) * K.qt(m, k) + c(4 * m) * K.sx(K.qt(m + 1, k + 1));
      if (k > 0) out -= c(k) * K.sx(K.tq(k - 1, m));
      return out;
  }
}

}  // namespace fueter
