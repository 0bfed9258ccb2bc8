#include "fueter/diffop.hpp"

namespace fueter {

DiffOperator::DiffOperator(unsigned n) : n_(n) {
  if (n < 1 || n > kMaxCliffordDim) throw InvalidParams("Clifford dimension out of range");
}

DiffOperator DiffOperator::identity(unsigned n) {
  DiffOperator op(n);
  op.add_term(MultiIndex(n + 1, 0), Multivector<Rational>::scalar(n, Rational(1)));
  return op;
}

DiffOperator DiffOperator::partial(unsigned n, unsigned var, const Multivector<Rational>& coeff) {
  if (var > n) throw InvalidParams("partial derivative variable out of range");
  DiffOperator op(n);
  MultiIndex alpha(n + 1, 0);
  alpha[var] = 1;
  op.add_term(alpha, coeff);
  return op;
}

unsigned DiffOperator::max_order() const {
  unsigned best = 0;
  for (const auto& [alpha, coeff] : terms_) {
    unsigned total = 0;
    for (unsigned a : alpha) total += a;
    best = std::max(best, total);
  }
  return best;
}

void DiffOperator::add_term(const MultiIndex& alpha, const Multivector<Rational>& coeff) {
  if (alpha.size() != n_ + 1) throw DimensionMismatch("multi-index length mismatch");
  if (coeff.dim() != n_) throw DimensionMismatch("coefficient dimension mismatch");
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    if (!coeff.is_exact_zero()) terms_.emplace(alpha, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_exact_zero()) terms_.erase(it);
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  if (o.n_ != n_) throw DimensionMismatch("operator dimension mismatch");
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  if (o.n_ != n_) throw DimensionMismatch("operator dimension mismatch");
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

DiffOperator operator*(const Rational& k, DiffOperator a) {
  DiffOperator out(a.n_);
  for (const auto& [alpha, c] : a.terms_) out.add_term(alpha, k * c);
  return out;
}

namespace {

DiffOperator dirac_with_sign(unsigned n, int sign) {
  const auto one = Multivector<Rational>::scalar(n, Rational(1));
  DiffOperator op = DiffOperator::partial(n, 0, one);
  for (unsigned i = 1; i <= n; ++i)
    op += DiffOperator::partial(n, i, Rational(sign) * Multivector<Rational>::generator(n, i));
  return op;
}

}  // namespace

DiffOperator make_dirac(unsigned n) { return dirac_with_sign(n, 1); }

DiffOperator make_dirac_conj(unsigned n) { return dirac_with_sign(n, -1); }

DiffOperator make_laplacian(unsigned n) {
  DiffOperator op(n);
  for (unsigned i = 0; i <= n; ++i) {
    MultiIndex alpha(n + 1, 0);
    alpha[i] = 2;
    op.add_term(alpha, Multivector<Rational>::scalar(n, Rational(1)));
  }
  return op;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("operator dimension mismatch");
  DiffOperator out(a.dim());
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) {
      MultiIndex sum(alpha.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = alpha[i] + beta[i];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

DiffOperator power(const DiffOperator& base, unsigned k) {
  DiffOperator out = DiffOperator::identity(base.dim());
  for (unsigned i = 0; i < k; ++i) out = compose(out, base);
  return out;
}

DiffOperator operator_power_compose(const DiffOperator& base, unsigned beta, unsigned m) {
  return compose(power(base, beta), power(make_laplacian(base.dim()), m));
}

}  // namespace fueter
