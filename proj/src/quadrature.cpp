#include "fueter/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fueter/coeffs.hpp"

namespace fueter {

namespace {

double table_at(const SliceFunction::Table& t, std::size_t i, std::size_t j) {
  if (i >= t.size() || j >= t[i].size()) return 0.0;
  return t[i][j];
}

std::size_t table_rows(const SliceFunction::Table& a, const SliceFunction::Table& b) {
  return std::max(a.size(), b.size());
}

std::size_t table_cols(const SliceFunction::Table& t) {
  std::size_t c = 0;
  for (const auto& row : t) c = std::max(c, row.size());
  return c;
}

double eval_table(const SliceFunction::Table& t, double u, double v) {
  double acc = 0.0;
  for (std::size_t i = t.size(); i-- > 0;) {
    double row = 0.0;
    for (std::size_t j = t[i].size(); j-- > 0;) row = row * v + t[i][j];
    acc = acc * u + row;
  }
  return acc;
}

/// Compensated accumulation per blade so the node sum does not depend on
/// rounding drift.
class Accumulator {
 public:
  explicit Accumulator(unsigned n) : sum_(n), comp_(n) {}
  void add(const Multivector<double>& m) {
    for (Blade b = 0; b < m.size(); ++b) {
      const double y = m[b];
      const double t = sum_[b] + y;
      if (std::fabs(sum_[b]) >= std::fabs(y))
        comp_[b] += (sum_[b] - t) + y;
      else
        comp_[b] += (y - t) + sum_[b];
      sum_[b] = t;
    }
  }
  Multivector<double> result() const { return sum_ + comp_; }

 private:
  Multivector<double> sum_;
  Multivector<double> comp_;
};

void check_inside(const Paravector<double>& x, const ContourSpec& c) {
  if (x.dim() != c.imaginary_unit.size()) throw DimensionMismatch("point / contour dimension mismatch");
  const double d0 = x.scalar() - c.center;
  const double d2 = d0 * d0 + vector_norm_sq(x);
  const double r2 = c.radius * c.radius;
  if (std::fabs(d2 - r2) <= 1e-12 * r2) throw InvalidParams("x lies on the contour");
  if (d2 > r2) throw InvalidParams("x lies outside the contour domain");
}

template <class Kernel>
Multivector<double> integrate(const SliceFunction& f, const Paravector<double>& x, const ContourSpec& c,
                              Kernel&& kernel) {
  validate(c);
  check_inside(x, c);
  Accumulator acc(x.dim());
  for (const ContourNode& node : contour_nodes(c)) acc.add(kernel(node.s) * node.weight * f(node.s));
  return (1.0 / (2.0 * std::numbers::pi)) * acc.result();
}

}  // namespace

SliceFunction SliceFunction::slice_extend(Table alpha, Table beta, bool require_cauchy_riemann) {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = 1; j < alpha[i].size(); j += 2)
      if (alpha[i][j] != 0.0) throw InvalidParams("parity violation: alpha must be even in v");
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < beta[i].size(); j += 2)
      if (beta[i][j] != 0.0) throw InvalidParams("parity violation: beta must be odd in v");
  SliceFunction f(std::move(alpha), std::move(beta));
  if (require_cauchy_riemann && !f.satisfies_cauchy_riemann())
    throw InvalidParams("alpha, beta do not satisfy the Cauchy-Riemann system");
  return f;
}

SliceFunction SliceFunction::from_power_series(std::vector<double> coeffs) {
  const std::size_t K = coeffs.size();
  Table alpha(K, std::vector<double>(K, 0.0));
  Table beta(K, std::vector<double>(K, 0.0));
  // (u + I v)^k = sum_j C(k, j) u^{k-j} I^j v^j
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      const double c = coeffs[k] * coeffs::binomial_guarded(static_cast<long>(k), static_cast<long>(j)).get_d();
      const double sign = (j / 2) % 2 == 0 ? 1.0 : -1.0;
      if (j % 2 == 0)
        alpha[k - j][j] += sign * c;
      else
        beta[k - j][j] += sign * c;
    }
  }
  SliceFunction f = slice_extend(std::move(alpha), std::move(beta));
  f.series_ = std::move(coeffs);
  return f;
}

SliceFunction SliceFunction::monomial(unsigned k) {
  std::vector<double> c(k + 1, 0.0);
  c[k] = 1.0;
  return from_power_series(std::move(c));
}

bool SliceFunction::satisfies_cauchy_riemann(double tol) const {
  const std::size_t rows = table_rows(alpha_, beta_) + 1;
  const std::size_t cols = std::max(table_cols(alpha_), table_cols(beta_)) + 1;
  double scale = 0.0;
  for (const auto* t : {&alpha_, &beta_})
    for (const auto& row : *t)
      for (double v : row) scale = std::max(scale, std::fabs(v));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      // coefficient of u^i v^j in each derivative
      const double au = (i + 1) * table_at(alpha_, i + 1, j);
      const double av = (j + 1) * table_at(alpha_, i, j + 1);
      const double bu = (i + 1) * table_at(beta_, i + 1, j);
      const double bv = (j + 1) * table_at(beta_, i, j + 1);
      if (std::fabs(au - bv) > tol * std::max(scale, 1.0)) return false;
      if (std::fabs(av + bu) > tol * std::max(scale, 1.0)) return false;
    }
  }
  return true;
}

Multivector<double> SliceFunction::operator()(const Paravector<double>& x) const {
  const double r = std::sqrt(vector_norm_sq(x));
  Multivector<double> out = Multivector<double>::scalar(x.dim(), eval_table(alpha_, x.scalar(), r));
  if (r == 0.0) return out;
  const double b = eval_table(beta_, x.scalar(), r) / r;
  for (std::size_t i = 0; i < x.dim(); ++i) out[Blade{1} << i] = b * x.vec(i);
  return out;
}

void validate(const ContourSpec& c) {
  if (c.imaginary_unit.empty() || c.imaginary_unit.size() > kMaxCliffordDim)
    throw InvalidParams("imaginary unit has invalid dimension");
  double n2 = 0.0;
  for (double v : c.imaginary_unit) n2 += v * v;
  if (std::fabs(n2 - 1.0) > 1e-12) throw InvalidParams("imaginary unit I must satisfy |I| = 1");
  if (!(c.radius > 0.0)) throw InvalidParams("contour radius must be positive");
  if (c.nodes < 4 || c.nodes % 2 != 0) throw InvalidParams("contour needs an even number of nodes >= 4");
}

ContourSpec make_contour(unsigned n, unsigned axis, double center, double radius, unsigned nodes) {
  if (axis < 1 || axis > n) throw InvalidParams("contour axis out of range");
  ContourSpec c;
  c.imaginary_unit.assign(n, 0.0);
  c.imaginary_unit[axis - 1] = 1.0;
  c.center = center;
  c.radius = radius;
  c.nodes = nodes;
  return c;
}

std::vector<ContourNode> contour_nodes(const ContourSpec& c) {
  validate(c);
  const unsigned n = static_cast<unsigned>(c.imaginary_unit.size());
  const double step = 2.0 * std::numbers::pi / c.nodes;
  std::vector<ContourNode> out;
  out.reserve(c.nodes);
  for (unsigned j = 0; j < c.nodes; ++j) {
    // exact values on the quarter points keep the N = 4 nodes at +-1, +-I
    double co = 0.0, si = 0.0;
    if (4 * j % c.nodes == 0) {
      const unsigned q = 4 * j / c.nodes;
      co = q == 0 ? 1.0 : (q == 2 ? -1.0 : 0.0);
      si = q == 1 ? 1.0 : (q == 3 ? -1.0 : 0.0);
    } else {
      co = std::cos(step * j);
      si = std::sin(step * j);
    }
    std::vector<double> u(n);
    for (unsigned i = 0; i < n; ++i) u[i] = c.radius * si * c.imaginary_unit[i];
    Paravector<double> rel(c.radius * co, u);
    Paravector<double> s = rel;
    s.scalar() += c.center;
    out.push_back({s, step * rel});
  }
  return out;
}

Multivector<double> cauchy_reconstruct(const SliceFunction& f, const Paravector<double>& x,
                                       const ContourSpec& c) {
  return integrate(f, x, c, [&](const Paravector<double>& s) { return cauchy_left(s, x, CauchyForm::II); });
}

Multivector<double> fueter_sce_integral(const SliceFunction& f, const Paravector<double>& x,
                                        const ContourSpec& c) {
  return integrate(f, x, c, [&](const Paravector<double>& s) { return fueter_sce_kernel(s, x, Side::left); });
}

std::vector<ConvergenceRow> convergence_table(const SliceFunction& f, const Paravector<double>& x,
                                              ContourSpec c, unsigned n0, unsigned n_max) {
  const Multivector<double> exact = f(x);
  std::vector<ConvergenceRow> rows;
  for (unsigned N = n0; N <= n_max; N *= 2) {
    c.nodes = N;
    const double err = norm(cauchy_reconstruct(f, x, c) - exact);
    std::optional<double> ratio;
    if (!rows.empty() && rows.back().abs_error > 0.0) ratio = err / rows.back().abs_error;
    rows.push_back({N, err, ratio});
  }
  return rows;
}

bool geometric_decay(const std::vector<ConvergenceRow>& rows, double max_ratio, double floor) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].abs_error <= floor) break;
    if (rows[i].abs_error <= floor) continue;
    if (!rows[i].ratio || *rows[i].ratio > max_ratio) return false;
  }
  return true;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os.precision(6);
  os << "N,abs_error,ratio\n";
  for (const auto& r : rows) {
    os << r.nodes << ',' << std::scientific << r.abs_error << ',';
    if (r.ratio) os << *r.ratio;
    os << std::defaultfloat << '\n';
  }
  return os.str();
}

}  // namespace fueter
