#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fueter/kernels.hpp"

namespace fueter {

/// Intrinsic slice function f(x) = alpha(x0, r) + J beta(x0, r) with
/// r = |x_vec|, J = x_vec / r. alpha and beta are real polynomials stored as
/// tables t[i][j] = coefficient of u^i v^j.
class SliceFunction {
 public:
  using Table = std::vector<std::vector<double>>;

  /// The slice operator. Throws InvalidParams when alpha is not even in v or
  /// beta is not odd in v, or when require_cauchy_riemann is set and the pair
  /// fails the Cauchy-Riemann system.
  static SliceFunction slice_extend(Table alpha, Table beta, bool require_cauchy_riemann = false);
  /// sum_k c_k x^k with real c_k.
  static SliceFunction from_power_series(std::vector<double> coeffs);
  static SliceFunction monomial(unsigned k);

  const Table& alpha() const { return alpha_; }
  const Table& beta() const { return beta_; }
  bool satisfies_cauchy_riemann(double tol = kDefaultTolerance) const;
  /// Present when the function was built from a power series.
  const std::optional<std::vector<double>>& power_coefficients() const { return series_; }

  Multivector<double> operator()(const Paravector<double>& x) const;

  /// Power-series evaluation over any coefficient ring (used with jets).
  template <class R>
  Multivector<R> evaluate_series(const Paravector<R>& x) const {
    if (!series_) throw InvalidParams("slice function has no power-series form");
    Multivector<R> out(x.dim());
    for (std::size_t k = 0; k < series_->size(); ++k) {
      if ((*series_)[k] == 0.0) continue;
      out += RingTraits<R>::from_rational(Rational::from_double((*series_)[k])) *
             pow(x, static_cast<unsigned>(k)).to_multivector();
    }
    return out;
  }

 private:
  SliceFunction(Table alpha, Table beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}
  Table alpha_;
  Table beta_;
  std::optional<std::vector<double>> series_;
};

/// Circle center + radius (cos t + I sin t) in the slice C_I.
struct ContourSpec {
  std::vector<double> imaginary_unit;  // components of I on e_1..e_n
  double center = 0.0;
  double radius = 1.0;
  unsigned nodes = 256;
};

/// Throws InvalidParams unless |I| = 1, radius > 0 and nodes is even and >= 4.
void validate(const ContourSpec& c);
ContourSpec make_contour(unsigned n, unsigned axis, double center, double radius, unsigned nodes);

struct ContourNode {
  Paravector<double> s;
  /// ds_I over one trapezoidal step: (s - center) 2 pi / N.
  Paravector<double> weight;
};

std::vector<ContourNode> contour_nodes(const ContourSpec& c);

/// (1/2pi) sum_j S_L^{-1}(s_j, x) w_j f(s_j). Throws InvalidParams when x is
/// on the contour or outside the ball it bounds.
Multivector<double> cauchy_reconstruct(const SliceFunction& f, const Paravector<double>& x,
                                       const ContourSpec& c);
/// (1/2pi) sum_j F_L^n(s_j, x) w_j f(s_j), i.e. Delta^{h_n} f(x).
Multivector<double> fueter_sce_integral(const SliceFunction& f, const Paravector<double>& x,
                                        const ContourSpec& c);

struct ConvergenceRow {
  unsigned nodes;
  double abs_error;
  std::optional<double> ratio;  // error(N) / error(N / 2)
};

/// Cauchy reconstruction error against f(x) for N = n0, 2 n0, ..., n_max.
std::vector<ConvergenceRow> convergence_table(const SliceFunction& f, const Paravector<double>& x,
                                              ContourSpec c, unsigned n0, unsigned n_max);
/// True iff every doubling whose coarser error is above floor shrinks the
/// error by at least max_ratio.
bool geometric_decay(const std::vector<ConvergenceRow>& rows, double max_ratio, double floor);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace fueter
