#include "fueter/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "fueter/kernel_spec.hpp"
#include "fueter/sampling.hpp"
#include "fueter/text.hpp"

namespace fueter {

namespace {

using json = nlohmann::json;

struct Outcome {
  json point = json::object();
  double residual = 0.0;
  bool pass = false;
  std::optional<bool> expected_match;
  bool flagged = false;
  std::string note;
};

struct Task {
  std::string key;
  json params;
  std::function<Outcome()> run;
};

std::uint64_t key_hash(std::string_view key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <class R>
Paravector<R> convert(const Paravector<Rational>& p) {
  if constexpr (std::is_same_v<R, Rational>)
    return p;
  else
    return p.map([](const Rational& r) { return r.to_double(); });
}

/// Exact: pass iff the difference vanishes. Float: relative residual against
/// the largest of |a|, |b| and scale.
template <class R>
Outcome compare(const Multivector<R>& a, const Multivector<R>& b, double scale, double tol) {
  Outcome o;
  const Multivector<R> d = a - b;
  if constexpr (std::is_same_v<R, Rational>) {
    o.pass = d.is_exact_zero();
    o.residual = o.pass ? 0.0 : norm(d);
  } else {
    double s = std::max({norm(a), norm(b), scale});
    if (s == 0.0) s = 1.0;
    o.residual = norm(d) / s;
    o.pass = o.residual <= tol;
  }
  return o;
}

template <class R>
struct SampledPoint {
  Paravector<R> s;
  Paravector<R> x;
  json text;
};

template <class R>
SampledPoint<R> sample_point(std::uint64_t seed, const std::string& key, unsigned n) {
  PointSampler rng(case_seed(seed, key_hash(key)));
  auto [s, x] = rng.kernel_point(n);
  SampledPoint<R> p{convert<R>(s), convert<R>(x), json::object()};
  p.text["s"] = format_components(p.s);
  p.text["x"] = format_components(p.x);
  return p;
}

template <class R>
JetFunction<R> cauchy_function(const Paravector<R>& s) {
  const Paravector<Jet<R>> sj = lift_constant(s);
  return [sj](const Paravector<Jet<R>>& x) { return cauchy_left(sj, x, CauchyForm::II); };
}

/// (op f)(x) together with the float cancellation scale sum |c_a d^a f|.
template <class R>
std::pair<Multivector<R>, double> oracle_with_scale(const DiffOperator& op, const JetFunction<R>& f,
                                                    const Paravector<R>& x) {
  const Multivector<Jet<R>> value = f(seed_point(x, op.max_order()));
  double scale = 0.0;
  if constexpr (std::is_same_v<R, double>) scale = term_magnitude<R>(op, value);
  return {apply_to_jet<R>(op, value), scale};
}

template <class F>
Outcome in_mode(Mode mode, F&& f) {
  if (mode == Mode::exact) return f.template operator()<Rational>();
  return f.template operator()<double>();
}

struct Run {
  unsigned n;
  Mode mode;
  double tol;
  std::string tag;  // appended to keys of float spot checks
};

void check_dimension(unsigned n) {
  if (n < 3 || n > kMaxCliffordDim || n % 2 == 0)
    throw InvalidParams("suite dimension n must be odd, 3 <= n <= 15");
}

std::vector<Run> runs(const SuiteConfig& c, std::vector<unsigned> def, std::vector<unsigned> spot_def = {}) {
  std::vector<Run> out;
  for (unsigned n : c.n_values.empty() ? def : c.n_values) {
    check_dimension(n);
    out.push_back({n, c.mode, c.tol, ""});
  }
  // explicit dimensions replace the default spot checks unless spot_n is given
  const std::vector<unsigned> spot = c.spot_n ? *c.spot_n : (c.n_values.empty() ? spot_def : std::vector<unsigned>{});
  for (unsigned n : spot) {
    check_dimension(n);
    out.push_back({n, Mode::floating, c.spot_tol, " float"});
  }
  return out;
}

json spec_params(const KernelSpec& spec) {
  json p = {{"kernel", flavor_name(spec.flavor)}, {"n", spec.n}};
  switch (spec.flavor) {
    case Flavor::d_beta_delta_m:
    case Flavor::dbar_beta_delta_m:
      p["m"] = spec.m;
      p["beta"] = spec.beta;
      break;
    case Flavor::harmonic:
    case Flavor::laplacian_power:
    case Flavor::pseudo_cauchy:
      p["m"] = spec.m;
      break;
    case Flavor::polyanalytic:
      p["l"] = spec.m;
      break;
    case Flavor::lemma:
      p["lemma"] = lemma_name(spec.lemma);
      p["formula"] = spec.formula;
      p["m"] = spec.m;
      p["k"] = spec.k;
      break;
    default:
      break;
  }
  return p;
}

/// Closed form of `spec` against the oracle applied to S_L^{-1}.
Outcome check_against_oracle(const KernelSpec& spec, const std::string& key, std::uint64_t seed, Mode mode,
                             double tol) {
  return in_mode(mode, [&]<class R>() {
    const auto p = sample_point<R>(seed, key, spec.n);
    const auto [oracle, scale] = oracle_with_scale(*generating_operator(spec), cauchy_function(p.s), p.x);
    Outcome o = compare(evaluate(spec, p.s, p.x), oracle, scale, tol);
    o.point = p.text;
    return o;
  });
}

std::vector<Task> theorem_tasks(const SuiteConfig& c, Flavor flavor) {
  std::vector<Task> tasks;
  for (const Run& run : runs(c, {3, 5, 7})) {
    const long h = coeffs::half_dim(run.n);
    for (long m = 0; m <= h; ++m) {
      if (c.m && *c.m != m) continue;
      for (long beta = 1; m + beta <= h; ++beta) {
        if (c.beta && *c.beta != beta) continue;
        KernelSpec spec;
        spec.n = run.n;
        spec.flavor = flavor;
        spec.m = m;
        spec.beta = beta;
        for (unsigned t = 0; t < c.trials; ++t) {
          const std::string key = describe(spec) + run.tag + " #" + std::to_string(t);
          tasks.push_back({key, spec_params(spec), [=, seed = c.seed] {
                             return check_against_oracle(spec, key, seed, run.mode, run.tol);
                           }});
          if (flavor != Flavor::dbar_beta_delta_m || beta != h - m) continue;
          const std::string bkey = describe(spec) + " boundary=polyapp" + run.tag + " #" + std::to_string(t);
          json params = spec_params(spec);
          params["check"] = "boundary-polyapp";
          tasks.push_back({bkey, params, [=, seed = c.seed] {
                             return in_mode(run.mode, [&]<class R>() {
                               const auto p = sample_point<R>(seed, bkey, spec.n);
                               Outcome o = compare(dbar_beta_delta_m_kernel(p.s, p.x, m, beta),
                                                   special_case_kernel(p.s, p.x, SpecialCase::polyapp, m), 0.0,
                                                   run.tol);
                               o.point = p.text;
                               return o;
                             });
                           }});
        }
      }
    }
  }
  return tasks;
}

std::vector<Task> lemma_tasks(const SuiteConfig& c) {
  std::vector<Task> tasks;
  for (const Run& run : runs(c, {3, 5, 7})) {
    for (LemmaId lemma : {LemmaId::l_one, LemmaId::l_one1}) {
      const DiffOperator op = lemma == LemmaId::l_one ? make_dirac(run.n) : make_dirac_conj(run.n);
      for (int formula = 1; formula <= 4; ++formula) {
        for (long m = 1; m <= 4; ++m) {
          if (c.m && *c.m != m) continue;
          const long k_max = formula >= 3 ? 3 : 0;
          for (long k = 0; k <= k_max; ++k) {
            KernelSpec spec;
            spec.n = run.n;
            spec.flavor = Flavor::lemma;
            spec.lemma = lemma;
            spec.formula = formula;
            spec.m = m;
            spec.k = k;
            for (unsigned t = 0; t < c.trials; ++t) {
              const std::string key = describe(spec) + run.tag + " #" + std::to_string(t);
              tasks.push_back({key, spec_params(spec), [=, seed = c.seed] {
                                 return in_mode(run.mode, [&]<class R>() {
                                   const auto p = sample_point<R>(seed, key, spec.n);
                                   const Paravector<Jet<R>> sj = lift_constant(p.s);
                                   JetFunction<R> block = [&](const Paravector<Jet<R>>& x) {
                                     return lemma_block(sj, x, formula, m, k);
                                   };
                                   const auto [lhs, scale] = oracle_with_scale(op, block, p.x);
                                   Outcome o = compare(lhs, lemma_rhs(p.s, p.x, lemma, formula, m, k), scale, run.tol);
                                   o.point = p.text;
                                   return o;
                                 });
                               }});
            }
          }
        }
      }
    }
  }
  return tasks;
}

/// Adds one point-based check comparing two closed forms.
template <class F>
void add_closed_pair(std::vector<Task>& tasks, const SuiteConfig& c, const Run& run, const std::string& name,
                     json params, unsigned t, F pair_fn) {
  const std::string key = name + " n=" + std::to_string(run.n) + run.tag + " #" + std::to_string(t);
  params["n"] = run.n;
  tasks.push_back({key, params, [=, seed = c.seed] {
                     return in_mode(run.mode, [&]<class R>() {
                       const auto p = sample_point<R>(seed, key, run.n);
                       const auto [a, b] = pair_fn.template operator()<R>(p.s, p.x);
                       Outcome o = compare(a, b, 0.0, run.tol);
                       o.point = p.text;
                       return o;
                     });
                   }});
}

void add_oracle_check(std::vector<Task>& tasks, const SuiteConfig& c, const Run& run, KernelSpec spec,
                      unsigned t) {
  spec.n = run.n;
  const std::string key = describe(spec) + " vs oracle" + run.tag + " #" + std::to_string(t);
  tasks.push_back({key, spec_params(spec), [=, seed = c.seed] {
                     return check_against_oracle(spec, key, seed, run.mode, run.tol);
                   }});
}

std::vector<Task> special_case_tasks(const SuiteConfig& c) {
  std::vector<Task> tasks;
  for (const Run& run : runs(c, {3, 5, 7}, {9})) {
    const long h = coeffs::half_dim(run.n);
    for (long m = 0; m < h; ++m) {
      const std::string key = "sigma(m+1) = -2(h-m) gamma_m n=" + std::to_string(run.n) + run.tag +
                              " m=" + std::to_string(m);
      tasks.push_back({key, json{{"n", run.n}, {"m", m}}, [=] {
                         Outcome o;
                         const BigInt lhs = coeffs::sigma_nm(h, m + 1);
                         const BigInt rhs = -2 * (h - m) * coeffs::gamma_m(h, m);
                         o.pass = lhs == rhs;
                         o.residual = o.pass ? 0.0 : std::fabs(BigInt(lhs - rhs).get_d());
                         return o;
                       }});
    }
    for (unsigned t = 0; t < c.trials; ++t) {
      for (long m = 0; m < h; ++m) {
        add_closed_pair(tasks, c, run, "new1(m+1) = d-beta-delta-m(beta=1) m=" + std::to_string(m),
                        json{{"m", m}, {"check", "new1-p11"}}, t,
                        [m]<class R>(const Paravector<R>& s, const Paravector<R>& x) {
                          return std::pair{special_case_kernel(s, x, SpecialCase::new1, m + 1),
                                           d_beta_delta_m_kernel(s, x, m, 1)};
                        });
      }
      for (long m = 0; m <= h; ++m) {
        KernelSpec spec;
        spec.flavor = Flavor::laplacian_power;
        spec.m = m;
        add_oracle_check(tasks, c, run, spec, t);
      }
      for (long m = 1; m <= h; ++m) {
        KernelSpec spec;
        spec.flavor = Flavor::harmonic;
        spec.m = m;
        add_oracle_check(tasks, c, run, spec, t);
      }
      for (long l = 0; l <= h; ++l) {
        KernelSpec spec;
        spec.flavor = Flavor::polyanalytic;
        spec.m = l;
        add_oracle_check(tasks, c, run, spec, t);
      }
      add_closed_pair(tasks, c, run, "fueter-sce = appL(m=h)", json{{"check", "fueter-sce-appL"}}, t,
                      [h]<class R>(const Paravector<R>& s, const Paravector<R>& x) {
                        return std::pair{fueter_sce_kernel(s, x, Side::left),
                                         special_case_kernel(s, x, SpecialCase::appL, h)};
                      });
      for (Side side : {Side::left, Side::right}) {
        add_closed_pair(tasks, c, run, "form I = form II side=" + std::string(side_name(side)),
                        json{{"check", "forms"}, {"side", side_name(side)}}, t,
                        [side]<class R>(const Paravector<R>& s, const Paravector<R>& x) {
                          return std::pair{cauchy_kernel(s, x, side, CauchyForm::I),
                                           cauchy_kernel(s, x, side, CauchyForm::II)};
                        });
      }
    }
  }
  return tasks;
}

std::vector<Task> form_tasks(const SuiteConfig& c) {
  std::vector<Task> tasks;
  for (const Run& run : runs(c, {3, 5, 7, 9})) {
    const long h = coeffs::half_dim(run.n);
    for (unsigned t = 0; t < c.trials; ++t) {
      for (Side side : {Side::left, Side::right}) {
        add_closed_pair(tasks, c, run, "form I = form II side=" + std::string(side_name(side)),
                        json{{"check", "forms"}, {"side", side_name(side)}}, t,
                        [side]<class R>(const Paravector<R>& s, const Paravector<R>& x) {
                          return std::pair{cauchy_kernel(s, x, side, CauchyForm::I),
                                           cauchy_kernel(s, x, side, CauchyForm::II)};
                        });
      }
      add_closed_pair(tasks, c, run, "Q Q^-1 = 1", json{{"check", "pseudo-inverse"}}, t,
                      []<class R>(const Paravector<R>& s, const Paravector<R>& x) {
                        return std::pair{pseudo_cauchy_q(s, x) * pseudo_cauchy_inverse(s, x),
                                         Multivector<R>::scalar(s.dim(), RingTraits<R>::one())};
                      });
      add_closed_pair(tasks, c, run, "Q^-h (s-x0) = (s-x0) Q^-h", json{{"check", "commutation"}}, t,
                      [h]<class R>(const Paravector<R>& s, const Paravector<R>& x) {
                        const KernelTerms<R> K(s, x, kDefaultTolerance);
                        return std::pair{K.qt(h, 1), K.tq(1, h)};
                      });
    }
  }
  return tasks;
}

std::vector<Task> monogenic_tasks(const SuiteConfig& c) {
  std::vector<Task> tasks;
  for (const Run& run : runs(c, {3, 5, 7})) {
    const DiffOperator D = make_dirac(run.n);
    for (unsigned t = 0; t < c.trials; ++t) {
      const std::string key = "D F_L = 0 n=" + std::to_string(run.n) + run.tag + " #" + std::to_string(t);
      tasks.push_back({key, json{{"n", run.n}, {"check", "monogenic"}}, [=, seed = c.seed] {
                         return in_mode(run.mode, [&]<class R>() {
                           const auto p = sample_point<R>(seed, key, run.n);
                           const Paravector<Jet<R>> sj = lift_constant(p.s);
                           JetFunction<R> F = [&](const Paravector<Jet<R>>& x) {
                             return fueter_sce_kernel(sj, x, Side::left);
                           };
                           const auto [value, scale] = oracle_with_scale(D, F, p.x);
                           Outcome o = compare(value, Multivector<R>(run.n), scale, run.tol);
                           o.point = p.text;
                           return o;
                         });
                       }});
      KernelSpec spec;
      spec.flavor = Flavor::fueter_sce;
      add_oracle_check(tasks, c, run, spec, t);
    }
  }
  return tasks;
}

std::vector<Task> polyharmonic_tasks(const SuiteConfig& c) {
  std::vector<Task> tasks;
  for (const Run& run : runs(c, {3, 5, 7})) {
    const long h = coeffs::half_dim(run.n);
    for (long m = 1; m <= h; ++m) {
      if (c.m && *c.m != m) continue;
      const DiffOperator op = power(make_laplacian(run.n), static_cast<unsigned>(h - m + 1));
      for (unsigned t = 0; t < c.trials; ++t) {
        const std::string key = "Delta^(h-m+1) new1 = 0 n=" + std::to_string(run.n) + " m=" + std::to_string(m) +
                                run.tag + " #" + std::to_string(t);
        tasks.push_back({key, json{{"n", run.n}, {"m", m}, {"check", "polyharmonic"}}, [=, seed = c.seed] {
                           return in_mode(run.mode, [&]<class R>() {
                             const auto p = sample_point<R>(seed, key, run.n);
                             const Paravector<Jet<R>> sj = lift_constant(p.s);
                             JetFunction<R> F = [&](const Paravector<Jet<R>>& x) {
                               return special_case_kernel(sj, x, SpecialCase::new1, m);
                             };
                             const auto [value, scale] = oracle_with_scale(op, F, p.x);
                             Outcome o = compare(value, Multivector<R>(run.n), scale, run.tol);
                             o.point = p.text;
                             return o;
                           });
                         }});
      }
    }
  }
  return tasks;
}

Outcome exact_equality(const BigInt& lhs, const BigInt& rhs) {
  Outcome o;
  o.pass = lhs == rhs;
  o.residual = o.pass ? 0.0 : std::fabs(BigInt(lhs - rhs).get_d());
  return o;
}

std::vector<Task> appendix_tasks(const SuiteConfig& c) {
  if (c.hn_max < 0 || c.hn_max > 40) throw InvalidParams("hn-max must be in 0..40");
  std::vector<Task> tasks;
  for (long h = 0; h <= c.hn_max; ++h) {
    for (coeffs::Identity id : coeffs::all_identities()) {
      for (const coeffs::CoeffParams& p : coeffs::admissible_parameters(id, h)) {
        std::ostringstream key;
        key << coeffs::identity_name(id) << " h=" << h << " m=" << p.m << " k=" << p.k << " j=" << p.j;
        tasks.push_back({key.str(),
                         json{{"identity", coeffs::identity_name(id)}, {"hn", h}, {"m", p.m}, {"k", p.k}, {"j", p.j}},
                         [=] {
                           const auto v = coeffs::evaluate_identity(id, p);
                           Outcome o = exact_equality(v.lhs, v.rhs);
                           o.note = v.lhs.get_str() + " = " + v.rhs.get_str();
                           return o;
                         }});
      }
    }
    // boundary beta = h - m: only the top coefficient survives
    for (long m = 0; m < h; ++m) {
      const long beta = h - m;
      const std::string key = "boundary h=" + std::to_string(h) + " m=" + std::to_string(m);
      tasks.push_back({key, json{{"check", "boundary"}, {"hn", h}, {"m", m}, {"beta", beta}}, [=] {
                         Outcome o;
                         o.pass = true;
                         const BigInt top = coeffs::factorial(h) * (BigInt(1) << static_cast<mp_bitcnt_t>(h - m));
                         auto expect = [&](coeffs::Family f, long k, long j, const BigInt& want) {
                           if (coeffs::coefficient(f, {h, m, k, j}) != want) o.pass = false;
                         };
                         if (beta % 2 == 1) {
                           const long k = (beta - 1) / 2;
                           for (long j = 0; j <= k; ++j) {
                             expect(coeffs::Family::A1, k, j, j == k ? top : BigInt(0));
                             expect(coeffs::Family::B1, k, j, 0);
                           }
                         } else {
                           const long k = beta / 2;
                           for (long j = 0; j <= k; ++j) expect(coeffs::Family::A2, k, j, j == k ? top : BigInt(0));
                           for (long j = 0; j < k; ++j) expect(coeffs::Family::B2, k, j, 0);
                         }
                         o.residual = o.pass ? 0.0 : 1.0;
                         return o;
                       }});
    }
  }
  for (long n = 1; n <= 2 * c.hn_max + 2; ++n) {
    for (long k = 0; k <= n; ++k) {
      const std::string key = "stifel n=" + std::to_string(n) + " k=" + std::to_string(k);
      tasks.push_back({key, json{{"check", "stifel"}, {"n", n}, {"k", k}}, [=] {
                         return exact_equality(coeffs::binomial_guarded(n, k), coeffs::binomial_guarded(n - 1, k) +
                                                                                  coeffs::binomial_guarded(n - 1, k - 1));
                       }});
    }
  }
  return tasks;
}

std::vector<Task> catalog_tasks(const SuiteConfig& c) {
  std::vector<Task> tasks;
  for (const CatalogEntry& e : catalog_entries()) {
    if (!c.n_values.empty() && std::find(c.n_values.begin(), c.n_values.end(), e.n) == c.n_values.end()) continue;
    const std::string key = "catalog " + e.id;
    json params = {{"id", e.id},        {"n", e.n},
                   {"operator", e.operator_text}, {"printed", e.printed},
                   {"alternative", e.alternative.empty() ? json(nullptr) : json(e.alternative)}};
    tasks.push_back({key, params, [=, seed = c.seed, trials = c.trials, mode = c.mode, tol = c.tol] {
                       Outcome o;
                       bool printed_ok = true;
                       bool alternative_ok = true;
                       json points = json::array();
                       for (unsigned t = 0; t < trials; ++t) {
                         const std::string pkey = key + " #" + std::to_string(t);
                         const Outcome r = in_mode(mode, [&]<class R>() {
                           const auto p = sample_point<R>(seed, pkey, e.n);
                           const auto [oracle, scale] =
                               oracle_with_scale(catalog_operator(e), cauchy_function(p.s), p.x);
                           Outcome printed = compare(catalog_printed(e.id, p.s, p.x), oracle, scale, tol);
                           const Outcome alt = compare(catalog_alternative(e.id, p.s, p.x), oracle, scale, tol);
                           printed.flagged = alt.pass;  // reused as "alternative matches"
                           printed.point = p.text;
                           return printed;
                         });
                         printed_ok = printed_ok && r.pass;
                         alternative_ok = alternative_ok && r.flagged;
                         o.residual = std::max(o.residual, r.residual);
                         points.push_back(r.point);
                       }
                       o.point = points;
                       o.expected_match = e.expected_match;
                       if (e.expected_match) {
                         o.pass = printed_ok;
                       } else if (printed_ok) {
                         o.note = "printed form unexpectedly matches the oracle";
                       } else if (!alternative_ok) {
                         o.note = "neither the printed nor the alternative form matches the oracle";
                       } else {
                         o.flagged = true;
                         o.note = "printed: " + e.printed + "; oracle-confirmed: " + e.alternative;
                       }
                       return o;
                     }});
  }
  return tasks;
}

std::vector<Task> series_tasks(const SuiteConfig& c) {
  std::vector<Task> tasks;
  for (const Run& run : runs(c, {3, 5})) {
    if (!run.tag.empty()) continue;
    for (unsigned t = 0; t < c.trials; ++t) {
      const std::string key = "series n=" + std::to_string(run.n) + " N=" + std::to_string(c.series_terms) + " #" +
                              std::to_string(t);
      tasks.push_back({key, json{{"n", run.n}, {"N", c.series_terms}}, [=, seed = c.seed, N = c.series_terms] {
                         PointSampler rng(case_seed(seed, key_hash(key)));
                         const unsigned n = run.n;
                         std::vector<double> sc(n + 1), xc(n + 1);
                         double s2 = 0.0;
                         while (s2 < 0.25) {
                           s2 = 0.0;
                           for (double& v : sc) {
                             v = rng.uniform(-2.0, 2.0);
                             s2 += v * v;
                           }
                         }
                         double d2 = 0.0;
                         while (d2 < 1e-4) {
                           d2 = 0.0;
                           for (double& v : xc) {
                             v = rng.uniform(-1.0, 1.0);
                             d2 += v * v;
                           }
                         }
                         const double ratio = rng.uniform(0.1, 0.5);
                         for (double& v : xc) v *= ratio * std::sqrt(s2 / d2);
                         const auto sd = Paravector<double>::from_components(sc);
                         const auto xd = Paravector<double>::from_components(xc);
                         const auto exact_point = [](const Paravector<double>& p) {
                           return p.map([](double v) { return Rational::from_double(v); });
                         };
                         const Paravector<Rational> s = exact_point(sd);
                         const Paravector<Rational> x = exact_point(xd);
                         const double rho = std::sqrt(norm_sq(x).to_double()) / std::sqrt(norm_sq(s).to_double());
                         const double s_inv_norm = 1.0 / std::sqrt(norm_sq(s).to_double());
                         Outcome o;
                         o.point = {{"s", format_components(sd)}, {"x", format_components(xd)}, {"ratio", rho}};
                         if (!(rho <= 0.5)) {
                           o.note = "sampled |x|/|s| above 1/2";
                           return o;
                         }
                         const Multivector<Rational> kernel = cauchy_left(s, x, CauchyForm::II);
                         const Paravector<Rational> s_inv = inverse(s);
                         Paravector<Rational> xk = Paravector<Rational>::real(n, Rational(1));
                         Paravector<Rational> sk = s_inv;
                         Multivector<Rational> sum(n);
                         o.pass = true;
                         json worst = json::array();
                         for (unsigned k = 0; k <= N; ++k) {
                           sum += xk * sk;
                           const double err = norm(sum - kernel);
                           const double bound = s_inv_norm * std::pow(rho, k + 1) / (1.0 - rho);
                           o.residual = std::max(o.residual, err / bound);
                           if (err > bound * (1.0 + 1e-12)) o.pass = false;
                           xk = Paravector<Rational>::from_multivector(xk * x);
                           sk = Paravector<Rational>::from_multivector(sk * s_inv);
                         }
                         o.note = "residual is max over N of error / tail bound";
                         return o;
                       }});
    }
  }
  return tasks;
}

struct QuadratureSetup {
  ContourSpec contour;
  std::vector<Paravector<double>> points;
};

QuadratureSetup quadrature_setup(const SuiteConfig& c, unsigned n, unsigned axis) {
  QuadratureSetup q;
  q.contour = make_contour(n, axis, 0.25, 2.0, c.nodes);
  PointSampler rng(case_seed(c.seed, key_hash("quadrature points n=" + std::to_string(n))));
  for (unsigned i = 0; i < c.quad_points; ++i) q.points.push_back(rng.ball_point(n, 0.25, 1.0));
  return q;
}

std::vector<Task> quadrature_tasks(const SuiteConfig& c, std::vector<ConvergenceRow>& convergence) {
  if (c.nodes < 8 || c.nodes % 2 != 0) throw InvalidParams("quadrature needs an even node count >= 8");
  std::vector<Task> tasks;
  const QuadratureSetup q3 = quadrature_setup(c, 3, 1);
  ContourSpec tilted = q3.contour;
  tilted.imaginary_unit = {1.0 / std::sqrt(3.0), -1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)};
  for (std::size_t i = 0; i < q3.points.size(); ++i) {
    const Paravector<double> x = q3.points[i];
    const json point = {{"x", format_components(x)}};
    for (unsigned k = 0; k <= 8; ++k) {
      const std::string key = "cauchy reconstruct x^" + std::to_string(k) + " p" + std::to_string(i);
      tasks.push_back({key, json{{"n", 3}, {"k", k}, {"nodes", c.nodes}, {"check", "cauchy"}}, [=, tol = c.tol] {
                         const SliceFunction f = SliceFunction::monomial(k);
                         Outcome o;
                         o.point = point;
                         o.residual = norm(cauchy_reconstruct(f, x, q3.contour) - f(x));
                         o.pass = o.residual <= tol;
                         return o;
                       }});
      const std::string skey = "slice independence x^" + std::to_string(k) + " p" + std::to_string(i);
      tasks.push_back({skey, json{{"n", 3}, {"k", k}, {"nodes", c.nodes}, {"check", "slice-independence"}},
                       [=, tol = c.tol] {
                         const SliceFunction f = SliceFunction::monomial(k);
                         Outcome o;
                         o.point = point;
                         o.residual = norm(cauchy_reconstruct(f, x, q3.contour) - cauchy_reconstruct(f, x, tilted));
                         o.pass = o.residual <= tol;
                         return o;
                       }});
    }
    const std::string key = "fueter-sce integral x^2 = -4 p" + std::to_string(i);
    tasks.push_back({key, json{{"n", 3}, {"k", 2}, {"nodes", c.nodes}, {"check", "fueter-sce-x2"}},
                     [=, tol = c.spot_tol] {
                       Outcome o;
                       o.point = point;
                       const auto v = fueter_sce_integral(SliceFunction::monomial(2), x, q3.contour);
                       o.residual = norm(v - Multivector<double>::scalar(3, -4.0));
                       o.pass = o.residual <= tol;
                       return o;
                     }});
  }
  for (unsigned n : {3u, 5u}) {
    const QuadratureSetup qs = quadrature_setup(c, n, n);
    const long h = coeffs::half_dim(n);
    for (std::size_t i = 0; i < qs.points.size(); ++i) {
      const Paravector<double> x = qs.points[i];
      for (unsigned k = 0; k <= 5; ++k) {
        const std::string key = "fueter-sce integral x^" + std::to_string(k) + " vs oracle n=" + std::to_string(n) +
                                " p" + std::to_string(i);
        tasks.push_back({key, json{{"n", n}, {"k", k}, {"nodes", c.nodes}, {"check", "fueter-sce-oracle"}},
                         [=, tol = c.spot_tol] {
                           const SliceFunction f = SliceFunction::monomial(k);
                           JetFunction<double> fj = [&](const Paravector<Jet<double>>& y) {
                             return f.evaluate_series(y);
                           };
                           const auto oracle =
                               oracle_apply(power(make_laplacian(n), static_cast<unsigned>(h)), fj, x);
                           Outcome o;
                           o.point = {{"x", format_components(x)}};
                           o.residual = norm(fueter_sce_integral(f, x, qs.contour) - oracle) / std::max(1.0, norm(oracle));
                           o.pass = o.residual <= tol;
                           return o;
                         }});
      }
    }
  }
  convergence = convergence_table(SliceFunction::monomial(8), q3.points.front(), q3.contour, 8, c.nodes);
  tasks.push_back({"convergence x^8 p0", json{{"n", 3}, {"k", 8}, {"check", "convergence"}}, [=, rows = convergence] {
                     Outcome o;
                     o.point = {{"x", format_components(q3.points.front())}};
                     o.pass = geometric_decay(rows, 0.25, 1e-12);
                     for (std::size_t i = 1; i < rows.size() && rows[i - 1].abs_error > 1e-12; ++i)
                       if (rows[i].ratio && rows[i].abs_error > 1e-12) o.residual = std::max(o.residual, *rows[i].ratio);
                     o.note = "error ratio per doubling <= 0.25 until the 1e-12 floor";
                     return o;
                   }});
  return tasks;
}

std::vector<CaseResult> execute(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<CaseResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      CaseResult& r = results[i];
      r.key = tasks[i].key;
      r.params = tasks[i].params;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        Outcome o = tasks[i].run();
        r.point = std::move(o.point);
        r.residual = o.residual;
        r.pass = o.pass;
        r.expected_match = o.expected_match;
        r.flagged = o.flagged;
        r.note = std::move(o.note);
      } catch (const std::exception& e) {
        r.pass = false;
        r.note = e.what();
      }
      r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  unsigned count = jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < count; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace

std::string_view mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

Mode mode_from_name(std::string_view name) {
  if (name == "exact") return Mode::exact;
  if (name == "float") return Mode::floating;
  throw InvalidParams("mode must be exact or float");
}

json to_json(const SuiteConfig& c) {
  json j = {{"suite", c.suite},
            {"n", c.n_values},
            {"m", c.m ? json(*c.m) : json(nullptr)},
            {"beta", c.beta ? json(*c.beta) : json(nullptr)},
            {"trials", c.trials},
            {"mode", mode_name(c.mode)},
            {"seed", c.seed},
            {"tol", c.tol},
            {"spot_n", c.spot_n ? json(*c.spot_n) : json(nullptr)},
            {"spot_tol", c.spot_tol},
            {"hn_max", c.hn_max},
            {"nodes", c.nodes},
            {"series_terms", c.series_terms},
            {"quad_points", c.quad_points}};
  return j;
}

void apply_json(SuiteConfig& c, const json& j) {
  if (!j.is_object()) throw InvalidParams("config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "suite") c.suite = v.get<std::string>();
      else if (key == "n") c.n_values = v.is_array() ? v.get<std::vector<unsigned>>() : std::vector<unsigned>{v.get<unsigned>()};
      else if (key == "m") c.m = v.is_null() ? std::nullopt : std::optional<long>(v.get<long>());
      else if (key == "beta") c.beta = v.is_null() ? std::nullopt : std::optional<long>(v.get<long>());
      else if (key == "trials") c.trials = v.get<unsigned>();
      else if (key == "mode") c.mode = mode_from_name(v.get<std::string>());
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "tol") c.tol = v.get<double>();
      else if (key == "spot_n") c.spot_n = v.is_null() ? std::nullopt : std::optional(v.get<std::vector<unsigned>>());
      else if (key == "spot_tol") c.spot_tol = v.get<double>();
      else if (key == "jobs") c.jobs = v.get<unsigned>();
      else if (key == "hn_max" || key == "hn-max") c.hn_max = v.get<long>();
      else if (key == "nodes") c.nodes = v.get<unsigned>();
      else if (key == "series_terms") c.series_terms = v.get<unsigned>();
      else if (key == "quad_points") c.quad_points = v.get<unsigned>();
      else throw InvalidParams("unknown config key: " + key);
    }
  } catch (const json::exception& e) {
    throw InvalidParams(std::string("bad config value: ") + e.what());
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem-d", "theorem-dbar", "lemmas", "special-cases",
                                              "appendix",  "monogenic",    "polyharmonic", "forms",
                                              "series",    "catalog",      "quadrature"};
  return names;
}

VerificationReport run_suite(const SuiteConfig& config) {
  if (config.trials == 0) throw InvalidParams("trials must be positive");
  VerificationReport report;
  report.suite = config.suite;
  report.config = config;
  std::vector<Task> tasks;
  const std::string& s = config.suite;
  if (s == "theorem-d") tasks = theorem_tasks(config, Flavor::d_beta_delta_m);
  else if (s == "theorem-dbar") tasks = theorem_tasks(config, Flavor::dbar_beta_delta_m);
  else if (s == "lemmas") tasks = lemma_tasks(config);
  else if (s == "special-cases") tasks = special_case_tasks(config);
  else if (s == "appendix") tasks = appendix_tasks(config);
  else if (s == "monogenic") tasks = monogenic_tasks(config);
  else if (s == "polyharmonic") tasks = polyharmonic_tasks(config);
  else if (s == "forms") tasks = form_tasks(config);
  else if (s == "series") tasks = series_tasks(config);
  else if (s == "catalog") tasks = catalog_tasks(config);
  else if (s == "quadrature") tasks = quadrature_tasks(config, report.convergence);
  else throw InvalidParams("unknown suite: " + s);
  if (tasks.empty()) throw InvalidParams("no cases match the given parameters");

  report.cases = execute(tasks, config.jobs);
  for (const CaseResult& r : report.cases) {
    ++report.summary.total;
    if (r.flagged) ++report.summary.flagged;
    else if (r.pass) ++report.summary.passed;
    else ++report.summary.failed;
  }
  return report;
}

json VerificationReport::to_json(bool with_timing) const {
  json cs = json::array();
  for (const CaseResult& r : cases) {
    json cj = {{"key", r.key},
               {"params", r.params},
               {"point", r.point},
               {"residual", r.residual},
               {"pass", r.pass},
               {"expected_match", r.expected_match ? json(*r.expected_match) : json(nullptr)},
               {"flagged", r.flagged}};
    if (!r.note.empty()) cj["note"] = r.note;
    if (with_timing) cj["wall_time"] = r.wall_time;
    cs.push_back(std::move(cj));
  }
  json out = {{"schema", 1},
              {"suite", suite},
              {"config", fueter::to_json(config)},
              {"cases", std::move(cs)},
              {"summary",
               {{"total", summary.total},
                {"passed", summary.passed},
                {"failed", summary.failed},
                {"flagged_known_discrepancies", summary.flagged}}}};
  if (!convergence.empty()) {
    json rows = json::array();
    for (const auto& r : convergence)
      rows.push_back({{"N", r.nodes}, {"abs_error", r.abs_error}, {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)}});
    out["convergence"] = std::move(rows);
  }
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const CaseResult& r : cases) {
    os << (r.flagged ? "FLAG" : (r.pass ? "PASS" : "FAIL")) << "  " << r.key << "  residual=" << r.residual;
    if (!r.note.empty() && (r.flagged || !r.pass)) os << "  (" << r.note << ")";
    os << '\n';
  }
  os << suite << ": total=" << summary.total << " passed=" << summary.passed << " failed=" << summary.failed
     << " flagged=" << summary.flagged << '\n';
  return os.str();
}

}  // namespace fueter
