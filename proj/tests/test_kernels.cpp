#include <cmath>

#include "doctest.h"
#include "fueter/diffop.hpp"
#include "fueter/kernel_spec.hpp"
#include "fueter/kernels.hpp"
#include "fueter/sampling.hpp"
#include "fueter/text.hpp"

using namespace fueter;
using MV = Multivector<Rational>;
using PV = Paravector<Rational>;
using JP = Paravector<Jet<Rational>>;

namespace {

PV real_point(unsigned n, long v) { return PV::real(n, Rational(v)); }
PV e1_point(unsigned n) { return PV::from_multivector(MV::generator(n, 1)); }

MV mv(const char* text, unsigned n) { return parse_multivector(text, n); }

JetFunction<Rational> cauchy_of(const PV& s) {
  return [s](const JP& y) { return cauchy_left(lift_constant(s), y, CauchyForm::II); };
}

}  // namespace

TEST_CASE("Cauchy kernel forms at s = 2, x = e1") {
  const PV s = real_point(3, 2), x = e1_point(3);
  const MV expect = mv("2/5 + 1/5*e1", 3);
  CHECK(cauchy_left(s, x, CauchyForm::II) == expect);
  CHECK(cauchy_left(s, x, CauchyForm::I) == expect);
  CHECK(cauchy_right(s, x, CauchyForm::II) == expect);
  CHECK(cauchy_right(s, x, CauchyForm::I) == expect);
  CHECK_THROWS_AS(cauchy_left(e1_point(3), e1_point(3), CauchyForm::II), SingularKernel);
  CHECK_THROWS_AS(cauchy_left(e1_point(3), e1_point(3), CauchyForm::I), SingularKernel);
  CHECK_THROWS_AS(cauchy_left(real_point(5, 2), x, CauchyForm::II), DimensionMismatch);
}

TEST_CASE("singular for every s on the sphere of x") {
  const PV x = parse_paravector("1,2,0,0", 3);
  const PV s = parse_paravector("1,0,6/5,8/5", 3);
  CHECK_THROWS_AS(cauchy_left(s, x, CauchyForm::II), SingularKernel);
  CHECK_THROWS_AS(fueter_sce_kernel(s, x, Side::left), SingularKernel);
  CHECK_THROWS_AS(d_beta_delta_m_kernel(s, x, 0, 1), SingularKernel);
  // floats: near-singular points are rejected relative to the point scale
  const auto sd = s.map([](const Rational& r) { return r.to_double(); });
  const auto xd = x.map([](const Rational& r) { return r.to_double() * (1.0 + 1e-14); });
  CHECK_THROWS_AS(cauchy_left(sd, xd, CauchyForm::II), SingularKernel);
}

TEST_CASE("pseudo-Cauchy powers") {
  const PV s = real_point(3, 2), x = e1_point(3);
  CHECK(pseudo_cauchy_pow(s, x, 1) == mv("1/5", 3));
  CHECK(pseudo_cauchy_pow(s, x, 2) == mv("1/25", 3));
  CHECK_THROWS_AS(pseudo_cauchy_pow(s, x, 0), InvalidParams);
  PointSampler rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto [sp, xp] = rng.kernel_point(5);
    CHECK(pseudo_cauchy_q(sp, xp) * pseudo_cauchy_inverse(sp, xp) == MV::scalar(5, Rational(1)));
  }
}

TEST_CASE("Cauchy series partial sums") {
  PointSampler rng(11);
  const PV s = rng.rational_paravector(3);
  const PV zero(3);
  const MV s_inv = inverse(s).to_multivector();
  CHECK(cauchy_series_partial(s, zero, 0) == s_inv);
  CHECK(cauchy_series_partial(s, zero, 7) == s_inv);
  const PV s2 = real_point(3, 2), x = e1_point(3);
  CHECK(cauchy_series_partial(s2, x, 0) == mv("1/2", 3));
  CHECK_THROWS_AS(cauchy_series_partial(x, s2, 3), InvalidParams);

  const auto sd = s2.map([](const Rational& r) { return r.to_double(); });
  const auto xd = x.map([](const Rational& r) { return r.to_double(); });
  const double err = norm(cauchy_series_partial(sd, xd, 60) - cauchy_left(sd, xd, CauchyForm::II));
  CHECK(err <= std::ldexp(1.0, -58));
}

TEST_CASE("Fueter-Sce kernel values") {
  const PV s = real_point(3, 2), x = e1_point(3);
  CHECK(fueter_sce_kernel(s, x, Side::left) == mv("-8/25 - 4/25*e1", 3));
  CHECK(fueter_sce_kernel(s, x, Side::right) == mv("-8/25 - 4/25*e1", 3));
  PointSampler rng(13);
  for (unsigned n : {3u, 5u}) {
    const auto [sp, xp] = rng.kernel_point(n);
    const long h = (n - 1) / 2;
    CHECK(oracle_apply(power(make_laplacian(n), h), cauchy_of(sp), xp) == fueter_sce_kernel(sp, xp, Side::left));
    CHECK(fueter_sce_kernel(sp, xp, Side::left) == special_case_kernel(sp, xp, SpecialCase::appL, h));
    JetFunction<Rational> fl = [&](const JP& y) { return fueter_sce_kernel(lift_constant(sp), y, Side::left); };
    CHECK(oracle_apply(make_dirac(n), fl, xp).is_exact_zero());
  }
}

TEST_CASE("theorem kernels for n = 5 at s = 2, x = e1") {
  const PV s = real_point(5, 2), x = e1_point(5);
  const KernelTerms<Rational> K(s, x, kDefaultTolerance);
  const MV q1 = K.q_neg(1).to_multivector(), q2 = K.q_neg(2).to_multivector();
  CHECK(d_beta_delta_m_kernel(s, x, 0, 1) == Rational(-4) * q1);
  CHECK(d_beta_delta_m_kernel(s, x, 1, 1) == Rational(16) * q2);
  CHECK(d_beta_delta_m_kernel(s, x, 0, 2) == Rational(8) * K.sx(q2) - Rational(16) * K.qt(2, 1));
  CHECK(dbar_beta_delta_m_kernel(s, x, 0, 1) == Rational(4) * K.sx(K.qt(2, 1)) + Rational(2) * q1);
  CHECK(dbar_beta_delta_m_kernel(s, x, 0, 2) == Rational(32) * K.sx(K.qt(3, 2)));
  CHECK(dbar_beta_delta_m_kernel(s, x, 1, 1) == Rational(-64) * K.sx(K.qt(3, 1)));
  CHECK_THROWS_AS(d_beta_delta_m_kernel(s, x, 0, 3), InvalidParams);
  CHECK_THROWS_AS(d_beta_delta_m_kernel(s, x, 0, 0), InvalidParams);
  CHECK_THROWS_AS(dbar_beta_delta_m_kernel(real_point(4, 2), e1_point(4), 0, 1), InvalidParams);
}

TEST_CASE("theorem kernels match the oracle") {
  PointSampler rng(17);
  for (unsigned n : {3u, 5u}) {
    const long h = (n - 1) / 2;
    const auto [s, x] = rng.kernel_point(n);
    for (long m = 0; m < h; ++m)
      for (long beta = 1; m + beta <= h; ++beta) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(beta);
        const auto D = operator_power_compose(make_dirac(n), beta, m);
        const auto Db = operator_power_compose(make_dirac_conj(n), beta, m);
        CHECK(oracle_apply(D, cauchy_of(s), x) == d_beta_delta_m_kernel(s, x, m, beta));
        CHECK(oracle_apply(Db, cauchy_of(s), x) == dbar_beta_delta_m_kernel(s, x, m, beta));
      }
  }
}

TEST_CASE("special cases") {
  const PV s = real_point(5, 2), x = e1_point(5);
  CHECK(special_case_kernel(s, x, SpecialCase::new1, 1) == mv("-4/5", 5));
  CHECK_THROWS_AS(special_case_kernel(s, x, SpecialCase::new1, 0), InvalidParams);
  CHECK_THROWS_AS(special_case_kernel(s, x, SpecialCase::appL, 3), InvalidParams);
  PointSampler rng(19);
  for (unsigned n : {3u, 5u, 7u}) {
    const long h = (n - 1) / 2;
    const auto [sp, xp] = rng.kernel_point(n);
    CHECK(special_case_kernel(sp, xp, SpecialCase::polyapp, h) == fueter_sce_kernel(sp, xp, Side::left));
    for (long m = 0; m < h; ++m) {
      CHECK(d_beta_delta_m_kernel(sp, xp, m, 1) == special_case_kernel(sp, xp, SpecialCase::new1, m + 1));
      CHECK(dbar_beta_delta_m_kernel(sp, xp, m, h - m) == special_case_kernel(sp, xp, SpecialCase::polyapp, m));
    }
  }
}

TEST_CASE("Laplacian powers of the Cauchy kernel") {
  PointSampler rng(21);
  for (unsigned n : {3u, 5u}) {
    const long h = (n - 1) / 2;
    const auto [s, x] = rng.kernel_point(n);
    for (long m = 0; m <= h; ++m) {
      const MV want = m == 0 ? cauchy_left(s, x, CauchyForm::II) : oracle_apply(power(make_laplacian(n), m), cauchy_of(s), x);
      CHECK(special_case_kernel(s, x, SpecialCase::appL, m) == want);
    }
  }
}

TEST_CASE("polyharmonic degree of Q^-m") {
  PointSampler rng(31);
  const unsigned n = 5;
  const long h = 2;
  const auto [s, x] = rng.kernel_point(n);
  for (long m = 1; m <= h; ++m) {
    JetFunction<Rational> f = [&](const JP& y) { return special_case_kernel(lift_constant(s), y, SpecialCase::new1, m); };
    CHECK(oracle_apply(power(make_laplacian(n), h - m + 1), f, x).is_exact_zero());
    CHECK_FALSE(oracle_apply(power(make_laplacian(n), h - m), f, x).is_exact_zero());
  }
}

TEST_CASE("lemma formulas") {
  const PV s = real_point(5, 2), x = e1_point(5);
  CHECK(lemma_rhs(s, x, LemmaId::l_one, 1, 1, 0) == mv("-4/5", 5));
  JetFunction<Rational> block1 = [&](const JP& y) { return lemma_block(lift_constant(s), y, 1, 1, 0); };
  CHECK(oracle_apply(make_dirac(5), block1, x) == mv("-4/5", 5));
  const KernelTerms<Rational> K(s, x, kDefaultTolerance);
  CHECK(lemma_rhs(s, x, LemmaId::l_one1, 2, 1, 0) == Rational(2) * K.sx(K.q_neg(2).to_multivector()));
  for (long m = 0; m <= 3; ++m)
    CHECK(lemma_rhs(s, x, LemmaId::l_one, 3, m, 0) == lemma_rhs(s, x, LemmaId::l_one, 2, m, 0));
  CHECK_THROWS_AS(lemma_rhs(s, x, LemmaId::l_one, 5, 1, 0), InvalidParams);
  CHECK_THROWS_AS(lemma_block(s, x, 1, -1, 0), InvalidParams);

  PointSampler rng(37);
  for (unsigned n : {3u, 5u}) {
    const auto [sp, xp] = rng.kernel_point(n);
    for (LemmaId id : {LemmaId::l_one, LemmaId::l_one1})
      for (int formula = 1; formula <= 4; ++formula)
        for (long m = 1; m <= 3; ++m)
          for (long k = 0; k <= 2; ++k) {
            JetFunction<Rational> f = [&](const JP& y) { return lemma_block(lift_constant(sp), y, formula, m, k); };
            const auto op = id == LemmaId::l_one ? make_dirac(n) : make_dirac_conj(n);
            CHECK_MESSAGE(oracle_apply(op, f, xp) == lemma_rhs(sp, xp, id, formula, m, k), lemma_name(id), " ",
                          formula, " m=", m, " k=", k);
          }
  }
}

TEST_CASE("commuting pieces") {
  PointSampler rng(41);
  const auto [s, x] = rng.kernel_point(5);
  const KernelTerms<Rational> K(s, x, kDefaultTolerance);
  const MV q = K.q_neg(2).to_multivector(), t = K.t_pow(3).to_multivector();
  const MV sm = s.to_multivector(), sb = conjugate(s).to_multivector();
  CHECK(q * t == t * q);
  CHECK(q * sm == sm * q);
  CHECK(t * sb == sb * t);
}

TEST_CASE("float kernels agree with exact kernels") {
  PointSampler rng(43);
  const auto [s, x] = rng.kernel_point(7);
  auto d = [](const Rational& r) { return r.to_double(); };
  const auto sd = s.map(d), xd = x.map(d);
  for (long m = 0; m <= 2; ++m)
    for (long beta = 1; m + beta <= 3; ++beta) {
      const auto exact = d_beta_delta_m_kernel(s, x, m, beta).map(d);
      const auto fl = d_beta_delta_m_kernel(sd, xd, m, beta);
      CHECK(norm(exact - fl) <= 1e-10 * std::max(1.0, norm(exact)));
    }
}

TEST_CASE("kernel specs") {
  KernelSpec spec;
  spec.n = 5;
  spec.flavor = Flavor::d_beta_delta_m;
  spec.beta = 1;
  CHECK(describe(spec) == "d-beta-delta-m n=5 m=0 beta=1");
  CHECK_NOTHROW(validate(spec));
  spec.side = Side::right;
  CHECK_THROWS_AS(validate(spec), InvalidParams);
  spec.side = Side::left;
  spec.beta = 3;
  CHECK_THROWS_AS(validate(spec), InvalidParams);
  for (Flavor f : all_flavors()) CHECK(flavor_from_name(flavor_name(f)) == f);
  CHECK_FALSE(flavor_from_name("cauchy-III").has_value());
  CHECK(side_from_name("right") == Side::right);
  CHECK_THROWS_AS(side_from_name("middle"), InvalidParams);
  CHECK(lemma_from_name("l_one1") == LemmaId::l_one1);

  spec = KernelSpec{};
  spec.n = 3;
  spec.flavor = Flavor::cauchy_I;
  CHECK(evaluate(spec, real_point(3, 2), e1_point(3)) == mv("2/5 + 1/5*e1", 3));
  CHECK_THROWS_AS(evaluate(spec, real_point(5, 2), e1_point(5)), DimensionMismatch);
  CHECK(generating_operator(spec) == DiffOperator::identity(3));
  spec.flavor = Flavor::lemma;
  CHECK_FALSE(generating_operator(spec).has_value());
}

TEST_CASE("n = 5 catalog") {
  CHECK(catalog_entries().size() == 9);
  CHECK_THROWS_AS(catalog_entry("n5-nothing"), InvalidParams);
  std::size_t mismatches = 0;
  PointSampler rng(47);
  for (const CatalogEntry& e : catalog_entries()) {
    const auto [s, x] = rng.kernel_point(e.n);
    const MV oracle = oracle_apply(catalog_operator(e), cauchy_of(s), x);
    const bool printed_ok = catalog_printed(e.id, s, x) == oracle;
    CHECK_MESSAGE(printed_ok == e.expected_match, e.id);
    if (!e.expected_match) {
      ++mismatches;
      CHECK_MESSAGE(catalog_alternative(e.id, s, x) == oracle, e.id);
    }
  }
  CHECK(mismatches == 3);
  CHECK_FALSE(catalog_entry("n5-Delta").expected_match);
  CHECK(catalog_entry("n5-DeltaDbar").expected_match);
  CHECK(catalog_entry("q-D").expected_match);
}
