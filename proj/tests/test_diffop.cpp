#include "doctest.h"
#include "fueter/diffop.hpp"
#include "fueter/kernels.hpp"
#include "fueter/sampling.hpp"
#include "fueter/text.hpp"

using namespace fueter;
using MV = Multivector<Rational>;
using PV = Paravector<Rational>;
using JP = Paravector<Jet<Rational>>;

namespace {

MV scalar(unsigned n, long v) { return MV::scalar(n, Rational(v)); }

}  // namespace

TEST_CASE("basic operators on f(x) = x") {
  for (unsigned n = 1; n <= 6; ++n) {
    JetFunction<Rational> id = [](const JP& y) { return y.to_multivector(); };
    PointSampler rng(n);
    const PV x = rng.rational_paravector(n);
    CHECK(oracle_apply(make_dirac(n), id, x) == scalar(n, 1 - static_cast<long>(n)));
    CHECK(oracle_apply(make_dirac_conj(n), id, x) == scalar(n, 1 + static_cast<long>(n)));
    CHECK(oracle_apply(make_laplacian(n), id, x).is_exact_zero());
  }
}

TEST_CASE("oracle examples") {
  const unsigned n = 3;
  const PV x = parse_paravector("1/2,-2,3,1/3", n);
  JetFunction<Rational> nsq = [](const JP& y) {
    return Multivector<Jet<Rational>>::scalar(3, norm_sq(y));
  };
  CHECK(oracle_apply(make_dirac(n), nsq, x) == Rational(2) * x.to_multivector());
  JetFunction<Rational> sq = [](const JP& y) { return pow(y, 2).to_multivector(); };
  CHECK(oracle_apply(make_laplacian(n), sq, x) == scalar(n, -4));
}

TEST_CASE("term-map identities") {
  for (unsigned n = 1; n <= 9; ++n) {
    const DiffOperator D = make_dirac(n), Db = make_dirac_conj(n), L = make_laplacian(n);
    CHECK(compose(D, Db) == L);
    CHECK(compose(Db, D) == L);
    DiffOperator two_d0 = DiffOperator::partial(n, 0, scalar(n, 2));
    CHECK(D + Db == two_d0);
    CHECK(compose(D, DiffOperator::identity(n)) == D);
    CHECK(operator_power_compose(D, 1, 0) == D);
    CHECK(operator_power_compose(D, 0, 1) == L);
    CHECK(operator_power_compose(D, 2, 1) == compose(power(L, 1), power(D, 2)));
  }
}

TEST_CASE("compose of Laplacians") {
  const unsigned n = 3;
  const DiffOperator LL = compose(make_laplacian(n), make_laplacian(n));
  DiffOperator expect(n);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) {
      MultiIndex a(n + 1, 0);
      a[i] += 2;
      a[j] += 2;
      expect.add_term(a, scalar(n, 1));
    }
  CHECK(LL == expect);
  CHECK(LL.max_order() == 4);
}

TEST_CASE("D squared term map") {
  for (unsigned n = 1; n <= 5; ++n) {
    DiffOperator expect(n);
    MultiIndex a(n + 1, 0);
    a[0] = 2;
    expect.add_term(a, scalar(n, 1));
    for (unsigned i = 1; i <= n; ++i) {
      MultiIndex b(n + 1, 0);
      b[0] = 1;
      b[i] = 1;
      expect.add_term(b, Rational(2) * MV::generator(n, i));
      MultiIndex c(n + 1, 0);
      c[i] = 2;
      expect.add_term(c, scalar(n, -1));
    }
    CHECK(power(make_dirac(n), 2) == expect);
  }
}

TEST_CASE("composition agrees with the product of term maps on a polynomial") {
  const unsigned n = 3;
  PointSampler rng(23);
  const PV x = rng.rational_paravector(n);
  const PV a = rng.rational_paravector(n);
  JetFunction<Rational> f = [&](const JP& y) {
    return lift_constant(a).to_multivector() * pow(y, 3).to_multivector() * y.to_multivector();
  };
  const DiffOperator D = make_dirac(n), Db = make_dirac_conj(n);
  CHECK(oracle_apply(compose(D, Db), f, x) == oracle_apply(make_laplacian(n), f, x));
  CHECK(oracle_apply(compose(Db, D), f, x) == oracle_apply(make_laplacian(n), f, x));
}

TEST_CASE("linearity and scalar left factors") {
  const unsigned n = 5;
  PointSampler rng(29);
  const auto [s, x] = rng.kernel_point(n);
  const auto [t, unused] = rng.kernel_point(n);
  (void)unused;
  JetFunction<Rational> f = [&](const JP& y) { return cauchy_left(lift_constant(s), y, CauchyForm::II); };
  JetFunction<Rational> g = [&](const JP& y) { return fueter_sce_kernel(lift_constant(t), y, Side::left); };
  JetFunction<Rational> fg = [&](const JP& y) { return f(y) + g(y); };
  const DiffOperator op = operator_power_compose(make_dirac(n), 1, 1);
  CHECK(oracle_apply(op, fg, x) == oracle_apply(op, f, x) + oracle_apply(op, g, x));
  const Rational c(7, 3);
  JetFunction<Rational> cf = [&](const JP& y) { return Jet<Rational>(c) * f(y); };
  CHECK(oracle_apply(make_dirac(n), cf, x) == c * oracle_apply(make_dirac(n), f, x));
  // a Clifford constant on the left does not commute with D
  const MV e1 = MV::generator(n, 1);
  JetFunction<Rational> ef = [&](const JP& y) {
    return e1.map([](const Rational& r) { return Jet<Rational>(r); }) * f(y);
  };
  CHECK(oracle_apply(make_dirac(n), ef, x) != e1 * oracle_apply(make_dirac(n), f, x));
}

TEST_CASE("oracle errors") {
  const unsigned n = 3;
  const PV s = parse_paravector("0,1,0,0", n);
  const PV x = parse_paravector("0,0,1,0", n);
  JetFunction<Rational> f = [&](const JP& y) { return cauchy_left(lift_constant(s), y, CauchyForm::II); };
  CHECK_THROWS_AS(oracle_apply(make_dirac(n), f, x), ZeroNorm);
  CHECK_THROWS_AS(oracle_apply(make_dirac(5), f, x), DimensionMismatch);
  const auto value = f(seed_point(parse_paravector("1,0,0,0", n), 1));
  CHECK_THROWS_AS(apply_to_jet<Rational>(make_laplacian(n), value), OrderExceeded);
}
