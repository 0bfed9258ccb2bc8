#include "doctest.h"
#include "fueter/jet.hpp"
#include "fueter/sampling.hpp"

using namespace fueter;
using J = Jet<Rational>;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).denominator() == BigInt(2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroNorm);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  PointSampler rng(3);
  for (int t = 0; t < 50; ++t) {
    const BigInt big = BigInt("123456789012345678901234567890") * rng.integer(1, 1000);
    const Rational a(big + rng.integer(-50, 50), BigInt(rng.integer(1, 97)));
    const Rational b(rng.integer(-100, 100), big);
    const Rational c = rng.small_rational();
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("jet seed coordinate") {
  const auto L = JetLayout::get(2, 2);
  const J t0 = J::seed_coordinate(L, 0, Rational(3));
  CHECK(t0.constant_term() == Rational(3));
  CHECK(t0.coefficient(MultiIndex{1, 0}) == Rational(1));
  CHECK(t0.coefficient(MultiIndex{0, 1}) == Rational(0));
  const J sq = t0 * t0;
  CHECK(sq.constant_term() == Rational(9));
  CHECK(sq.coefficient(MultiIndex{1, 0}) == Rational(6));
  CHECK(sq.coefficient(MultiIndex{2, 0}) == Rational(1));
  const J c = J::seed_coordinate(JetLayout::get(2, 0), 0, Rational(3));
  CHECK(c.coefficients().size() == 1);
  CHECK_THROWS(J::seed_coordinate(L, 2, Rational(1)));
}

TEST_CASE("jet multiplication and truncation") {
  const auto L = JetLayout::get(1, 2);
  const J t = J::seed_coordinate(L, 0, Rational(0));
  const J p = (J(1) + t) * (J(1) - t);
  CHECK(p.coefficient(MultiIndex{0}) == Rational(1));
  CHECK(p.coefficient(MultiIndex{1}) == Rational(0));
  CHECK(p.coefficient(MultiIndex{2}) == Rational(-1));
  const J scaled = J(Rational(3)) * t;
  CHECK(scaled.coefficient(MultiIndex{1}) == Rational(3));
  const auto L1 = JetLayout::get(1, 1);
  const J u = J::seed_coordinate(L1, 0, Rational(0));
  CHECK((u * u).is_exact_zero());
  CHECK_THROWS_AS(t * u, DimensionMismatch);
}

TEST_CASE("jet reciprocal") {
  const auto L = JetLayout::get(1, 3);
  const J t = J::seed_coordinate(L, 0, Rational(0));
  const J r = (J(1) - t).reciprocal();
  for (unsigned k = 0; k <= 3; ++k) CHECK(r.coefficient(MultiIndex{k}) == Rational(1));
  CHECK(J(Rational(2)).reciprocal().constant_term() == Rational(1, 2));
  CHECK(J(Rational(2)).reciprocal().is_constant());
  CHECK_THROWS_AS(t.reciprocal(), NonInvertibleConstantTerm);
  CHECK_THROWS_AS(Jet<double>(1e-20).reciprocal(), NonInvertibleConstantTerm);
}

TEST_CASE("jet derivatives") {
  const auto L = JetLayout::get(2, 2);
  const J x0 = J::seed_coordinate(L, 0, Rational(1));
  const J x1 = J::seed_coordinate(L, 1, Rational(2));
  const J f = x0 * x0 + x1 * x1;
  CHECK(f.derivative(MultiIndex{1, 0}) == Rational(2));
  CHECK(f.derivative(MultiIndex{0, 1}) == Rational(4));
  CHECK(f.derivative(MultiIndex{2, 0}) == Rational(2));
  CHECK(f.derivative(MultiIndex{1, 1}) == Rational(0));
  CHECK_THROWS_AS(f.derivative(MultiIndex{3, 0}), OrderExceeded);
}

TEST_CASE("jets reproduce polynomial derivatives") {
  // f = x0^3 x1 - 2 x0 x1^2 + 5 at (2, -1), order 4
  const auto L = JetLayout::get(2, 4);
  const J x0 = J::seed_coordinate(L, 0, Rational(2));
  const J x1 = J::seed_coordinate(L, 1, Rational(-1));
  const J f = x0 * x0 * x0 * x1 - J(2) * x0 * x1 * x1 + J(5);
  CHECK(f.constant_term() == Rational(-8 - 4 + 5));
  CHECK(f.derivative(MultiIndex{1, 0}) == Rational(3 * 4 * -1 - 2 * 1));
  CHECK(f.derivative(MultiIndex{0, 1}) == Rational(8 - 2 * 2 * 2 * -1));
  CHECK(f.derivative(MultiIndex{2, 1}) == Rational(6 * 2));
  CHECK(f.derivative(MultiIndex{3, 1}) == Rational(6));
  CHECK(f.derivative(MultiIndex{1, 2}) == Rational(-4));
  CHECK(f.derivative(MultiIndex{4, 0}) == Rational(0));
}

TEST_CASE("jet ring axioms up to truncation") {
  const auto L = JetLayout::get(3, 4);
  PointSampler rng(5);
  auto random_jet = [&] {
    J out = J(rng.small_rational());
    for (std::size_t v = 0; v < 3; ++v)
      out = out + J(rng.small_rational()) * J::seed_coordinate(L, v, rng.small_rational()) *
                      J::seed_coordinate(L, (v + 1) % 3, rng.small_rational());
    return out;
  };
  for (int t = 0; t < 5; ++t) {
    const J a = random_jet(), b = random_jet(), c = random_jet();
    CHECK((a * b - b * a).is_exact_zero());
    CHECK(((a * b) * c - a * (b * c)).is_exact_zero());
    CHECK((a * (b + c) - (a * b + a * c)).is_exact_zero());
    if (!a.constant_term().is_zero()) {
      CHECK((a * a.reciprocal() - J(1)).is_exact_zero());
      CHECK((a.reciprocal() * a - J(1)).is_exact_zero());
    }
  }
}

TEST_CASE("jet layout ordering") {
  const auto L = JetLayout::get(3, 3);
  CHECK(L->size() == 20);
  for (std::size_t i = 0; i < L->size(); ++i) {
    const MultiIndex a = L->exponents(i);
    CHECK(L->index_of(a) == i);
    if (i > 0) CHECK(L->degree(i) >= L->degree(i - 1));
  }
  CHECK(JetLayout::get(3, 3).get() == L.get());
}
