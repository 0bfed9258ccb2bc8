#include "fueter/coeffs.hpp"

#include <array>

#include "fueter/error.hpp"

namespace fueter::coeffs {

namespace {

BigInt pow2(long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

BigInt factorial(long n) {
  if (n < 0) throw InvalidParams("factorial of negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial_guarded(long p, long q) {
  if (p == q) return 1;
  if (q < 0 || p < 0 || q > p) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  return r;
}

BigInt pochhammer_neg(long alpha, long beta) {
  if (alpha < 0 || beta < 0) throw InvalidParams("pochhammer arguments must be nonnegative");
  if (beta > alpha) return 0;
  BigInt r = factorial(alpha) / factorial(alpha - beta);
  return (beta % 2 == 0) ? r : BigInt(-r);
}

long half_dim(long n) {
  if (n < 1 || n % 2 == 0) throw InvalidParams("dimension n must be odd and positive");
  return (n - 1) / 2;
}

BigInt gamma_n(long n) {
  if (n < 3) throw InvalidParams("gamma_n needs odd n >= 3");
  const long h = half_dim(n);
  return pow2(2 * h) * factorial(h) * pochhammer_neg(h, h);
}

BigInt gamma_m(long hn, long m) {
  if (hn < 0 || m < 0) throw InvalidParams("gamma_m needs h_n, m >= 0");
  return pow2(2 * m) * factorial(m) * pochhammer_neg(hn, m);
}

BigInt sigma_nm(long hn, long m) {
  if (m < 1 || m > hn) throw InvalidParams("sigma_{n,m} needs 1 <= m <= h_n");
  return pow2(2 * m - 1) * factorial(m - 1) * pochhammer_neg(hn, m);
}

BigInt d_kernel_prefactor(long hn, long m, long beta) {
  if (beta < 0) throw InvalidParams("beta must be nonnegative");
  const BigInt g = gamma_m(hn, m);
  const BigInt mf = factorial(m);
  if (g % mf != 0) throw InvalidParams("gamma_m not divisible by m!");
  return pow2(beta) * (hn - m) * (g / mf);
}

BigInt dbar_kernel_prefactor(long hn, long m, long beta) {
  if (beta < 0 || m < 0 || hn < 0) throw InvalidParams("prefactor arguments must be nonnegative");
  return pow2(beta) * pow2(2 * m) * pochhammer_neg(hn, m);
}

std::string_view family_name(Family f) {
  static constexpr std::array<std::string_view, 8> names{"a1", "b1", "a2", "b2",
                                                         "A1", "B1", "A2", "B2"};
  return names[static_cast<std::size_t>(f)];
}

bool admissible(Family f, const CoeffParams& p) {
  const auto [h, m, k, j] = p;
  if (h < 0 || m < 0 || k < 0 || j < 0) return false;
  switch (f) {
    case Family::a1:
      return k >= 1 && j <= k - 1 && 2 * k + 1 + m <= h;
    case Family::b1:
      return j <= k && 2 * k + 1 + m <= h;
    case Family::a2:
    case Family::b2:
      return k >= 1 && j <= k - 1 && 2 * k + m <= h;
    case Family::A1:
    case Family::B1:
      return j <= k && 2 * k + 1 + m <= h;
    case Family::A2:
      return k >= 1 && j <= k && 2 * k + m <= h;
    case Family::B2:
      return k >= 1 && j <= k - 1 && 2 * k + m <= h;
  }
  return false;
}

BigInt coefficient(Family f, const CoeffParams& p) {
  if (!admissible(f, p)) {
    throw InvalidParams(std::string("coefficient ") + std::string(family_name(f)) +
                        " outside its admissible range");
  }
  const auto [h, m, k, j] = p;
  const auto& C = binomial_guarded;
  switch (f) {
    case Family::a1:
      return pow2(2 * j + 1) * factorial(m + k + 1 + j) * factorial(k - j - 1) *
             C(k + j, 2 * j + 1) * C(h - m - k - j - 2, h - m - 2 * k - 1);
    case Family::b1:
      return pow2(2 * j) * factorial(k - j) * factorial(m + k + j) *
             C(h - m - k - j - 1, h - m - 2 * k - 1) * C(k + j, 2 * j);
    case Family::a2:
      return pow2(2 * j) * factorial(m + k + j) * factorial(k - j - 1) * C(k + j - 1, 2 * j) *
             C(h - m - k - 1 - j, h - m - 2 * k);
    case Family::b2:
      return pow2(2 * j + 1) * factorial(k - j - 1) * factorial(m + k + j) *
             C(h - m - k - 1 - j, h - m - 2 * k) * C(k + j, 2 * j + 1);
    case Family::A1:
      return pow2(2 * j + 1) * factorial(m + k + 1 + j) * factorial(k - j) *
             C(k + j + 1, 2 * j + 1) * C(h - m - k - j - 2, h - m - 2 * k - 2);
    case Family::B1:
      return pow2(2 * j) * factorial(k - j + 1) * factorial(m + k + j) *
             C(h - m - k - j - 1, h - m - 2 * k - 2) * C(k + j, 2 * j);
    case Family::A2:
      return pow2(2 * j) * factorial(m + k + j) * factorial(k - j) * C(k + j, 2 * j) *
             C(h - m - k - 1 - j, h - m - 2 * k - 1);
    case Family::B2:
      return pow2(2 * j + 1) * factorial(k - j) * factorial(m + k + j) *
             C(h - m - k - 1 - j, h - m - 2 * k - 1) * C(k + j, 2 * j + 1);
  }
  throw InvalidParams("unknown coefficient family");
}

std::string_view identity_name(Identity id) {
  static constexpr std::array<std::string_view, 9> names{"c1", "c2", "c3", "c4", "c5",
                                                         "C1", "C2", "C3", "C4"};
  return names[static_cast<std::size_t>(id)];
}

std::optional<Identity> identity_from_name(std::string_view name) {
  for (Identity id : all_identities())
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

std::vector<Identity> all_identities() {
  return {Identity::c1, Identity::c2, Identity::c3, Identity::c4, Identity::c5,
          Identity::C1, Identity::C2, Identity::C3, Identity::C4};
}

bool identity_admissible(Identity id, const CoeffParams& p) {
  const auto [h, m, k, j] = p;
  if (h < 0 || m < 0 || k < 0 || j < 0) return false;
  switch (id) {
    case Identity::c1:
    case Identity::c3:
    case Identity::c5:
      return k >= 1 && 2 * k + 1 + m <= h && j == 0;
    case Identity::c2:
      return k >= 1 && 2 * k + 1 + m <= h && j <= k - 2;
    case Identity::c4:
      return k >= 1 && 2 * k + 1 + m <= h && j >= 1 && j <= k - 1;
    case Identity::C1:
    case Identity::C3:
      return 2 * k + 4 + m <= h && j <= k;
    case Identity::C2:
    case Identity::C4:
      return 2 * k + 4 + m <= h && j == 0;
  }
  return false;
}

IdentityValue evaluate_identity(Identity id, const CoeffParams& p) {
  if (!identity_admissible(id, p)) {
    throw InvalidParams(std::string("identity ") + std::string(identity_name(id)) +
                        " outside its admissible range");
  }
  const auto [h, m, k, j] = p;
  auto at = [&](long jj, long kk) { return CoeffParams{h, m, kk, jj}; };
  switch (id) {
    case Identity::c1:
      return {2 * (m + 2 * k) * b2(at(k - 1, k)), 2 * a1(at(k - 1, k))};
    case Identity::c2:
      return {(-2 * j - 2) * a2(at(j + 1, k)) + 2 * (m + k + j + 1) * b2(at(j, k)),
              2 * a1(at(j, k))};
    case Identity::c3:
      return {2 * a2(at(0, k)) * (h - m - k) - b2(at(0, k)), 2 * b1(at(0, k))};
    case Identity::c4:
      return {2 * a2(at(j, k)) * (h - m - j - k) + 4 * (m + k + j) * b2(at(j - 1, k)) -
                  (2 * j + 1) * b2(at(j, k)),
              2 * b1(at(j, k))};
    case Identity::c5:
      return {4 * (m + 2 * k) * b2(at(k - 1, k)), 2 * b1(at(k, k))};
    case Identity::C1:
      return {-(2 * j + 1) * a1(at(j, k + 1)) + 2 * (m + k + j + 2) * b1(at(j, k + 1)),
              2 * a2(at(j, k + 2))};
    case Identity::C2:
      return {2 * (m + 2 * k + 3) * b1(at(k + 1, k + 1)), 2 * a2(at(k + 1, k + 2))};
    case Identity::C3:
      return {2 * (h - m - k - 2 - j) * a1(at(j, k + 1)) + 4 * (m + k + j + 2) * b1(at(j, k + 1)) -
                  2 * (j + 1) * b1(at(j + 1, k + 1)),
              2 * b2(at(j, k + 2))};
    case Identity::C4:
      return {4 * (m + 2 * k + 3) * b1(at(k + 1, k + 1)), 2 * b2(at(k + 1, k + 2))};
  }
  throw InvalidParams("unknown identity");
}

bool check_appendix_identity(Identity id, const CoeffParams& p) {
  return evaluate_identity(id, p).holds();
}

std::vector<CoeffParams> admissible_parameters(Identity id, long hn) {
  std::vector<CoeffParams> out;
  for (long m = 0; m <= hn; ++m)
    for (long k = 0; k <= hn; ++k)
      for (long j = 0; j <= hn; ++j) {
        const CoeffParams p{hn, m, k, j};
        if (identity_admissible(id, p)) out.push_back(p);
      }
  return out;
}

bool check_stifel(long n, long k) {
  return binomial_guarded(n, k) == binomial_guarded(n - 1, k) + binomial_guarded(n - 1, k - 1);
}

}  // namespace fueter::coeffs
