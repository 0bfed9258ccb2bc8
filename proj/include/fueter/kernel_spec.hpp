#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fueter/diffop.hpp"
#include "fueter/kernels.hpp"

namespace fueter {

enum class Flavor {
  cauchy_I,
  cauchy_II,
  pseudo_cauchy,
  fueter_sce,
  d_beta_delta_m,
  dbar_beta_delta_m,
  harmonic,
  laplacian_power,
  polyanalytic,
  lemma,
  catalog,
};

std::string_view flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(std::string_view name);
std::vector<Flavor> all_flavors();

std::string_view side_name(Side s);
Side side_from_name(std::string_view name);
std::string_view lemma_name(LemmaId id);
LemmaId lemma_from_name(std::string_view name);

/// Identifies one closed-form kernel. m is the Laplacian power, or l for the
/// polyanalytic flavor; formula and k belong to the lemma flavor.
struct KernelSpec {
  unsigned n = 3;
  Side side = Side::left;
  Flavor flavor = Flavor::cauchy_II;
  long m = 0;
  long beta = 0;
  LemmaId lemma = LemmaId::l_one;
  int formula = 1;
  long k = 0;
  std::string catalog_id;

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

/// Throws InvalidParams when the parameters fall outside the flavor's range.
void validate(const KernelSpec& spec);
/// Stable human-readable key, e.g. "d-beta-delta-m n=5 m=0 beta=1".
std::string describe(const KernelSpec& spec);

/// One entry of the literature catalog: the operator D^a D-bar^b Delta^c
/// applied to the form II left Cauchy kernel and the formula as printed.
struct CatalogEntry {
  std::string id;
  unsigned n;
  unsigned dirac_power;
  unsigned dirac_conj_power;
  unsigned laplacian_power;
  std::string operator_text;
  std::string printed;
  /// Oracle-confirmed formula for the entries whose printed form fails.
  std::string alternative;
  bool expected_match;
};

const std::vector<CatalogEntry>& catalog_entries();
/// Throws InvalidParams for an unknown id.
const CatalogEntry& catalog_entry(std::string_view id);
DiffOperator catalog_operator(const CatalogEntry& entry);

struct CatalogFixture {
  KernelSpec spec;
  std::string printed;
  bool expected_match;
};
CatalogFixture catalog_fixture(std::string_view id);

/// The operator L with L(S_L^{-1}) equal to the kernel, when there is one:
/// identity for the Cauchy kernels, Delta^{h_n} for F_L^n, D^beta Delta^m,
/// D-bar^beta Delta^m, D Delta^{m-1} (harmonic), Delta^m (laplacian power),
/// D-bar^{h_n-l} Delta^l (polyanalytic), and the catalog operators.
std::optional<DiffOperator> generating_operator(const KernelSpec& spec);

template <class R>
Multivector<R> catalog_printed(std::string_view id, const Paravector<R>& s, const Paravector<R>& x,
                               double tol = kDefaultTolerance) {
  const CatalogEntry& e = catalog_entry(id);
  if (s.dim() != e.n) throw DimensionMismatch("catalog entry has a fixed dimension");
  const KernelTerms<R> K(s, x, tol);
  auto c = [](long v) { return ring_integer<R>(v); };
  if (id == "q-D") return c(-2) * K.q_neg(1).to_multivector();
  if (id == "q-Dbar") {
    const Multivector<R> F = fueter_sce_kernel(s, x, Side::left, tol);
    return -(F * s) + x.scalar() * F;
  }
  if (id == "n5-D") return c(-4) * K.q_neg(1).to_multivector();
  if (id == "n5-DeltaD") return c(16) * K.q_neg(2).to_multivector();
  if (id == "n5-Delta") return c(8) * (K.s_minus_xbar() * K.q_neg(2));
  if (id == "n5-Dbar") return c(4) * K.sx(K.qt(2, 1)) + c(2) * K.q_neg(1).to_multivector();
  if (id == "n5-D2") return c(16) * K.qt(2, 1) - c(8) * (K.s_minus_xbar() * K.q_neg(2));
  if (id == "n5-DeltaDbar") return c(-64) * K.sx(K.qt(3, 1));
  return c(32) * K.sx(K.qt(3, 3));  // n5-Dbar2
}

/// Oracle-confirmed replacement for a flagged entry; the printed form otherwise.
template <class R>
Multivector<R> catalog_alternative(std::string_view id, const Paravector<R>& s, const Paravector<R>& x,
                                   double tol = kDefaultTolerance) {
  const CatalogEntry& e = catalog_entry(id);
  if (e.expected_match) return catalog_printed(id, s, x, tol);
  if (s.dim() != e.n) throw DimensionMismatch("catalog entry has a fixed dimension");
  const KernelTerms<R> K(s, x, tol);
  auto c = [](long v) { return ring_integer<R>(v); };
  if (id == "n5-Delta") return c(-8) * (K.s_minus_xbar() * K.q_neg(2));
  if (id == "n5-D2") return c(8) * (K.s_minus_xbar() * K.q_neg(2)) - c(16) * K.qt(2, 1);
  return c(32) * K.sx(K.qt(3, 2));  // n5-Dbar2
}

template <class R>
Multivector<R> evaluate(const KernelSpec& spec, const Paravector<R>& s, const Paravector<R>& x,
                        double tol = kDefaultTolerance) {
  validate(spec);
  if (s.dim() != spec.n || x.dim() != spec.n)
    throw DimensionMismatch("point dimension does not match the kernel dimension");
  switch (spec.flavor) {
    case Flavor::cauchy_I:
      return cauchy_kernel(s, x, spec.side, CauchyForm::I, tol);
    case Flavor::cauchy_II:
      return cauchy_kernel(s, x, spec.side, CauchyForm::II, tol);
    case Flavor::pseudo_cauchy:
      return pseudo_cauchy_pow(s, x, spec.m, tol);
    case Flavor::fueter_sce:
      return fueter_sce_kernel(s, x, spec.side, tol);
    case Flavor::d_beta_delta_m:
      return d_beta_delta_m_kernel(s, x, spec.m, spec.beta, tol);
    case Flavor::dbar_beta_delta_m:
      return dbar_beta_delta_m_kernel(s, x, spec.m, spec.beta, tol);
    case Flavor::harmonic:
      return special_case_kernel(s, x, SpecialCase::new1, spec.m, tol);
    case Flavor::laplacian_power:
      return special_case_kernel(s, x, SpecialCase::appL, spec.m, tol);
    case Flavor::polyanalytic:
      return special_case_kernel(s, x, SpecialCase::polyapp, spec.m, tol);
    case Flavor::lemma:
      return lemma_rhs(s, x, spec.lemma, spec.formula, spec.m, spec.k, tol);
    case Flavor::catalog:
      return catalog_printed(spec.catalog_id, s, x, tol);
  }
  throw InvalidParams("unknown kernel flavor");
}

/// Value of a kernel at a point, as returned by the CLI.
template <class R>
struct KernelValue {
  Multivector<R> value;
  KernelSpec spec;
  Paravector<R> s;
  Paravector<R> x;
};

}  // namespace fueter
