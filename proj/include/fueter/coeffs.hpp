#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fueter/rational.hpp"

namespace fueter::coeffs {

/// n!; throws InvalidParams for n < 0.
BigInt factorial(long n);

/// Binomial coefficient with the conventions the kernel formulas rely on:
/// C(p, p) = 1 for every p (including negative p), C(p, q) = 0 when q < 0 or
/// q > p >= 0, and 0 for any other negative p.
BigInt binomial_guarded(long p, long q);

/// (-alpha)_beta = (-1)^beta alpha! / (alpha - beta)!, and 0 once beta > alpha.
BigInt pochhammer_neg(long alpha, long beta);

/// h_n = (n - 1) / 2 for odd n >= 1; throws InvalidParams otherwise.
long half_dim(long n);

/// 4^{h_n} h_n! (-h_n)_{h_n}
BigInt gamma_n(long n);
/// 4^m m! (-h_n)_m
BigInt gamma_m(long hn, long m);
/// 2^{2m-1} (m-1)! (-h_n)_m, 1 <= m <= h_n
BigInt sigma_nm(long hn, long m);

/// 2^beta (h_n - m) gamma_m / m!, the prefactor of the D^beta Delta^m kernel.
BigInt d_kernel_prefactor(long hn, long m, long beta);
/// 2^beta 4^m (-h_n)_m, the prefactor of the D-bar^beta Delta^m kernel.
BigInt dbar_kernel_prefactor(long hn, long m, long beta);

/// Indices of one coefficient: h_n, the Laplacian power m, k (k1 or k2) and j.
struct CoeffParams {
  long hn = 0;
  long m = 0;
  long k = 0;
  long j = 0;
};

/// Coefficient families of the D^beta Delta^m kernel
/// (odd beta = 2k+1: a1, b1; even beta = 2k: a2, b2) and of the
/// conjugate D-bar^beta Delta^m kernel (A1, B1, A2, B2).
enum class Family { a1, b1, a2, b2, A1, B1, A2, B2 };

std::string_view family_name(Family f);
/// Whether (k, j, m, h_n) is inside the range in which the family is used.
bool admissible(Family f, const CoeffParams& p);
/// Literal formula; throws InvalidParams when not admissible.
BigInt coefficient(Family f, const CoeffParams& p);

inline BigInt a1(const CoeffParams& p) { return coefficient(Family::a1, p); }
inline BigInt b1(const CoeffParams& p) { return coefficient(Family::b1, p); }
inline BigInt a2(const CoeffParams& p) { return coefficient(Family::a2, p); }
inline BigInt b2(const CoeffParams& p) { return coefficient(Family::b2, p); }
inline BigInt A1(const CoeffParams& p) { return coefficient(Family::A1, p); }
inline BigInt B1(const CoeffParams& p) { return coefficient(Family::B1, p); }
inline BigInt A2(const CoeffParams& p) { return coefficient(Family::A2, p); }
inline BigInt B2(const CoeffParams& p) { return coefficient(Family::B2, p); }

/// Recurrences linking the odd and even D^beta coefficient families: c1..c5
/// step from beta = 2k to 2k+1 (k = k2), C1..C4 from 2k1+3 to 2k1+4 (k = k1).
enum class Identity { c1, c2, c3, c4, c5, C1, C2, C3, C4 };

std::string_view identity_name(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);
std::vector<Identity> all_identities();

struct IdentityValue {
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

/// True iff the identity's coefficients are all used by the induction at
/// (h_n, m, k, j): the target beta must satisfy beta + m <= h_n.
bool identity_admissible(Identity id, const CoeffParams& p);
/// Exact evaluation of both sides; throws InvalidParams outside the range.
IdentityValue evaluate_identity(Identity id, const CoeffParams& p);
bool check_appendix_identity(Identity id, const CoeffParams& p);
/// Every admissible parameter tuple with the given h_n.
std::vector<CoeffParams> admissible_parameters(Identity id, long hn);

/// C(n, k) == C(n-1, k) + C(n-1, k-1)
bool check_stifel(long n, long k);

}  // namespace fueter::coeffs
