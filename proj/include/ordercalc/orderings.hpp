#pragma once

#include <utility>
#include <vector>

#include "ordercalc/difference.hpp"
#include "ordercalc/weyl.hpp"

namespace ordercalc {

/// Normal-ordered n-th power of the number operator: N^(falling n).
MPoly normal_power(unsigned n);

/// Anti-normal-ordered n-th power: (N + eps)(N + 2 eps) ... (N + n eps).
MPoly antinormal_power(unsigned n);

/// Weyl-ordered ad^n a^m expanded over normal products:
/// sum_k (eps^k k! / 2^k) C(n,k) C(m,k) ad^(n-k) a^(m-k).
NormalForm weyl_from_normal(unsigned n, unsigned m);

/// The anti-normal expansion of the same operator, kept as words:
/// sum_k ((-eps)^k k! / 2^k) C(n,k) C(m,k) a^(m-k) ad^(n-k).
OperatorExpr weyl_antinormal_expansion(unsigned n, unsigned m);

/// weyl_antinormal_expansion normalized; must equal weyl_from_normal (the
/// equality is a test target, not an assumption of this routine).
NormalForm weyl_from_antinormal(unsigned n, unsigned m);

/// Coefficients of an operator over the s-ordered product basis {ad^p a^q}_s.
/// The order parameter follows the s = +1 / 0 / -1 convention for normal /
/// Weyl / anti-normal and may be any polynomial (typically a rational or t).
struct SOrderCoeffs {
  MPoly order_param;
  PQTermMap coeffs;

  friend bool operator==(const SOrderCoeffs&, const SOrderCoeffs&) = default;
};

/// The normal form read as s = 1 coefficients.
SOrderCoeffs sorder_from_normal(const NormalForm& nf);

/// Re-express over the target-order basis:
/// {ad^p a^q}_s = sum_k k! C(p,k) C(q,k) ((t - s)/2)^k {ad^(p-k) a^(q-k)}_t.
SOrderCoeffs s_transform(const SOrderCoeffs& src, const MPoly& target_s);

/// Coefficient alpha(n, i) of the symmetric Weyl expression:
/// (1/2) sum_k (k!/2^k) C(n,k) C(n-1,k) s(n-k, n-i). Vanishes for odd i.
Rational alpha(unsigned n, unsigned i);

/// sum_j alpha(n, 2j) { N^(n-2j) + (N+1)^(n-2j) } with eps fixed to 1.
struct SymmetricForm {
  unsigned n = 0;
  std::vector<std::pair<unsigned, Rational>> terms;  // (degree, coefficient), degrees desc by 2

  /// Expand to a polynomial in N.
  MPoly expand() const;

  /// Value of the expansion at integer N = k.
  Rational eval(long k) const;

  friend bool operator==(const SymmetricForm&, const SymmetricForm&) = default;
};

SymmetricForm weyl_symmetric(unsigned n);

}  // namespace ordercalc
