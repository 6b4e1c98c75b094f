#pragma once

#include <vector>

#include "ordercalc/mpoly.hpp"

namespace ordercalc {

/// base (base - eps) (base - 2 eps) ... (base - (n-1) eps); n = 0 gives 1.
MPoly falling_factorial(const MPoly& base, unsigned n);

/// base (base + eps) (base + 2 eps) ... (base + (n-1) eps); n = 0 gives 1.
MPoly rising_factorial(const MPoly& base, unsigned n);

/// Forward difference in N: (p(N + eps) - p(N)) / eps. The division is always
/// exact; a failure indicates an internal bug, not bad input.
MPoly forward_difference(const MPoly& p);

/// Expansion p = sum_k coefficients[k] * N^(falling k) in the falling-factorial
/// basis with symbolic increment eps.
struct FactorialBasisExpansion {
  MPoly increment;
  std::vector<MPoly> coefficients;  // indexed k = 0 .. deg_N(p)

  MPoly reconstruct() const;
};

/// Newton expansion: coefficients[k] = (forward_difference^k p)(0) / k!.
FactorialBasisExpansion newton_expand(const MPoly& p);

/// Signed Stirling number of the first kind. Out-of-range arguments give 0
/// (s(n,0) = 0 for n >= 1, s(j,i) = 0 for j < i); s(0,0) = 1.
BigInt stirling_first(long n, long i);

/// Row s(n, 1) .. s(n, n) of the Stirling triangle, n >= 1.
std::vector<BigInt> stirling_row(unsigned n);

enum class FactorialKind { Falling, Rising };

/// Monomial coefficients of x^(falling n) or x^(rising n) with symbolic eps:
/// entry j is the coefficient of x^(j+1), for j = 0 .. n-1 (n >= 1).
/// Falling: s(n,i) eps^(n-i); rising: (-1)^(n-i) s(n,i) eps^(n-i).
std::vector<MPoly> factorial_monomial_convert(unsigned n, FactorialKind kind);

}  // namespace ordercalc
