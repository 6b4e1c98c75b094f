#pragma once

#include <optional>

#include "ordercalc/orderings.hpp"

namespace ordercalc {

enum class IdentityKind {
  Noncom,
  Derivative,
  Delta,
  StirlingRel,
  GeneralRelNegM,
  GeneralRelPosM,
  AlphaOdd,
};

const char* identity_name(IdentityKind kind);

/// Outcome of one verification at one parameter point. `holds` is true iff
/// the residual is the zero polynomial. `trivial` marks parameter points
/// where every term vanishes by the Stirling conventions alone.
struct IdentityReport {
  IdentityKind kind;
  unsigned n = 0;
  std::optional<long> m;
  std::optional<unsigned> i;
  std::optional<unsigned> j;
  bool symbolic_eps = false;
  bool holds = false;
  bool trivial = false;
  MPoly residual;
};

/// Difference of the t-weighted falling-factorial sum and the (t - eps)-weighted
/// rising-factorial sum; fully symbolic in N, eps, t.
IdentityReport verify_noncom(unsigned n);

/// sum_k (k! k / 2^(k-1)) C(n,k)^2 { N^(fall n-k) + (-1)^k (N+1)^(rise n-k) } = 0
/// at eps = 1; with symbolic_eps the 1/2^(k-1) weight becomes (eps/2)^(k-1)
/// and the rising base is N + eps.
IdentityReport verify_derivative_identity(unsigned n, bool symbolic_eps = false);

/// sum_k (k! (n-k) / 2^k) C(n,k)^2 { N^(fall n-k-1) - (-1)^k (N+n-k)^(fall n-k-1) } = 0
/// at eps = 1; symbolic_eps generalizes the weight to (eps/2)^k and the shifted
/// base to N + (n-k) eps.
IdentityReport verify_delta_identity(unsigned n, bool symbolic_eps = false);

/// sum_{k=0}^{2j+1} (k!/2^k) C(n-1,k) C(n,k) s(n-k, n-2j-1) = 0.
/// Points with n-2j-1 < 0 hold vacuously and are flagged trivial.
IdentityReport verify_stirling_relation(unsigned n, unsigned j);

/// The two-family Stirling relations. m < 0 selects the first family
/// (valid for -n+1 <= m <= -1, index 1 <= i <= n+m+1); m >= 0 selects the
/// second (index 1 <= i <= n+1). Out-of-range m or i throws Error naming the
/// valid range.
IdentityReport verify_general_relation(unsigned n, long m, unsigned i);

/// alpha(n, i) = 0 for every odd i <= n-1; the residual collects each value
/// as the coefficient of N^i.
IdentityReport verify_alpha_odd(unsigned n);

}  // namespace ordercalc
