#include "ordercalc/identities.hpp"

namespace ordercalc {

const char* identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Noncom: return "noncom";
    case IdentityKind::Derivative: return "derivative";
    case IdentityKind::Delta: return "delta";
    case IdentityKind::StirlingRel: return "stirling_rel";
    case IdentityKind::GeneralRelNegM: return "general_rel_neg_m";
    case IdentityKind::GeneralRelPosM: return "general_rel_pos_m";
    case IdentityKind::AlphaOdd: return "alpha_odd";
  }
  return "?";
}

namespace {

IdentityReport make_report(IdentityKind kind, unsigned n, MPoly residual) {
  IdentityReport r;
  r.kind = kind;
  r.n = n;
  r.holds = residual.is_zero();
  r.residual = std::move(residual);
  return r;
}

Rational half_pow_weight(unsigned k) { return Rational{BigInt(1), pow2(k)}; }

}  // namespace

IdentityReport verify_noncom(unsigned n) {
  const MPoly N = MPoly::n();
  const MPoly t = MPoly::t();
  const MPoly s = t - MPoly::eps();

  MPoly lhs, rhs;
  for (unsigned k = 0; k <= n; ++k) {
    const BigInt b = binomial(n, k);
    const Rational c{factorial(k) * b * b};
    lhs += t.pow(k) * falling_factorial(N, n - k) * c;
    rhs += s.pow(k) * rising_factorial(N + MPoly::eps(), n - k) * c;
  }
  return make_report(IdentityKind::Noncom, n, lhs - rhs);
}

IdentityReport verify_derivative_identity(unsigned n, bool symbolic_eps) {
  if (n < 1) throw Error("verify_derivative_identity requires n >= 1");
  const MPoly N = MPoly::n();
  const MPoly half_eps = MPoly::eps() * Rational(1, 2);

  MPoly residual;
  for (unsigned k = 1; k <= n; ++k) {
    const BigInt b = binomial(n, k);
    const Rational c{factorial(k) * k * b * b};
    MPoly bracket = falling_factorial(N, n - k) +
                    rising_factorial(N + MPoly::eps(), n - k) * Rational(k % 2 ? -1 : 1);
    residual += half_eps.pow(k - 1) * bracket * c;
  }
  if (!symbolic_eps) residual = residual.substitute(Var::Eps, MPoly{1});

  IdentityReport r = make_report(IdentityKind::Derivative, n, std::move(residual));
  r.symbolic_eps = symbolic_eps;
  return r;
}

IdentityReport verify_delta_identity(unsigned n, bool symbolic_eps) {
  if (n < 1) throw Error("verify_delta_identity requires n >= 1");
  const MPoly N = MPoly::n();
  const MPoly half_eps = MPoly::eps() * Rational(1, 2);

  MPoly residual;
  for (unsigned k = 0; k < n; ++k) {  // the k = n term carries the factor n-k = 0
    const BigInt b = binomial(n, k);
    const Rational c{factorial(k) * (n - k) * b * b};
    const MPoly shifted_base = N + MPoly::eps() * Rational(static_cast<long>(n - k));
    MPoly bracket = falling_factorial(N, n - k - 1) -
                    falling_factorial(shifted_base, n - k - 1) * Rational(k % 2 ? -1 : 1);
    residual += half_eps.pow(k) * bracket * c;
  }
  if (!symbolic_eps) residual = residual.substitute(Var::Eps, MPoly{1});

  IdentityReport r = make_report(IdentityKind::Delta, n, std::move(residual));
  r.symbolic_eps = symbolic_eps;
  return r;
}

IdentityReport verify_stirling_relation(unsigned n, unsigned j) {
  if (n < 1) throw Error("verify_stirling_relation requires n >= 1");
  const long target = static_cast<long>(n) - 2 * static_cast<long>(j) - 1;

  Rational sum;
  for (unsigned k = 0; k <= 2 * j + 1; ++k) {
    const BigInt bb = binomial(static_cast<long>(n) - 1, k) * binomial(n, k);
    if (bb == 0) break;
    sum += half_pow_weight(k) * Rational{factorial(k) * bb} *
           Rational{stirling_first(static_cast<long>(n) - k, target)};
  }

  IdentityReport r = make_report(IdentityKind::StirlingRel, n, MPoly{sum});
  r.j = j;
  r.trivial = target < 0;
  return r;
}

IdentityReport verify_general_relation(unsigned n, long m, unsigned i) {
  if (n < 1) throw Error("verify_general_relation requires n >= 1");

  const bool neg_family = m < 0;
  if (neg_family && m < -static_cast<long>(n) + 1)
    throw Error("m out of range: first family requires -n+1 <= m <= -1, here -n+1 = " +
                std::to_string(-static_cast<long>(n) + 1));

  // Both families share the shape
  //   {(-1)^(par - i) + 1} sum_{k<=top-i} w(k) s(top-k, i)
  //   + sum_{l=i+1}^{top} base^(l-i) C(l-1, i-1) sum_{k<=top-l} w(k) s(top-k, l)
  // with w(k) = (k!/2^k) C(n+m, k) C(n, k); the first family has
  // top = n+m+1, par = n+m, base = m+1, the second top = n+1, par = n, base = 1-m.
  const long top = neg_family ? static_cast<long>(n) + m + 1 : static_cast<long>(n) + 1;
  const long par = neg_family ? static_cast<long>(n) + m : static_cast<long>(n);
  const BigInt base = neg_family ? BigInt(m + 1) : BigInt(1 - m);

  if (i < 1 || static_cast<long>(i) > top)
    throw Error("index i out of range: valid range is 1.." + std::to_string(top));

  const auto weight = [&](unsigned k) {
    return half_pow_weight(k) *
           Rational{factorial(k) * binomial(static_cast<long>(n) + m, k) * binomial(n, k)};
  };
  const auto inner_sum = [&](long level) {
    Rational sum;
    for (long k = 0; k <= top - level; ++k)
      sum += weight(static_cast<unsigned>(k)) * Rational{stirling_first(top - k, level)};
    return sum;
  };

  const bool even_gap = ((par - static_cast<long>(i)) % 2 + 2) % 2 == 0;
  Rational total;
  if (even_gap) total += Rational(2) * inner_sum(i);
  for (long l = i + 1; l <= top; ++l) {
    BigInt bp;
    mpz_pow_ui(bp.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(l - i));
    total += Rational{bp * binomial(l - 1, static_cast<long>(i) - 1)} * inner_sum(l);
  }

  IdentityReport r = make_report(
      neg_family ? IdentityKind::GeneralRelNegM : IdentityKind::GeneralRelPosM, n, MPoly{total});
  r.m = m;
  r.i = i;
  return r;
}

IdentityReport verify_alpha_odd(unsigned n) {
  if (n < 1) throw Error("verify_alpha_odd requires n >= 1");
  MPoly residual;
  for (unsigned i = 1; i + 1 <= n; i += 2)
    residual += MPoly::monomial(Monomial{i, 0, 0}, alpha(n, i));
  return make_report(IdentityKind::AlphaOdd, n, std::move(residual));
}

}  // namespace ordercalc
