#include "ordercalc/orderings.hpp"

#include <algorithm>

namespace ordercalc {

MPoly normal_power(unsigned n) { return falling_factorial(MPoly::n(), n); }

MPoly antinormal_power(unsigned n) {
  return rising_factorial(MPoly::n() + MPoly::eps(), n);
}

NormalForm weyl_from_normal(unsigned n, unsigned m) {
  NormalForm out;
  for (unsigned k = 0; k <= std::min(n, m); ++k) {
    const Rational f{factorial(k) * binomial(n, k) * binomial(m, k), pow2(k)};
    out.add_term({n - k, m - k}, MPoly::monomial(Monomial{0, k, 0}, f));
  }
  return out;
}

OperatorExpr weyl_antinormal_expansion(unsigned n, unsigned m) {
  OperatorExpr out;
  for (unsigned k = 0; k <= std::min(n, m); ++k) {
    Rational f{factorial(k) * binomial(n, k) * binomial(m, k), pow2(k)};
    if (k % 2 == 1) f = -f;
    Word w;
    w.letters.insert(w.letters.end(), m - k, Letter::Annihilate);
    w.letters.insert(w.letters.end(), n - k, Letter::Create);
    out.add_term(std::move(w), MPoly::monomial(Monomial{0, k, 0}, f));
  }
  return out;
}

NormalForm weyl_from_antinormal(unsigned n, unsigned m) {
  return normalize(weyl_antinormal_expansion(n, m));
}

SOrderCoeffs sorder_from_normal(const NormalForm& nf) {
  SOrderCoeffs out;
  out.order_param = MPoly{1};
  out.coeffs = nf.terms();
  return out;
}

SOrderCoeffs s_transform(const SOrderCoeffs& src, const MPoly& target_s) {
  SOrderCoeffs out;
  out.order_param = target_s;
  const MPoly half_gap = (target_s - src.order_param) * Rational(1, 2);
  // Powers of (t - s)/2 up to the largest balanced depth that can occur.
  unsigned kmax = 0;
  for (const auto& [pq, c] : src.coeffs) kmax = std::max(kmax, std::min(pq.p, pq.q));
  std::vector<MPoly> gap_pow{MPoly{1}};
  for (unsigned k = 1; k <= kmax; ++k) gap_pow.push_back(gap_pow.back() * half_gap);

  for (const auto& [pq, c] : src.coeffs) {
    for (unsigned k = 0; k <= std::min(pq.p, pq.q); ++k) {
      const Rational f{factorial(k) * binomial(pq.p, k) * binomial(pq.q, k)};
      const MPoly v = c * gap_pow[k] * f;
      if (v.is_zero()) continue;
      const PQ key{pq.p - k, pq.q - k};
      const auto [it, inserted] = out.coeffs.emplace(key, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.coeffs.erase(it);
      }
    }
  }
  return out;
}

Rational alpha(unsigned n, unsigned i) {
  if (n < 1) throw Error("alpha(n, i) requires n >= 1");
  Rational sum;
  const unsigned kmax = std::min(i, n - 1);
  for (unsigned k = 0; k <= kmax; ++k) {
    const Rational f{factorial(k) * binomial(n, k) * binomial(n - 1, k), pow2(k)};
    sum += f * Rational{stirling_first(static_cast<long>(n) - k,
                                       static_cast<long>(n) - static_cast<long>(i))};
  }
  return sum * Rational(1, 2);
}

MPoly SymmetricForm::expand() const {
  const MPoly N = MPoly::n();
  const MPoly N1 = N + MPoly{1};
  MPoly out;
  for (const auto& [d, c] : terms) out += (N.pow(d) + N1.pow(d)) * c;
  return out;
}

Rational SymmetricForm::eval(long k) const {
  Rational out;
  for (const auto& [d, c] : terms)
    out += c * (Rational(k).pow(d) + Rational(k + 1).pow(d));
  return out;
}

SymmetricForm weyl_symmetric(unsigned n) {
  if (n < 1) throw Error("weyl_symmetric requires n >= 1");
  SymmetricForm out;
  out.n = n;
  for (unsigned j = 0; 2 * j <= n - 1; ++j) out.terms.emplace_back(n - 2 * j, alpha(n, 2 * j));
  return out;
}

}  // namespace ordercalc
