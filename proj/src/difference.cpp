#include "ordercalc/difference.hpp"

#include <mutex>

namespace ordercalc {

MPoly falling_factorial(const MPoly& base, unsigned n) {
  MPoly acc{1};
  for (unsigned j = 0; j < n; ++j) acc *= base - MPoly::eps() * Rational(static_cast<long>(j));
  return acc;
}

MPoly rising_factorial(const MPoly& base, unsigned n) {
  MPoly acc{1};
  for (unsigned j = 0; j < n; ++j) acc *= base + MPoly::eps() * Rational(static_cast<long>(j));
  return acc;
}

MPoly forward_difference(const MPoly& p) {
  const MPoly shifted = p.substitute(Var::N, MPoly::n() + MPoly::eps());
  return (shifted - p).divide_by_var(Var::Eps);
}

MPoly FactorialBasisExpansion::reconstruct() const {
  MPoly out;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    out += coefficients[k] * falling_factorial(MPoly::n(), static_cast<unsigned>(k));
  return out;
}

FactorialBasisExpansion newton_expand(const MPoly& p) {
  FactorialBasisExpansion out;
  out.increment = MPoly::eps();
  const unsigned deg = p.degree(Var::N);
  MPoly d = p;
  for (unsigned k = 0; k <= deg; ++k) {
    out.coefficients.push_back(d.substitute(Var::N, MPoly{0}) * Rational(BigInt(1), factorial(k)));
    if (k < deg) d = forward_difference(d);
  }
  return out;
}

namespace {

// Triangular table of s(n, i), row n holding i = 0 .. n. Grown on demand,
// single writer at a time.
std::vector<BigInt>& stirling_table_row(unsigned n) {
  static std::mutex mu;
  static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};  // s(0,0) = 1
  std::scoped_lock lock(mu);
  while (rows.size() <= n) {
    const auto m = rows.size();  // building row m from row m-1
    const auto& prev = rows.back();
    std::vector<BigInt> row(m + 1);
    row[0] = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      // s(m, i) = s(m-1, i-1) - (m-1) s(m-1, i)
      row[i] = prev[i - 1];
      if (i < m) row[i] -= BigInt(static_cast<long>(m - 1)) * prev[i];
    }
    rows.push_back(std::move(row));
  }
  return rows[n];
}

}  // namespace

BigInt stirling_first(long n, long i) {
  if (n < 0 || i < 0 || i > n) return 0;
  if (n == 0) return 1;  // s(0,0); i == 0 is the only case left
  if (i == 0) return 0;
  return stirling_table_row(static_cast<unsigned>(n))[static_cast<std::size_t>(i)];
}

std::vector<BigInt> stirling_row(unsigned n) {
  std::vector<BigInt> out;
  out.reserve(n);
  for (unsigned i = 1; i <= n; ++i) out.push_back(stirling_first(n, i));
  return out;
}

std::vector<MPoly> factorial_monomial_convert(unsigned n, FactorialKind kind) {
  if (n < 1) throw Error("factorial_monomial_convert requires n >= 1");
  std::vector<MPoly> out;
  out.reserve(n);
  for (unsigned i = 1; i <= n; ++i) {
    Rational c{stirling_first(n, i)};
    if (kind == FactorialKind::Rising && (n - i) % 2 == 1) c = -c;
    out.push_back(MPoly::monomial(Monomial{0, n - i, 0}, c));
  }
  return out;
}

}  // namespace ordercalc
