#include "ordercalc/mpoly.hpp"

#include <algorithm>
#include <vector>

namespace ordercalc {

Rational MPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r{1};
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  // Precompute value^e for every exponent that actually occurs.
  const unsigned max_e = degree(v);
  std::vector<MPoly> powers;
  powers.reserve(max_e + 1);
  powers.emplace_back(1);
  for (unsigned e = 1; e <= max_e; ++e) powers.push_back(powers.back() * value);

  MPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.set_exponent(v, 0);
    out += MPoly::monomial(rest, c) * powers[m.exponent(v)];
  }
  return out;
}

MPoly MPoly::divide_by_var(Var v) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(v);
    if (e == 0)
      throw Error(std::string("inexact division by ") + kVarNames[static_cast<int>(v)]);
    Monomial q = m;
    q.set_exponent(v, e - 1);
    out.add_term(q, c);
  }
  return out;
}

}  // namespace ordercalc
