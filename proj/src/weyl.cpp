#include "ordercalc/weyl.hpp"

#include <algorithm>

#include "ordercalc/difference.hpp"

namespace ordercalc {

Word Word::monomial(unsigned p, unsigned q) {
  Word w;
  w.letters.reserve(p + q);
  w.letters.insert(w.letters.end(), p, Letter::Create);
  w.letters.insert(w.letters.end(), q, Letter::Annihilate);
  return w;
}

Word Word::concat(const Word& o) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

Word Word::adjoint() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(*it == Letter::Create ? Letter::Annihilate : Letter::Create);
  return w;
}

void OperatorExpr::add_term(Word w, const MPoly& c) {
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const MPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  OperatorExpr out;
  for (const auto& [w, coef] : terms_) out.add_term(w, coef * c);
  return *this = std::move(out);
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa.concat(wb), ca * cb);
  return out;
}

OperatorExpr OperatorExpr::pow(unsigned k) const {
  OperatorExpr r{MPoly{1}};
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

OperatorExpr OperatorExpr::adjoint() const {
  OperatorExpr out;
  for (const auto& [w, c] : terms_) out.add_term(w.adjoint(), c);
  return out;
}

NormalForm NormalForm::monomial(unsigned p, unsigned q, const MPoly& c) {
  NormalForm nf;
  nf.add_term({p, q}, c);
  return nf;
}

MPoly NormalForm::coefficient(unsigned p, unsigned q) const {
  const auto it = terms_.find({p, q});
  return it == terms_.end() ? MPoly{} : it->second;
}

void NormalForm::add_term(PQ pq, const MPoly& c) {
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.emplace(pq, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [pq, c] : o.terms_) add_term(pq, c);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
  for (const auto& [pq, c] : o.terms_) add_term(pq, -c);
  return *this;
}

NormalForm& NormalForm::operator*=(const MPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  PQTermMap out;
  for (const auto& [pq, coef] : terms_) {
    MPoly v = coef * c;
    if (!v.is_zero()) out.emplace(pq, std::move(v));
  }
  terms_ = std::move(out);
  return *this;
}

NormalForm operator*(const NormalForm& a, const NormalForm& b) {
  // (ad^p1 a^q1)(ad^p2 a^q2) = ad^p1 [a^q1 ad^p2] a^q2, with the bracket
  // expanded by the closed form.
  NormalForm out;
  for (const auto& [t1, c1] : a.terms()) {
    for (const auto& [t2, c2] : b.terms()) {
      const MPoly c = c1 * c2;
      const unsigned kmax = std::min(t1.q, t2.p);
      for (unsigned k = 0; k <= kmax; ++k) {
        const Rational f{factorial(k) * binomial(t2.p, k) * binomial(t1.q, k)};
        const MPoly w = MPoly::monomial(Monomial{0, k, 0}, f);
        out.add_term({t1.p + t2.p - k, t1.q + t2.q - k}, c * w);
      }
    }
  }
  return out;
}

NormalForm Normalizer::normalize(const Word& w) {
  if (const auto it = memo_.find(w); it != memo_.end()) return it->second;

  // Leftmost inversion a·ad, if any.
  std::size_t pos = w.size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w.letters[i] == Letter::Annihilate && w.letters[i + 1] == Letter::Create) {
      pos = i;
      break;
    }
  }

  NormalForm result;
  if (pos == w.size()) {
    // Already of shape ad^p a^q.
    const auto p = static_cast<unsigned>(
        std::count(w.letters.begin(), w.letters.end(), Letter::Create));
    result = NormalForm::monomial(p, static_cast<unsigned>(w.size()) - p);
  } else {
    Word swapped = w;
    std::swap(swapped.letters[pos], swapped.letters[pos + 1]);
    Word dropped = w;
    dropped.letters.erase(dropped.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                          dropped.letters.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    result = normalize(swapped) + MPoly::eps() * normalize(dropped);
  }
  memo_.emplace(w, result);
  return result;
}

NormalForm Normalizer::normalize(const OperatorExpr& e) {
  NormalForm out;
  for (const auto& [w, c] : e.terms()) out += normalize(w) * c;
  return out;
}

NormalForm normalize(const Word& w) { return Normalizer{}.normalize(w); }

NormalForm normalize(const OperatorExpr& e) { return Normalizer{}.normalize(e); }

NormalForm reorder_closed_form(unsigned m, unsigned n) {
  NormalForm out;
  for (unsigned k = 0; k <= std::min(m, n); ++k) {
    const Rational f{factorial(k) * binomial(n, k) * binomial(m, k)};
    out.add_term({n - k, m - k}, MPoly::monomial(Monomial{0, k, 0}, f));
  }
  return out;
}

OperatorExpr brute_force_weyl(unsigned n, unsigned m, unsigned cap) {
  if (n + m > cap) throw CapExceededError(n + m, cap);
  const Rational weight{BigInt(1), binomial(n + m, n)};
  const MPoly coef{weight};
  OperatorExpr out;
  Word w = Word::monomial(n, m);  // lowest permutation: Create < Annihilate
  do {
    out.add_term(w, coef);
  } while (std::next_permutation(w.letters.begin(), w.letters.end()));
  return out;
}

NormalForm substitute_eps(const NormalForm& nf, const MPoly& value) {
  NormalForm out;
  for (const auto& [pq, c] : nf.terms()) out.add_term(pq, c.substitute(Var::Eps, value));
  return out;
}

OperatorExpr substitute_eps(const OperatorExpr& e, const MPoly& value) {
  OperatorExpr out;
  for (const auto& [w, c] : e.terms()) out.add_term(w, c.substitute(Var::Eps, value));
  return out;
}

MPoly balanced_to_npoly(const NormalForm& nf) {
  MPoly out;
  for (const auto& [pq, c] : nf.terms()) {
    if (pq.p != pq.q) throw UnbalancedTermError(pq.p, pq.q);
    out += c * falling_factorial(MPoly::n(), pq.p);
  }
  return out;
}

MPoly eval_on_number_state(const NormalForm& nf, unsigned k) {
  MPoly out;
  for (const auto& [pq, c] : nf.terms()) {
    if (pq.p != pq.q) throw UnbalancedTermError(pq.p, pq.q);
    BigInt prod = 1;
    for (unsigned j = 0; j < pq.p; ++j)
      prod *= BigInt(static_cast<long>(k)) - BigInt(static_cast<long>(j));
    out += c * MPoly::monomial(Monomial{0, pq.p, 0}, Rational{prod});
  }
  return out;
}

}  // namespace ordercalc
