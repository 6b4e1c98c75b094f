#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ordercalc/mpoly.hpp"

namespace ordercalc {

/// Generator letters of the free algebra: a-dagger and a.
enum class Letter : std::uint8_t { Create = 0, Annihilate = 1 };

/// Finite word over {ad, a}; the empty word is the identity operator.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}

  /// ad^p a^q
  static Word monomial(unsigned p, unsigned q);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  Word concat(const Word& o) const;

  /// Reverse the word and swap ad <-> a.
  Word adjoint() const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Length-then-lexicographic order with longer words first and ad < a, so a
/// term map prints high-degree words first and constants last.
struct WordPrintOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.letters < b.letters;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const Letter l : w.letters) {
      h ^= static_cast<std::size_t>(l) + 1;
      h *= 1099511628211ull;
    }
    return h ^ w.size();
  }
};

/// Exponent pair of a normal-ordered product ad^p a^q.
struct PQ {
  unsigned p = 0;
  unsigned q = 0;
  friend bool operator==(const PQ&, const PQ&) = default;
};

/// Total degree first (descending), then creator count; constants print last.
struct PQOrder {
  bool operator()(const PQ& a, const PQ& b) const {
    return std::tuple(a.p + a.q, a.p) > std::tuple(b.p + b.q, b.p);
  }
};

using PQTermMap = std::map<PQ, MPoly, PQOrder>;

/// Finite eps-polynomial combination of free-algebra words. No canonical form:
/// equality of operators is decided by normalizing, never structurally.
class OperatorExpr {
 public:
  using TermMap = std::map<Word, MPoly, WordPrintOrder>;

  OperatorExpr() = default;
  OperatorExpr(Word w) { add_term(std::move(w), MPoly{1}); }       // NOLINT(google-explicit-constructor)
  OperatorExpr(const MPoly& scalar) { add_term(Word{}, scalar); }  // NOLINT(google-explicit-constructor)
  static OperatorExpr letter(Letter l) { return OperatorExpr(Word{l}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Word w, const MPoly& c);

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const MPoly& c);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  /// Noncommutative product: words concatenate, coefficients multiply.
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(OperatorExpr a, const MPoly& c) { return a *= c; }
  friend OperatorExpr operator*(const MPoly& c, OperatorExpr a) { return a *= c; }

  OperatorExpr pow(unsigned k) const;
  OperatorExpr adjoint() const;

 private:
  TermMap terms_;
};

/// Canonical representation sum_{p,q} c_{p,q}(eps) ad^p a^q. Two operator
/// expressions are equal iff their normal forms are structurally equal.
class NormalForm {
 public:
  NormalForm() = default;
  static NormalForm monomial(unsigned p, unsigned q, const MPoly& c = MPoly{1});

  const PQTermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MPoly coefficient(unsigned p, unsigned q) const;

  void add_term(PQ pq, const MPoly& c);

  NormalForm& operator+=(const NormalForm& o);
  NormalForm& operator-=(const NormalForm& o);
  NormalForm& operator*=(const MPoly& c);

  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(NormalForm a, const MPoly& c) { return a *= c; }
  friend NormalForm operator*(const MPoly& c, NormalForm a) { return a *= c; }
  /// Product in the algebra, recombined through the closed-form reordering.
  friend NormalForm operator*(const NormalForm& a, const NormalForm& b);

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.terms_ == b.terms_;
  }

 private:
  PQTermMap terms_;
};

/// Rewriting engine applying a ad -> ad a + eps leftmost-first, memoized by
/// word. Each instance owns its memo; instances are independent.
class Normalizer {
 public:
  NormalForm normalize(const Word& w);
  NormalForm normalize(const OperatorExpr& e);

 private:
  std::unordered_map<Word, NormalForm, WordHash> memo_;
};

NormalForm normalize(const Word& w);
NormalForm normalize(const OperatorExpr& e);

/// Closed-form normal ordering of the single word a^m ad^n:
/// sum_k k! C(n,k) C(m,k) eps^k ad^(n-k) a^(m-k). Independent of the
/// rewriting path; the two must agree.
NormalForm reorder_closed_form(unsigned m, unsigned n);

inline constexpr unsigned kDefaultWordCap = 14;

/// The (n+m choose n) interleavings of n creators and m annihilators, each
/// weighted by the inverse count. Throws CapExceededError past the cap.
OperatorExpr brute_force_weyl(unsigned n, unsigned m, unsigned cap = kDefaultWordCap);

/// Substitute a value for eps in every coefficient, dropping vanished terms.
NormalForm substitute_eps(const NormalForm& nf, const MPoly& value);
OperatorExpr substitute_eps(const OperatorExpr& e, const MPoly& value);

/// Rewrites a balanced normal form as a polynomial in N via
/// ad^k a^k = N (N - eps) ... (N - (k-1) eps). Throws UnbalancedTermError.
MPoly balanced_to_npoly(const NormalForm& nf);

/// Diagonal action on the k-th number state: each balanced term ad^p a^p
/// contributes eps^p k (k-1) ... (k-p+1). Result is a polynomial in eps.
/// Throws UnbalancedTermError on p != q terms.
MPoly eval_on_number_state(const NormalForm& nf, unsigned k);

}  // namespace ordercalc
