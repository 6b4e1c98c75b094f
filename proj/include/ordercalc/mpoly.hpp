#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <tuple>

#include "ordercalc/rational.hpp"

namespace ordercalc {

/// The fixed variable set of the coefficient domain.
enum class Var : std::uint8_t { N = 0, Eps = 1, T = 2 };

inline constexpr std::array<const char*, 3> kVarNames = {"N", "eps", "t"};

/// Exponent triple of a monomial in {N, eps, t}.
struct Monomial {
  unsigned n = 0;
  unsigned eps = 0;
  unsigned t = 0;

  unsigned degree() const { return n + eps + t; }

  unsigned exponent(Var v) const {
    switch (v) {
      case Var::N: return n;
      case Var::Eps: return eps;
      case Var::T: return t;
    }
    return 0;
  }

  void set_exponent(Var v, unsigned e) {
    switch (v) {
      case Var::N: n = e; break;
      case Var::Eps: eps = e; break;
      case Var::T: t = e; break;
    }
  }

  Monomial operator*(const Monomial& o) const { return {n + o.n, eps + o.eps, t + o.t}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order on (N, eps, t), leading (highest) term first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return std::tuple(a.degree(), a.n, a.eps, a.t) > std::tuple(b.degree(), b.n, b.eps, b.t);
  }
};

/// Sparse exact polynomial over {N, eps, t}. The term map never stores zero
/// coefficients and iterates in graded-lex order, so equality is structural
/// and printing is deterministic. Values are immutable in spirit: every
/// operation returns a fresh canonical polynomial.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  MPoly() = default;
  MPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v) {
    Monomial m;
    m.set_exponent(v, 1);
    return monomial(m, 1);
  }
  static MPoly monomial(const Monomial& m, const Rational& c) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }
  static MPoly n() { return variable(Var::N); }
  static MPoly eps() { return variable(Var::Eps); }
  static MPoly t() { return variable(Var::T); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }

  /// Coefficient of the constant monomial (the whole value when constant).
  Rational constant_value() const { return coefficient(Monomial{}); }
  Rational coefficient(const Monomial& m) const;

  unsigned degree(Var v) const;

  void add_term(const Monomial& m, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator-() const;
  MPoly pow(unsigned k) const;

  MPoly substitute(Var v, const MPoly& value) const;

  /// Exact division by the variable v; throws Error when any term lacks v.
  MPoly divide_by_var(Var v) const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

}  // namespace ordercalc
