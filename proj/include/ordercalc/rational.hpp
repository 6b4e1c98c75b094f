#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "ordercalc/errors.hpp"

namespace ordercalc {

using BigInt = mpz_class;

BigInt factorial(unsigned long n);

/// Binomial coefficient, zero whenever k < 0 or k > n, so sums with formal
/// index ranges truncate themselves.
BigInt binomial(long n, long k);

BigInt pow2(unsigned long k);

/// Exact rational scalar. Always reduced, denominator > 0, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "p", "-p" or "p/q" with q > 0 after reduction; throws Error otherwise.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;
  Rational pow(unsigned long k) const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

}  // namespace ordercalc
