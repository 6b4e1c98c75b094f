#include "ordercalc/rational.hpp"

#include <cctype>

namespace ordercalc {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (sgn(den) == 0) throw Error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  // Strict shape check first; gmp's set_str is laxer than the grammar we document.
  const auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!is_digits(body)) throw Error("invalid rational literal '" + std::string(text) + "'");
    num = BigInt(std::string(body));
  } else {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!is_digits(p) || !is_digits(q))
      throw Error("invalid rational literal '" + std::string(text) + "'");
    num = BigInt(std::string(p));
    den = BigInt(std::string(q));
    if (sgn(den) == 0) throw Error("rational literal with zero denominator");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r = *this;
  r.v_ = ::abs(r.v_);
  return r;
}

Rational Rational::pow(unsigned long k) const {
  // num and den are coprime, so their powers are too; no re-canonicalization needed.
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), k);
  Rational r;
  r.v_ = mpq_class(n, d);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error("reciprocal of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.v_ = -r.v_;
  return r;
}

}  // namespace ordercalc
