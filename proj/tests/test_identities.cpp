#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordercalc/format.hpp"
#include "ordercalc/identities.hpp"

using namespace ordercalc;

namespace {
const MPoly N = MPoly::n();
const MPoly eps = MPoly::eps();
}  // namespace

TEST_CASE("noncommutativity identity, fully symbolic") {
  CHECK(verify_noncom(0).holds);
  CHECK(verify_noncom(1).holds);
  CHECK(verify_noncom(6).holds);
  for (unsigned n = 0; n <= 12; ++n) {
    const auto r = verify_noncom(n);
    CHECK(r.holds);
    CHECK(r.residual.is_zero());
  }
}

TEST_CASE("derivative identity at eps = 1 and symbolically") {
  CHECK(verify_derivative_identity(1).holds);
  CHECK(verify_derivative_identity(2).holds);
  CHECK(verify_derivative_identity(10).holds);
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(verify_derivative_identity(n).holds);
    CHECK(verify_derivative_identity(n, /*symbolic_eps=*/true).holds);
  }
  CHECK_THROWS_AS(verify_derivative_identity(0), Error);
}

TEST_CASE("delta identity at eps = 1 and symbolically") {
  CHECK(verify_delta_identity(1).holds);
  CHECK(verify_delta_identity(3).holds);
  CHECK(verify_delta_identity(12).holds);
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(verify_delta_identity(n).holds);
    CHECK(verify_delta_identity(n, /*symbolic_eps=*/true).holds);
  }
}

TEST_CASE("stirling relation on the worked examples") {
  CHECK(verify_stirling_relation(4, 0).holds);
  CHECK(verify_stirling_relation(2, 0).holds);
  CHECK(verify_stirling_relation(9, 3).holds);
}

TEST_CASE("stirling relation grid with valid j") {
  for (unsigned n = 1; n <= 25; ++n) {
    for (unsigned j = 0; 2 * j + 1 <= n; ++j) {
      const auto r = verify_stirling_relation(n, j);
      CHECK(r.holds);
      CHECK_FALSE(r.trivial);
    }
  }
}

TEST_CASE("stirling relation flags vacuous parameter points") {
  const auto r = verify_stirling_relation(3, 5);  // n - 2j - 1 = -8
  CHECK(r.holds);
  CHECK(r.trivial);
}

TEST_CASE("general relations on the worked examples") {
  CHECK(verify_general_relation(2, 0, 3).holds);
  CHECK(verify_general_relation(3, -1, 1).holds);
  CHECK(verify_general_relation(4, 2, 2).holds);
}

TEST_CASE("general relation rejects out-of-range indices") {
  CHECK_THROWS_AS(verify_general_relation(2, 0, 4), Error);
  CHECK_THROWS_AS(verify_general_relation(2, 0, 0), Error);
  CHECK_THROWS_AS(verify_general_relation(3, -3, 1), Error);
  try {
    verify_general_relation(2, 0, 4);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1..3") != std::string::npos);
  }
}

TEST_CASE("general relation grid") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (long m = -3; m <= 3; ++m) {
      if (m < 0 && m < -static_cast<long>(n) + 1) continue;
      const long top = m < 0 ? static_cast<long>(n) + m + 1 : static_cast<long>(n) + 1;
      for (long i = 1; i <= top; ++i) {
        const auto r = verify_general_relation(n, m, static_cast<unsigned>(i));
        CHECK(r.holds);
        CHECK(r.kind == (m < 0 ? IdentityKind::GeneralRelNegM : IdentityKind::GeneralRelPosM));
      }
    }
  }
}

TEST_CASE("odd alpha coefficients vanish") {
  CHECK(verify_alpha_odd(2).holds);
  CHECK(verify_alpha_odd(3).holds);
  CHECK(verify_alpha_odd(11).holds);
}

TEST_CASE("alpha vanishing is the stirling relation in disguise") {
  for (unsigned n = 2; n <= 15; ++n) {
    CHECK(verify_alpha_odd(n).holds);
    for (unsigned j = 0; 2 * j + 1 <= n - 1; ++j) {
      const auto rel = verify_stirling_relation(n, j);
      CHECK(rel.holds);
      // alpha(n, 2j+1) is exactly half the relation's left-hand sum.
      CHECK(alpha(n, 2 * j + 1) ==
            rel.residual.constant_value() * Rational(1, 2));
    }
  }
}

TEST_CASE("weyl-from-normal matches the t = eps/2 specialization") {
  for (unsigned n = 1; n <= 8; ++n) {
    MPoly sum;
    const MPoly half_eps = eps * Rational(1, 2);
    for (unsigned k = 0; k <= n; ++k) {
      const BigInt b = binomial(n, k);
      sum += half_eps.pow(k) * falling_factorial(N, n - k) * Rational{factorial(k) * b * b};
    }
    CHECK(sum == balanced_to_npoly(weyl_from_normal(n, n)));
  }
}

TEST_CASE("report lines serialize to the documented JSON shape") {
  const auto r = verify_stirling_relation(9, 3);
  CHECK(format_report(r) == R"({"identity":"stirling_rel","n":9,"j":3,"holds":true})");

  const auto g = verify_general_relation(3, -1, 1);
  CHECK(format_report(g) ==
        R"({"identity":"general_rel_neg_m","n":3,"m":-1,"i":1,"holds":true})");

  const auto nc = verify_noncom(4);
  CHECK(format_report(nc) == R"({"identity":"noncom","n":4,"holds":true})");
}
