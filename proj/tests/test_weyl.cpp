#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ordercalc/difference.hpp"
#include "ordercalc/weyl.hpp"
#include "support/generators.hpp"

using namespace ordercalc;

namespace {

const MPoly N = MPoly::n();
const MPoly eps = MPoly::eps();
constexpr Letter AD = Letter::Create;
constexpr Letter A = Letter::Annihilate;

Word anti_word(unsigned m, unsigned n) {
  Word w;
  w.letters.insert(w.letters.end(), m, A);
  w.letters.insert(w.letters.end(), n, AD);
  return w;
}

/// Random word with an equal number of creators and annihilators.
Word random_balanced_word(testgen::Rng& rng, unsigned half_max) {
  std::uniform_int_distribution<unsigned> half(0, half_max);
  const unsigned h = half(rng);
  Word w;
  w.letters.insert(w.letters.end(), h, AD);
  w.letters.insert(w.letters.end(), h, A);
  std::shuffle(w.letters.begin(), w.letters.end(), rng);
  return w;
}

}  // namespace

TEST_CASE("normalize applies the defining relation") {
  const NormalForm nf = normalize(Word{A, AD});
  CHECK(nf.coefficient(1, 1) == MPoly{1});
  CHECK(nf.coefficient(0, 0) == eps);
  CHECK(nf.terms().size() == 2);
}

TEST_CASE("normalize of a a ad ad") {
  const NormalForm nf = normalize(Word{A, A, AD, AD});
  CHECK(nf.coefficient(2, 2) == MPoly{1});
  CHECK(nf.coefficient(1, 1) == Rational(4) * eps);
  CHECK(nf.coefficient(0, 0) == Rational(2) * eps * eps);
  CHECK(nf == reorder_closed_form(2, 2));
}

TEST_CASE("normalize of the six-word symmetric sum") {
  OperatorExpr sum;
  const MPoly sixth{Rational(1, 6)};
  sum.add_term(Word{AD, AD, A, A}, sixth);
  sum.add_term(Word{AD, A, AD, A}, sixth);
  sum.add_term(Word{AD, A, A, AD}, sixth);
  sum.add_term(Word{A, AD, AD, A}, sixth);
  sum.add_term(Word{A, AD, A, AD}, sixth);
  sum.add_term(Word{A, A, AD, AD}, sixth);

  const NormalForm nf = substitute_eps(normalize(sum), MPoly{1});
  CHECK(nf.coefficient(2, 2) == MPoly{1});
  CHECK(nf.coefficient(1, 1) == MPoly{2});
  CHECK(nf.coefficient(0, 0) == MPoly{Rational(1, 2)});

  // N^2 + N + 1/2 via the number-operator rewrite.
  const MPoly p = balanced_to_npoly(nf).substitute(Var::Eps, MPoly{1});
  CHECK(p == N * N + N + MPoly{Rational(1, 2)});
}

TEST_CASE("closed-form reordering on the small examples") {
  const NormalForm one_one = reorder_closed_form(1, 1);
  CHECK(one_one.coefficient(1, 1) == MPoly{1});
  CHECK(one_one.coefficient(0, 0) == eps);

  const NormalForm already = reorder_closed_form(0, 3);
  CHECK(already.terms().size() == 1);
  CHECK(already.coefficient(3, 0) == MPoly{1});
}

TEST_CASE("rewriting agrees with the closed form for all m+n <= 10") {
  for (unsigned total = 0; total <= 10; ++total) {
    for (unsigned m = 0; m <= total; ++m) {
      const unsigned n = total - m;
      CHECK(normalize(anti_word(m, n)) == reorder_closed_form(m, n));
    }
  }
}

TEST_CASE("brute-force symmetrization enumerates every interleaving") {
  const OperatorExpr w11 = brute_force_weyl(1, 1);
  CHECK(w11.terms().size() == 2);
  for (const auto& [w, c] : w11.terms()) CHECK(c == MPoly{Rational(1, 2)});

  const OperatorExpr w22 = brute_force_weyl(2, 2);
  CHECK(w22.terms().size() == 6);
  for (const auto& [w, c] : w22.terms()) CHECK(c == MPoly{Rational(1, 6)});

  const OperatorExpr w33 = brute_force_weyl(3, 3);
  CHECK(w33.terms().size() == 20);
  for (const auto& [w, c] : w33.terms()) {
    CHECK(c == MPoly{Rational(1, 20)});
    CHECK(std::count(w.letters.begin(), w.letters.end(), AD) == 3);
    CHECK(w.size() == 6);
  }

  const OperatorExpr w23 = brute_force_weyl(2, 3);
  CHECK(w23.terms().size() == 10);
}

TEST_CASE("brute-force symmetrization respects the cap") {
  CHECK_THROWS_AS(brute_force_weyl(8, 8), CapExceededError);
  try {
    brute_force_weyl(8, 8);
  } catch (const CapExceededError& e) {
    CHECK(e.requested() == 16);
    CHECK(e.cap() == 14);
    CHECK(std::string(e.what()).find("14") != std::string::npos);
  }
  CHECK_NOTHROW(brute_force_weyl(3, 3, 6));
  CHECK_THROWS_AS(brute_force_weyl(3, 4, 6), CapExceededError);
}

TEST_CASE("balanced terms become falling factorials of N") {
  CHECK(balanced_to_npoly(NormalForm::monomial(1, 1)) == N);
  CHECK(balanced_to_npoly(NormalForm::monomial(2, 2)) == N * N - eps * N);

  const NormalForm bad = NormalForm::monomial(2, 1);
  CHECK_THROWS_AS(balanced_to_npoly(bad), UnbalancedTermError);
  try {
    balanced_to_npoly(bad);
  } catch (const UnbalancedTermError& e) {
    CHECK(e.p() == 2);
    CHECK(e.q() == 1);
  }
}

TEST_CASE("number-state evaluation of the worked examples") {
  CHECK(eval_on_number_state(NormalForm::monomial(1, 1), 3) == Rational(3) * eps);
  CHECK(eval_on_number_state(NormalForm::monomial(2, 2), 1).is_zero());

  const NormalForm weyl2 = normalize(brute_force_weyl(2, 2));
  const MPoly at0 = eval_on_number_state(weyl2, 0).substitute(Var::Eps, MPoly{1});
  CHECK(at0 == MPoly{Rational(1, 2)});

  CHECK_THROWS_AS(eval_on_number_state(NormalForm::monomial(0, 2), 1), UnbalancedTermError);
}

TEST_CASE("number-state evaluation matches the polynomial route") {
  testgen::Rng rng(90210);
  for (int it = 0; it < 40; ++it) {
    OperatorExpr e;
    for (int w = 0; w < 3; ++w)
      e.add_term(random_balanced_word(rng, 3), MPoly{testgen::random_rational(rng)});
    const NormalForm nf = normalize(e);
    const MPoly p = balanced_to_npoly(nf);
    for (unsigned k = 0; k <= 8; ++k) {
      const MPoly direct = eval_on_number_state(nf, k);
      const MPoly via_poly =
          p.substitute(Var::N, eps * Rational(static_cast<long>(k)));
      CHECK(direct == via_poly);
    }
  }
}

TEST_CASE("adjoint reverses and swaps") {
  const OperatorExpr e{Word{AD, A, A}};
  const OperatorExpr adj = e.adjoint();
  REQUIRE(adj.terms().size() == 1);
  CHECK(adj.terms().begin()->first == Word{AD, AD, A});

  testgen::Rng rng(4242);
  for (int it = 0; it < 50; ++it) {
    const OperatorExpr r = testgen::random_operator_expr(rng);
    CHECK(r.adjoint().adjoint().terms() == r.terms());
  }

  for (unsigned n = 1; n <= 4; ++n) {
    const OperatorExpr w = brute_force_weyl(n, n);
    CHECK(w.adjoint().terms() == w.terms());
  }
}

TEST_CASE("weyl normal forms are diagonal for n = m") {
  for (unsigned n = 1; n <= 5; ++n) {
    const NormalForm nf = normalize(brute_force_weyl(n, n));
    for (const auto& [pq, c] : nf.terms()) CHECK(pq.p == pq.q);
  }
}

TEST_CASE("normalize is a homomorphism for concatenation") {
  testgen::Rng rng(1618);
  for (int it = 0; it < 80; ++it) {
    const Word w1 = testgen::random_word(rng, 4);
    const Word w2 = testgen::random_word(rng, 4);
    CHECK(normalize(w1.concat(w2)) == normalize(w1) * normalize(w2));
  }
}

TEST_CASE("normal-form product is associative") {
  testgen::Rng rng(2718);
  for (int it = 0; it < 30; ++it) {
    const NormalForm a = normalize(testgen::random_word(rng, 4));
    const NormalForm b = normalize(testgen::random_word(rng, 4));
    const NormalForm c = normalize(testgen::random_word(rng, 4));
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("rewriting is canonical under relation-preserving edits") {
  // Apply a ad -> ad a + eps by hand somewhere in a random expression; the
  // normal forms must coincide.
  testgen::Rng rng(5150);
  for (int it = 0; it < 60; ++it) {
    const OperatorExpr e1 = testgen::random_operator_expr(rng, 3, 6);
    OperatorExpr e2;
    bool edited = false;
    for (const auto& [w, c] : e1.terms()) {
      std::size_t pos = w.size();
      if (!edited) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (w.letters[i] == A && w.letters[i + 1] == AD) {
            pos = i;
            break;
          }
        }
      }
      if (pos == w.size()) {
        e2.add_term(w, c);
        continue;
      }
      edited = true;
      Word swapped = w;
      std::swap(swapped.letters[pos], swapped.letters[pos + 1]);
      Word dropped = w;
      dropped.letters.erase(dropped.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                            dropped.letters.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
      e2.add_term(swapped, c);
      e2.add_term(dropped, c * eps);
    }
    CHECK(normalize(e1) == normalize(e2));
  }
}

TEST_CASE("normalizing a normal form is the identity") {
  testgen::Rng rng(8080);
  for (int it = 0; it < 40; ++it) {
    NormalForm nf;
    std::uniform_int_distribution<unsigned> small(0, 3);
    for (int t = 0; t < 3; ++t)
      nf.add_term({small(rng), small(rng)},
                  MPoly::monomial({0, small(rng), 0}, testgen::random_rational(rng)));
    OperatorExpr as_expr;
    for (const auto& [pq, c] : nf.terms()) as_expr.add_term(Word::monomial(pq.p, pq.q), c);
    CHECK(normalize(as_expr) == nf);
  }
}
