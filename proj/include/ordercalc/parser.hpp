#pragma once

#include <string_view>
#include <vector>

#include "ordercalc/weyl.hpp"

namespace ordercalc {

enum class ParseMode { Operator, NPoly };

/// Abstract syntax of the expression language. Powers are positive integers;
/// sums carry one sign per child. Operator atoms (ad, a) and the commuting
/// atoms N, t never mix: parse() enforces the mode, lowering re-checks.
struct SourceExpr {
  enum class Kind { Sum, Product, Power, Atom, Literal };
  enum class AtomKind { Ad, A, N, Eps, T };

  Kind kind = Kind::Literal;
  std::vector<SourceExpr> children;  // Sum/Product operands; Power base as children[0]
  std::vector<int> signs;            // Sum only, +1 or -1 per child
  AtomKind atom = AtomKind::A;       // Atom only
  Rational literal;                  // Literal only
  unsigned exponent = 0;             // Power only
};

/// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*;
///          term := factor (['*'] factor)*;
///          factor := ('(' expr ')' | rational | atom) ('^' posint)?
/// Juxtaposition is product; whitespace is insignificant. Operator mode admits
/// the atoms {ad, a, eps}; npoly mode admits {N, eps, t}. Violations raise
/// ParseError with the byte offset and the expected-token set.
SourceExpr parse(std::string_view text, ParseMode mode);

/// Evaluate the tree in the free algebra; powers expand by repetition.
OperatorExpr lower_operator(const SourceExpr& ast);

/// Evaluate the tree in the commutative polynomial ring.
MPoly lower_npoly(const SourceExpr& ast);

OperatorExpr parse_operator(std::string_view text);
MPoly parse_npoly(std::string_view text);

}  // namespace ordercalc
