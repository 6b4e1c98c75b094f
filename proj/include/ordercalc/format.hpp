#pragma once

#include <string>
#include <vector>

#include "ordercalc/identities.hpp"
#include "ordercalc/orderings.hpp"

namespace ordercalc {

enum class Style { Text, Latex, Json };

Style style_from_name(std::string_view name);  // "text" | "latex" | "json"

/// Canonical text form, e.g. "N^3 - 3*eps*N^2 + 2*eps^2*N"; JSON form
/// {"terms":[{"N":3,"eps":0,"t":0,"coef":"1"},...]}. Text re-parses in npoly
/// mode to an equal polynomial.
std::string format(const MPoly& p, Style style);

/// e.g. "ad a + 1/2 eps"; text re-parses in operator mode.
std::string format(const NormalForm& nf, Style style);

std::string format(const OperatorExpr& e, Style style);

/// e.g. "1/2 {N^3 + (N+1)^3} + 1/4 {N + (N+1)}"; latex mirrors the same shape.
std::string format(const SymmetricForm& sf, Style style);

/// Normal (s=1) and anti-normal (s=-1) coefficients print as plain words;
/// other order parameters use the brace notation {ad^p a^q}_s.
std::string format(const SOrderCoeffs& sc, Style style);

/// One JSON line per verification, e.g.
/// {"identity":"stirling_rel","n":9,"j":3,"holds":true}.
std::string format_report(const IdentityReport& r);

/// Word in token syntax with powers for letter runs, e.g. "ad^2 a^2".
std::string format_word(const Word& w);

/// One triangle row; JSON shape {"n":5,"values":["24","-50","35","-10","1"]}.
std::string format_stirling_row(unsigned n, const std::vector<BigInt>& row, Style style);

}  // namespace ordercalc
