#include "ordercalc/format.hpp"

#include <nlohmann/json.hpp>

namespace ordercalc {

using ordered_json = nlohmann::ordered_json;

Style style_from_name(std::string_view name) {
  if (name == "text") return Style::Text;
  if (name == "latex") return Style::Latex;
  if (name == "json") return Style::Json;
  throw Error("unknown style '" + std::string(name) + "'");
}

namespace {

std::string rational_latex(const Rational& r) {
  if (r.is_integer()) return r.num().get_str();
  const Rational a = r.abs();
  const std::string body = "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
  return r.sign() < 0 ? "-" + body : body;
}

// Factors of one monomial, highest-priority name first (eps, N, t), omitting
// the coefficient. Empty for the constant monomial.
std::vector<std::string> monomial_factors(const Monomial& m, bool latex) {
  static constexpr std::array<Var, 3> order = {Var::Eps, Var::N, Var::T};
  std::vector<std::string> out;
  for (const Var v : order) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    std::string name = kVarNames[static_cast<int>(v)];
    if (latex && v == Var::Eps) name = "\\epsilon";
    if (e == 1)
      out.push_back(name);
    else
      out.push_back(latex ? name + "^{" + std::to_string(e) + "}" : name + "^" + std::to_string(e));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// One signed term; the caller merges signs into " + " / " - " separators.
struct RenderedTerm {
  bool negative = false;
  std::string body;
};

std::string merge_terms(std::vector<RenderedTerm> terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out += terms[i].negative ? "-" + terms[i].body : terms[i].body;
    else
      out += (terms[i].negative ? " - " : " + ") + terms[i].body;
  }
  return out;
}

std::string merge_terms_tight(std::vector<RenderedTerm> terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out += terms[i].negative ? "-" + terms[i].body : terms[i].body;
    else
      out += (terms[i].negative ? "-" : "+") + terms[i].body;
  }
  return out;
}

RenderedTerm render_mpoly_term(const Monomial& m, const Rational& c, bool latex,
                               const std::string& factor_sep) {
  RenderedTerm t;
  t.negative = c.sign() < 0;
  const Rational a = c.abs();
  auto factors = monomial_factors(m, latex);
  if (factors.empty()) {
    t.body = latex ? rational_latex(a) : a.str();
    return t;
  }
  if (!a.is_one()) factors.insert(factors.begin(), latex ? rational_latex(a) : a.str());
  t.body = join(factors, factor_sep);
  return t;
}

std::string mpoly_text(const MPoly& p, bool latex, const std::string& factor_sep) {
  std::vector<RenderedTerm> terms;
  for (const auto& [m, c] : p.terms()) terms.push_back(render_mpoly_term(m, c, latex, factor_sep));
  return merge_terms(std::move(terms));
}

ordered_json mpoly_json(const MPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"N", m.n}, {"eps", m.eps}, {"t", m.t}, {"coef", c.str()}});
  return ordered_json{{"terms", terms}};
}

// Coefficient in front of a word: single monomials print inline, anything
// longer is parenthesized so the output re-parses unambiguously.
RenderedTerm render_operator_coef(const MPoly& c, bool latex) {
  RenderedTerm t;
  if (c.terms().size() == 1) {
    const auto& [m, r] = *c.terms().begin();
    t = render_mpoly_term(m, r, latex, " ");
    return t;
  }
  t.negative = false;
  t.body = latex ? "\\left(" + mpoly_text(c, true, " ") + "\\right)"
                 : "(" + mpoly_text(c, false, " ") + ")";
  return t;
}

RenderedTerm render_coef_word(const MPoly& c, const std::string& word, bool latex) {
  RenderedTerm t = render_operator_coef(c, latex);
  if (word.empty()) return t;
  if (t.body == "1")
    t.body = word;
  else
    t.body += " " + word;
  return t;
}

std::string word_text(const Word& w) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t run = 1;
    while (i + run < w.letters.size() && w.letters[i + run] == w.letters[i]) ++run;
    const std::string name = w.letters[i] == Letter::Create ? "ad" : "a";
    parts.push_back(run == 1 ? name : name + "^" + std::to_string(run));
    i += run;
  }
  return join(parts, " ");
}

std::string word_latex(const Word& w) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t run = 1;
    while (i + run < w.letters.size() && w.letters[i + run] == w.letters[i]) ++run;
    const bool create = w.letters[i] == Letter::Create;
    if (run == 1)
      parts.push_back(create ? "a^{\\dagger}" : "a");
    else
      parts.push_back(create ? "(a^{\\dagger})^{" + std::to_string(run) + "}"
                             : "a^{" + std::to_string(run) + "}");
    i += run;
  }
  return join(parts, " ");
}

std::string pq_word_text(unsigned p, unsigned q) {
  return word_text(Word::monomial(p, q));
}

std::string pq_word_latex(unsigned p, unsigned q) {
  return word_latex(Word::monomial(p, q));
}

ordered_json pq_terms_json(const PQTermMap& terms) {
  ordered_json arr = ordered_json::array();
  for (const auto& [pq, c] : terms)
    arr.push_back({{"ad", pq.p}, {"a", pq.q}, {"coef", mpoly_json(c)}});
  return arr;
}

}  // namespace

std::string format(const MPoly& p, Style style) {
  switch (style) {
    case Style::Text: return mpoly_text(p, false, "*");
    case Style::Latex: return mpoly_text(p, true, " ");
    case Style::Json: return mpoly_json(p).dump();
  }
  return {};
}

std::string format(const NormalForm& nf, Style style) {
  if (style == Style::Json) return ordered_json{{"terms", pq_terms_json(nf.terms())}}.dump();
  const bool latex = style == Style::Latex;
  std::vector<RenderedTerm> terms;
  for (const auto& [pq, c] : nf.terms())
    terms.push_back(
        render_coef_word(c, latex ? pq_word_latex(pq.p, pq.q) : pq_word_text(pq.p, pq.q), latex));
  return merge_terms(std::move(terms));
}

std::string format(const OperatorExpr& e, Style style) {
  if (style == Style::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& [w, c] : e.terms()) {
      ordered_json letters = ordered_json::array();
      for (const Letter l : w.letters) letters.push_back(l == Letter::Create ? "ad" : "a");
      arr.push_back({{"word", letters}, {"coef", mpoly_json(c)}});
    }
    return ordered_json{{"terms", arr}}.dump();
  }
  const bool latex = style == Style::Latex;
  std::vector<RenderedTerm> terms;
  for (const auto& [w, c] : e.terms())
    terms.push_back(render_coef_word(c, latex ? word_latex(w) : word_text(w), latex));
  return merge_terms(std::move(terms));
}

std::string format(const SymmetricForm& sf, Style style) {
  if (style == Style::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& [d, c] : sf.terms) arr.push_back({{"degree", d}, {"coef", c.str()}});
    return ordered_json{{"n", sf.n}, {"terms", arr}}.dump();
  }
  if (sf.terms.empty()) return "0";
  if (style == Style::Latex) {
    std::vector<RenderedTerm> terms;
    for (const auto& [d, c] : sf.terms) {
      RenderedTerm t;
      t.negative = c.sign() < 0;
      const Rational a = c.abs();
      const std::string power = d == 1 ? "" : "^{" + std::to_string(d) + "}";
      t.body = (a.is_one() ? "" : rational_latex(a)) + "\\{N" + power + "+(N+1)" + power + "\\}";
      terms.push_back(std::move(t));
    }
    return merge_terms_tight(std::move(terms));
  }
  std::vector<RenderedTerm> terms;
  for (const auto& [d, c] : sf.terms) {
    RenderedTerm t;
    t.negative = c.sign() < 0;
    const Rational a = c.abs();
    const std::string power = d == 1 ? "" : "^" + std::to_string(d);
    const std::string braces = "{N" + power + " + (N+1)" + power + "}";
    t.body = a.is_one() ? braces : a.str() + " " + braces;
    terms.push_back(std::move(t));
  }
  return merge_terms(std::move(terms));
}

std::string format(const SOrderCoeffs& sc, Style style) {
  const std::string s_text = format(sc.order_param, Style::Text);
  if (style == Style::Json)
    return ordered_json{{"s", s_text}, {"terms", pq_terms_json(sc.coeffs)}}.dump();

  const bool latex = style == Style::Latex;
  const bool is_normal = sc.order_param == MPoly{1};
  const bool is_antinormal = sc.order_param == MPoly{-1};
  std::vector<RenderedTerm> terms;
  for (const auto& [pq, c] : sc.coeffs) {
    std::string word;
    if (pq.p == 0 && pq.q == 0) {
      word = "";
    } else if (is_normal) {
      word = latex ? pq_word_latex(pq.p, pq.q) : pq_word_text(pq.p, pq.q);
    } else if (is_antinormal) {
      Word anti;
      anti.letters.insert(anti.letters.end(), pq.q, Letter::Annihilate);
      anti.letters.insert(anti.letters.end(), pq.p, Letter::Create);
      word = latex ? word_latex(anti) : word_text(anti);
    } else {
      const std::string inner = latex ? pq_word_latex(pq.p, pq.q) : pq_word_text(pq.p, pq.q);
      word = latex ? "\\{" + inner + "\\}_{" + format(sc.order_param, Style::Latex) + "}"
                   : "{" + inner + "}_" + s_text;
    }
    terms.push_back(render_coef_word(c, word, latex));
  }
  return merge_terms(std::move(terms));
}

std::string format_report(const IdentityReport& r) {
  ordered_json line;
  line["identity"] = identity_name(r.kind);
  line["n"] = r.n;
  if (r.m) line["m"] = *r.m;
  if (r.i) line["i"] = *r.i;
  if (r.j) line["j"] = *r.j;
  if (r.symbolic_eps) line["symbolic_eps"] = true;
  if (r.trivial) line["trivial"] = true;
  line["holds"] = r.holds;
  if (!r.holds) line["residual"] = format(r.residual, Style::Text);
  return line.dump();
}

std::string format_word(const Word& w) { return word_text(w); }

std::string format_stirling_row(unsigned n, const std::vector<BigInt>& row, Style style) {
  switch (style) {
    case Style::Json: {
      ordered_json values = ordered_json::array();
      for (const auto& v : row) values.push_back(v.get_str());
      return ordered_json{{"n", n}, {"values", values}}.dump();
    }
    case Style::Latex: {
      std::vector<std::string> parts;
      for (const auto& v : row) parts.push_back(v.get_str());
      return join(parts, " & ") + " \\\\";
    }
    case Style::Text: {
      std::vector<std::string> parts;
      for (const auto& v : row) parts.push_back(v.get_str());
      return join(parts, " ");
    }
  }
  return {};
}

}  // namespace ordercalc
