#include "ordercalc/parser.hpp"

#include <cctype>
#include <string>

namespace ordercalc {

namespace {

enum class TokKind { Plus, Minus, Star, Slash, Caret, LParen, RParen, Integer, Ident, End };

struct Token {
  TokKind kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '+': out.push_back({TokKind::Plus, start, "+"}); ++i; continue;
      case '-': out.push_back({TokKind::Minus, start, "-"}); ++i; continue;
      case '*': out.push_back({TokKind::Star, start, "*"}); ++i; continue;
      case '/': out.push_back({TokKind::Slash, start, "/"}); ++i; continue;
      case '^': out.push_back({TokKind::Caret, start, "^"}); ++i; continue;
      case '(': out.push_back({TokKind::LParen, start, "("}); ++i; continue;
      case ')': out.push_back({TokKind::RParen, start, ")"}); ++i; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({TokKind::Integer, start, std::string(src.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({TokKind::Ident, start, std::string(src.substr(start, i - start))});
      continue;
    }
    throw ParseError(start, "", std::string("unexpected character '") + c + "'");
  }
  out.push_back({TokKind::End, src.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, ParseMode mode) : tokens_(lex(text)), mode_(mode) {}

  SourceExpr run() {
    SourceExpr e = parse_expr();
    if (peek().kind != TokKind::End)
      throw ParseError(peek().offset, "'+', '-', or end of input",
                       "trailing input '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool starts_factor(TokKind k) const {
    return k == TokKind::Integer || k == TokKind::Ident || k == TokKind::LParen;
  }

  SourceExpr parse_expr() {
    SourceExpr sum;
    sum.kind = SourceExpr::Kind::Sum;
    int sign = 1;
    if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus)
      sign = advance().kind == TokKind::Minus ? -1 : 1;
    sum.children.push_back(parse_term());
    sum.signs.push_back(sign);
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const int s = advance().kind == TokKind::Minus ? -1 : 1;
      sum.children.push_back(parse_term());
      sum.signs.push_back(s);
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
    return sum;
  }

  SourceExpr parse_term() {
    SourceExpr prod;
    prod.kind = SourceExpr::Kind::Product;
    prod.children.push_back(parse_factor());
    for (;;) {
      if (peek().kind == TokKind::Star) {
        advance();
        prod.children.push_back(parse_factor());
      } else if (starts_factor(peek().kind)) {
        prod.children.push_back(parse_factor());
      } else {
        break;
      }
    }
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    return prod;
  }

  SourceExpr parse_factor() {
    SourceExpr base = parse_primary();
    if (peek().kind == TokKind::Caret) {
      advance();
      const Token& t = peek();
      if (t.kind != TokKind::Integer)
        throw ParseError(t.offset, "positive integer exponent", "bad exponent");
      advance();
      unsigned long e = 0;
      try {
        e = std::stoul(t.text);
      } catch (const std::exception&) {
        throw ParseError(t.offset, "positive integer exponent", "exponent too large");
      }
      if (e == 0) throw ParseError(t.offset, "positive integer exponent", "exponent must be >= 1");
      SourceExpr p;
      p.kind = SourceExpr::Kind::Power;
      p.exponent = static_cast<unsigned>(e);
      p.children.push_back(std::move(base));
      return p;
    }
    return base;
  }

  SourceExpr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::LParen: {
        advance();
        SourceExpr inner = parse_expr();
        if (peek().kind != TokKind::RParen)
          throw ParseError(peek().offset, "')'", "unclosed parenthesis");
        advance();
        return inner;
      }
      case TokKind::Integer: {
        advance();
        BigInt num{t.text};
        if (peek().kind == TokKind::Slash) {
          advance();
          const Token& d = peek();
          if (d.kind != TokKind::Integer)
            throw ParseError(d.offset, "integer denominator", "bad rational literal");
          advance();
          BigInt den{d.text};
          if (sgn(den) == 0)
            throw ParseError(d.offset, "positive denominator", "zero denominator");
          SourceExpr e;
          e.kind = SourceExpr::Kind::Literal;
          e.literal = Rational(num, den);
          return e;
        }
        SourceExpr e;
        e.kind = SourceExpr::Kind::Literal;
        e.literal = Rational(num);
        return e;
      }
      case TokKind::Ident:
        return parse_atom();
      default:
        throw ParseError(t.offset, expected_primary(), "unexpected token '" + t.text + "'");
    }
  }

  std::string expected_primary() const {
    return mode_ == ParseMode::Operator ? "'(' , rational, or one of {ad, a, eps}"
                                        : "'(' , rational, or one of {N, eps, t}";
  }

  SourceExpr parse_atom() {
    const Token& t = advance();
    SourceExpr e;
    e.kind = SourceExpr::Kind::Atom;
    if (t.text == "ad") e.atom = SourceExpr::AtomKind::Ad;
    else if (t.text == "a") e.atom = SourceExpr::AtomKind::A;
    else if (t.text == "N") e.atom = SourceExpr::AtomKind::N;
    else if (t.text == "eps") e.atom = SourceExpr::AtomKind::Eps;
    else if (t.text == "t") e.atom = SourceExpr::AtomKind::T;
    else
      throw ParseError(t.offset, expected_primary(), "unknown symbol '" + t.text + "'");

    const bool ok = mode_ == ParseMode::Operator
                        ? (e.atom == SourceExpr::AtomKind::Ad || e.atom == SourceExpr::AtomKind::A ||
                           e.atom == SourceExpr::AtomKind::Eps)
                        : (e.atom == SourceExpr::AtomKind::N || e.atom == SourceExpr::AtomKind::Eps ||
                           e.atom == SourceExpr::AtomKind::T);
    if (!ok)
      throw ParseError(t.offset, expected_primary(),
                       "atom '" + t.text + "' not allowed in " +
                           (mode_ == ParseMode::Operator ? std::string("operator") : std::string("npoly")) +
                           " mode");
    return e;
  }

  std::vector<Token> tokens_;
  ParseMode mode_;
  std::size_t pos_ = 0;
};

}  // namespace

SourceExpr parse(std::string_view text, ParseMode mode) { return Parser(text, mode).run(); }

OperatorExpr lower_operator(const SourceExpr& ast) {
  switch (ast.kind) {
    case SourceExpr::Kind::Literal:
      return OperatorExpr{MPoly{ast.literal}};
    case SourceExpr::Kind::Atom:
      switch (ast.atom) {
        case SourceExpr::AtomKind::Ad: return OperatorExpr::letter(Letter::Create);
        case SourceExpr::AtomKind::A: return OperatorExpr::letter(Letter::Annihilate);
        case SourceExpr::AtomKind::Eps: return OperatorExpr{MPoly::eps()};
        default: throw Error("commuting atom in an operator expression");
      }
    case SourceExpr::Kind::Power:
      return lower_operator(ast.children[0]).pow(ast.exponent);
    case SourceExpr::Kind::Product: {
      OperatorExpr acc{MPoly{1}};
      for (const auto& c : ast.children) acc = acc * lower_operator(c);
      return acc;
    }
    case SourceExpr::Kind::Sum: {
      OperatorExpr acc;
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (ast.signs[i] > 0)
          acc += lower_operator(ast.children[i]);
        else
          acc -= lower_operator(ast.children[i]);
      }
      return acc;
    }
  }
  throw Error("malformed syntax tree");
}

MPoly lower_npoly(const SourceExpr& ast) {
  switch (ast.kind) {
    case SourceExpr::Kind::Literal:
      return MPoly{ast.literal};
    case SourceExpr::Kind::Atom:
      switch (ast.atom) {
        case SourceExpr::AtomKind::N: return MPoly::n();
        case SourceExpr::AtomKind::Eps: return MPoly::eps();
        case SourceExpr::AtomKind::T: return MPoly::t();
        default: throw Error("operator atom in a polynomial expression");
      }
    case SourceExpr::Kind::Power:
      return lower_npoly(ast.children[0]).pow(ast.exponent);
    case SourceExpr::Kind::Product: {
      MPoly acc{1};
      for (const auto& c : ast.children) acc *= lower_npoly(c);
      return acc;
    }
    case SourceExpr::Kind::Sum: {
      MPoly acc;
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (ast.signs[i] > 0)
          acc += lower_npoly(ast.children[i]);
        else
          acc -= lower_npoly(ast.children[i]);
      }
      return acc;
    }
  }
  throw Error("malformed syntax tree");
}

OperatorExpr parse_operator(std::string_view text) {
  return lower_operator(parse(text, ParseMode::Operator));
}

MPoly parse_npoly(std::string_view text) { return lower_npoly(parse(text, ParseMode::NPoly)); }

}  // namespace ordercalc
