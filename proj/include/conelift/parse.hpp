// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conelift/rational_function.hpp"

namespace conelift {

// Expression surface syntax
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('+' | '-')* atom ('^' Integer)*
//   atom   := Integer | Identifier | '(' expr ')'
//
// '^' binds tightest, then '*' and '/', then binary '+'/'-'. Whitespace is
// insignificant. Implicit multiplication is rejected. Exponents are
// nonnegative integer literals. Evaluation is exact over rational functions;
// parse_polynomial additionally requires the result to have denominator 1.

namespace detail {

enum class TokKind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int column;
};

inline std::vector<Token> tokenize(std::string_view text, int start_line = 1) {
  std::vector<Token> out;
  int line = start_line;
  int col = 1;
  std::size_t i = 0;
  const auto push = [&](TokKind k, std::string t, int l, int c) {
    out.push_back({k, std::move(t), l, c});
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    const int tcol = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(TokKind::Integer, std::string(text.substr(i, j - i)), line, tcol);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      push(TokKind::Ident, std::string(text.substr(i, j - i)), line, tcol);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    TokKind kind;
    switch (ch) {
      case '+': kind = TokKind::Plus; break;
      case '-': kind = TokKind::Minus; break;
      case '*': kind = TokKind::Star; break;
      case '/': kind = TokKind::Slash; break;
      case '^': kind = TokKind::Caret; break;
      case '(': kind = TokKind::LParen; break;
      case ')': kind = TokKind::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, ch) + "'", line, tcol);
    }
    push(kind, std::string(1, ch), line, tcol);
    ++col;
    ++i;
  }
  out.push_back({TokKind::End, "", line, col});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::vector<Token> tokens, VarSet vars, MonomialOrder order)
      : tokens_(std::move(tokens)), vars_(std::move(vars)), order_(order) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    const Token& t = peek();
    if (t.kind != TokKind::End) {
      if (t.kind == TokKind::Integer || t.kind == TokKind::Ident || t.kind == TokKind::LParen)
        throw ParseError("missing operator before '" + t.text + "' (implicit multiplication is not allowed; use '*')",
                         t.line, t.column);
      throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
    }
    return value;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool match(TokKind k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction value = term();
    for (;;) {
      if (match(TokKind::Plus))
        value = value + term();
      else if (match(TokKind::Minus))
        value = value - term();
      else
        return value;
    }
  }

  RationalFunction term() {
    RationalFunction value = factor();
    for (;;) {
      if (match(TokKind::Star)) {
        value = value * factor();
      } else if (peek().kind == TokKind::Slash) {
        const Token slash = advance();
        const RationalFunction divisor = factor();
        if (divisor.is_zero())
          throw ParseError("division by zero", slash.line, slash.column);
        value = value / divisor;
      } else {
        return value;
      }
    }
  }

  RationalFunction factor() {
    bool negate = false;
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus)
      if (advance().kind == TokKind::Minus) negate = !negate;
    RationalFunction value = atom();
    while (peek().kind == TokKind::Caret) {
      const Token caret = advance();
      const Token& e = peek();
      if (e.kind == TokKind::Minus)
        throw ParseError("exponent must be a nonnegative integer", e.line, e.column);
      if (e.kind != TokKind::Integer)
        throw ParseError("expected a nonnegative integer exponent after '^'", caret.line,
                         caret.column);
      advance();
      const unsigned long exp = std::stoul(e.text);
      value = pow_rf(value, exp);
    }
    if (negate) value = -value;
    return value;
  }

  RationalFunction atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Integer: {
        advance();
        return RationalFunction(
            Polynomial::constant(vars_, Rational(Int(t.text)), order_));
      }
      case TokKind::Ident: {
        advance();
        if (!vars_.contains(t.text))
          throw UnknownVariable("unknown variable '" + t.text + "' at " +
                                std::to_string(t.line) + ":" + std::to_string(t.column));
        return RationalFunction(Polynomial::variable(vars_, t.text, order_));
      }
      case TokKind::LParen: {
        advance();
        RationalFunction value = expr();
        if (!match(TokKind::RParen))
          throw ParseError("expected ')'", peek().line, peek().column);
        return value;
      }
      default:
        throw ParseError("expected a number, variable, or '('", t.line, t.column);
    }
  }

  static RationalFunction pow_rf(const RationalFunction& base, unsigned long e) {
    return RationalFunction(pow(base.numerator(), static_cast<unsigned>(e)),
                            pow(base.denominator(), static_cast<unsigned>(e)));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  VarSet vars_;
  MonomialOrder order_;
};

}  // namespace detail

inline RationalFunction parse_rational_function(std::string_view text, const VarSet& vars,
                                                MonomialOrder order = MonomialOrder::Grevlex,
                                                int start_line = 1) {
  auto tokens = detail::tokenize(text, start_line);
  if (tokens.size() == 1) throw ParseError("empty expression", start_line, 1);
  return detail::ExprParser(std::move(tokens), vars, order).parse();
}

inline Polynomial parse_polynomial(std::string_view text, const VarSet& vars,
                                   MonomialOrder order = MonomialOrder::Grevlex,
                                   int start_line = 1) {
  auto tokens = detail::tokenize(text, start_line);
  if (tokens.size() == 1) throw ParseError("empty expression", start_line, 1);
  int slash_line = start_line, slash_col = 1;
  bool has_slash = false;
  for (const auto& t : tokens)
    if (t.kind == detail::TokKind::Slash && !has_slash) {
      has_slash = true;
      slash_line = t.line;
      slash_col = t.column;
    }
  RationalFunction value = detail::ExprParser(std::move(tokens), vars, order).parse();
  if (!value.is_polynomial())
    throw ParseError("expression is not a polynomial (nonconstant denominator)", slash_line,
                     slash_col);
  return value.numerator();
}

// Plain rational literal "p" or "p/q" with optional leading sign.
inline Rational parse_rational(std::string_view text, int line = 1, int column = 1) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto read_int = [&](bool allow_sign) -> Int {
    skip_ws();
    std::string digits;
    if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') digits.push_back(text[i]);  // cpp_int rejects a leading '+'
      ++i;
    }
    const std::size_t first_digit = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == first_digit)
      throw ParseError("expected an integer", line, column + static_cast<int>(i));
    digits.append(text.substr(first_digit, i - first_digit));
    return Int(digits);
  };
  const Int num = read_int(true);
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    const Int den = read_int(false);
    skip_ws();
    if (i != text.size())
      throw ParseError("trailing characters after rational", line, column + static_cast<int>(i));
    return make_rational(num, den);
  }
  if (i != text.size())
    throw ParseError("trailing characters after number", line, column + static_cast<int>(i));
  return Rational(num);
}

// Comma-separated rationals, e.g. "1, -2/3, 0".
inline std::vector<Rational> parse_rational_tuple(std::string_view text, int line = 1) {
  std::vector<Rational> out;
  std::size_t start = 0;
  int col = 1;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    out.push_back(parse_rational(piece, line, col));
    if (comma == std::string_view::npos) break;
    col += static_cast<int>(comma - start) + 1;
    start = comma + 1;
  }
  return out;
}

// Whitespace- or comma-separated identifiers, in declaration order.
inline VarSet parse_variables(std::string_view text, int line = 1) {
  std::vector<std::string> names;
  std::size_t i = 0;
  int col = 1;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      ++col;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch)))
      throw ParseError("variable names must start with a letter", line, col);
    std::size_t j = i;
    while (j < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
      ++j;
    names.emplace_back(text.substr(i, j - i));
    col += static_cast<int>(j - i);
    i = j;
  }
  if (names.empty()) throw ParseError("no variables declared", line, 1);
  try {
    return VarSet(names);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line, 1);
  }
}

}  // namespace conelift
