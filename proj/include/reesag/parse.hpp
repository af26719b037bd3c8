#pragma once

#include <cctype>
#include <cstdint>
#include <string>

#include "reesag/errors.hpp"
#include "reesag/polynomial.hpp"
#include "reesag/ring.hpp"

namespace reesag {

// Recursive-descent parser for the expression grammar
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' INT]
//   atom   := INT | IDENT | '(' expr ')'
//
// '^' binds tightest, products need an explicit '*', and a leading '-' is
// absorbed into the first term.  Whitespace separates tokens freely.
template <class K>
class PolynomialParser {
 public:
  PolynomialParser(std::string text, RingPtr<K> ring)
      : text_(std::move(text)), ring_(std::move(ring)) {}

  Polynomial<K> parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Polynomial<K> p = parse_expr();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                           "'",
                       pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<K> parse_expr() {
    bool negate = accept('-');
    Polynomial<K> acc = parse_term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += parse_term();
      } else if (accept('-')) {
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial<K> parse_term() {
    Polynomial<K> acc = parse_factor();
    while (accept('*')) acc *= parse_factor();
    return acc;
  }

  Polynomial<K> parse_factor() {
    Polynomial<K> base = parse_atom();
    if (accept('^')) {
      std::uint32_t e = parse_exponent();
      base = base.pow(e);
    }
    return base;
  }

  std::uint32_t parse_exponent() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer exponent after '^'", pos_);
    std::uint64_t e = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (e > (1u << 20)) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return static_cast<std::uint32_t>(e);
  }

  Polynomial<K> parse_atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        ++pos_;
      }
      return Polynomial<K>::constant(ring_, Integer(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        name += text_[pos_];
        ++pos_;
      }
      auto idx = ring_->variable_index(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial<K>::variable(ring_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string text_;
  RingPtr<K> ring_;
  std::size_t pos_{0};
};

template <class K>
Polynomial<K> parse_polynomial(const std::string& text, const RingPtr<K>& ring) {
  return PolynomialParser<K>(text, ring).parse();
}

}  // namespace reesag
