#pragma once

// Literal grammar for cyclotomic scalars:
//
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := unary { ['*'|'/'] unary }        (juxtaposition multiplies)
//   unary   := ('+'|'-') unary | power
//   power   := primary [ '^' ['-'] digits ]
//   primary := digits | 'z' | '(' expr ')'
//
// `z` is the primitive root exp(2 pi i / n) for the declared order n.
// Parsing is exact; there are no decimal literals.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "mnet/cyclo.hpp"
#include "mnet/errors.hpp"

namespace mnet {

namespace detail {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, unsigned order, std::size_t line, std::size_t column)
      : text_(text), order_(order), line_(line), column_(column) {}

  Cyclo parse() {
    skip();
    if (pos_ == text_.size()) fail("empty scalar");
    Cyclo v = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, column_ + pos_, msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Cyclo expr() {
    Cyclo v = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Cyclo term() {
    Cyclo v = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        Cyclo d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v = v / d;
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  Cyclo unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Cyclo power() {
    Cyclo base = primary();
    if (!peek('^')) return base;
    ++pos_;
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    skip();
    const Integer e = digits();
    if (e > 4096) fail("exponent too large");
    Cyclo result(1L);
    for (unsigned long i = 0; i < e.get_ui(); ++i) result *= base;
    if (negative) {
      if (result.is_zero()) fail("division by zero");
      result = inv(result);
    }
    return result;
  }

  Cyclo primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of scalar");
    const char c = text_[pos_];
    if (c == 'z') {
      ++pos_;
      return Cyclo::zeta(order_);
    }
    if (c == '(') {
      ++pos_;
      Cyclo v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Cyclo(Rational(digits()));
    fail(std::string("unexpected '") + c + "'");
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not exact; use p/q");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  unsigned order_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a scalar literal over Q(zeta_order).  Errors carry the given line
/// and the column of the offending character (1-based columns when
/// `first_column` is 1).
inline Cyclo parse_scalar(std::string_view text, unsigned order = 1, std::size_t line = 1,
                          std::size_t first_column = 1) {
  return detail::ScalarParser(text, order, line, first_column).parse();
}

}  // namespace mnet
