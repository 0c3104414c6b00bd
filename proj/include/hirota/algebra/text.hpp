#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "hirota/algebra/ratfunc.hpp"

namespace hirota {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly out;
    skip_ws();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        throw SyntaxError("expected '+' or '-'", pos_);
      }
      out += term() * Rational(sign);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return out;
  }

 private:
  MultiPoly term() {
    Rational coeff = 1;
    Monomial mono{};
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else if (c == 'r' || c == 's') {
        get();
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
          get();
          skip_ws();
          if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("expected exponent", pos_);
          e = static_cast<unsigned>(std::stoul(digits()));
        }
        (c == 'r' ? mono.r : mono.s) += e;
      } else {
        throw SyntaxError("expected a coefficient, 'r' or 's'", pos_);
      }
      skip_ws();
      if (peek() != '*') break;
      get();
    }
    return MultiPoly::monomial(coeff, mono.r, mono.s);
  }

  Rational number() {
    Integer n(digits());
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("expected denominator", pos_);
      Integer d(digits());
      if (d == 0) throw SyntaxError("zero denominator", at);
      return Rational(n, d);
    }
    return Rational(n);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void append_power(std::string& out, char var, unsigned e) {
  if (e == 0) return;
  if (!out.empty() && out.back() != ' ' && out.back() != '-') out += '*';
  out += var;
  if (e > 1) out += "^" + std::to_string(e);
}

}  // namespace detail

/// Parses the polynomial text grammar, e.g. "r^2 - 3*r*s + 1/2".
inline MultiPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Graded-lex descending rendering; parse_poly(format_poly(p)) == p.
inline std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool constant = m.degree() == 0;
    std::string piece;
    if (constant || mag != 1) piece = mag.str();
    detail::append_power(piece, 'r', m.r);
    detail::append_power(piece, 's', m.s);
    out += piece;
    first = false;
  }
  return out;
}

/// "(num)/(den)", or the numerator alone when the denominator is 1.
inline std::string format_ratfunc(const RatFunc& f) {
  if (f.is_polynomial()) return format_poly(f.num());
  return "(" + format_poly(f.num()) + ")/(" + format_poly(f.den()) + ")";
}

}  // namespace hirota
