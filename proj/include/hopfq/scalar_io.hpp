#pragma once

// Text form of Scalar values, used by spec files, the CLI and reports.
// Grammar: sums/products of rational literals "a/b", roots of unity
// "zeta(N)^k", the formal parameter "t", with parentheses and unary minus.
// The printer emits a canonical form that re-parses to the same value.

#include "hopfq/scalar.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace hopfq {

class ScalarParser {
 public:
  explicit ScalarParser(std::string text) : s_(std::move(text)) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw error("trailing input in scalar literal: '" + s_ + "'");
    return v;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    while (true) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }

  Scalar factor() {
    if (eat('-')) return -factor();
    Scalar v = atom();
    if (eat('^')) {
      bool neg = eat('-');
      Int e = integer();
      v = v.pow(neg ? Int(-e) : e);
    }
    return v;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw error("unexpected end of scalar literal");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) throw error("missing ')' in scalar literal");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = integer();
      // "a/b" with b directly numeric binds as a rational literal
      std::size_t save = pos_;
      if (eat('/')) {
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          Int d = integer();
          if (d == 0) throw error("zero denominator in scalar literal");
          return Scalar(Rational(n) / Rational(d));
        }
        pos_ = save;
      }
      return Scalar(Rational(n));
    }
    if (s_.compare(pos_, 5, "zeta(") == 0) {
      pos_ += 5;
      Int n = integer();
      if (!eat(')')) throw error("missing ')' after zeta conductor");
      if (n < 1) throw error("zeta conductor must be positive");
      return Scalar::zeta(n);
    }
    if (c == 't') {
      ++pos_;
      return Scalar::t();
    }
    throw error(std::string("unexpected character '") + c + "' in scalar literal");
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw error("expected a number in scalar literal");
    return Int(s_.substr(start, pos_ - start));
  }
};

inline Scalar parse_scalar(const std::string& text) { return ScalarParser(text).parse(); }

inline std::string cyclotomic_str(const Cyclotomic& c) { return c.reduced().str(); }

namespace detail {
inline std::string poly_str(const Poly<Cyclotomic>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long j = 0; j <= p.degree(); ++j) {
    Cyclotomic c = p.coeff(static_cast<std::size_t>(j));
    if (c.is_zero()) continue;
    std::string cs = cyclotomic_str(c);
    bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << (compound ? "(" + cs + ")" : cs);
    } else {
      if (!(c.is_one()))
        os << (compound ? "(" + cs + ")" : cs) << "*";
      os << "t";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}
}  // namespace detail

inline std::string scalar_str(const Scalar& s) {
  if (s.is_constant()) return cyclotomic_str(s.as_cyclotomic());
  std::string n = detail::poly_str(s.num());
  if (s.den().is_constant()) {
    bool sum = n.find(" + ") != std::string::npos;
    return sum && s.num().degree() > 0 ? n : n;
  }
  std::string d = detail::poly_str(s.den());
  return "(" + n + ")/(" + d + ")";
}

}  // namespace hopfq
