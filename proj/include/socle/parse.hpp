#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "socle/polynomial.hpp"

namespace socle {

/// Recursive-descent reader for "x^2*y - 3*z^3": integers, declared variables,
/// + - * ^ and parentheses. Juxtaposition is rejected.
template <class K>
class PolynomialParser {
 public:
  PolynomialParser(RingPtr<K> ring, std::string_view text, int line = 0)
      : ring_(std::move(ring)), text_(text), line_(line) {}

  Polynomial<K> parse() {
    skipSpace();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial<K> p = expression();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial<K> expression() {
    skipSpace();
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    Polynomial<K> acc = term();
    if (negate) acc = -acc;
    while (true) {
      skipSpace();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial<K> t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
  }

  Polynomial<K> term() {
    Polynomial<K> acc = power();
    while (true) {
      skipSpace();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
        fail("implicit multiplication is not allowed; use '*'");
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> power() {
    Polynomial<K> base = atom();
    skipSpace();
    if (peek() != '^') return base;
    ++pos_;
    skipSpace();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 5 || std::stoi(digits) > 0xFFFF) fail("exponent too large");
    return base.pow(std::stoi(digits));
  }

  Polynomial<K> atom() {
    skipSpace();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = expression();
      skipSpace();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      auto coef = ring_->field().fromInteger(v);
      if (ring_->field().isZero(coef)) return Polynomial<K>(ring_);
      return Polynomial<K>(ring_, {{Monomial{}, coef}});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& names = ring_->names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return Polynomial<K>::variable(ring_, static_cast<int>(i));
      fail("unknown variable '" + name + "'");
    }
    if (c == '\0') fail("unexpected end of polynomial");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, what + " in \"" + std::string(text_) + "\"");
  }

  RingPtr<K> ring_;
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

template <class K>
Polynomial<K> parsePolynomial(const RingPtr<K>& ring, std::string_view text, int line = 0) {
  return PolynomialParser<K>(ring, text, line).parse();
}

}  // namespace socle
