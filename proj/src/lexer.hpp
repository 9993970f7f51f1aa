#pragma once

// Tokenizer shared by the groupoid spec and element parsers.

#include <cctype>
#include <cstdint>
#include <string>

#include "ample/errors.hpp"
#include "ample/scalar.hpp"

namespace ample::detail {

class Lexer {
 public:
  explicit Lexer(std::string text) : text_(std::move(text)) { skip(); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  int line() const { return line_; }
  int column() const { return column_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    skip();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  std::string identifier() {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a name" + found());
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out.push_back(peek());
      advance();
    }
    skip();
    return out;
  }

  bool at_identifier(const std::string& word) const {
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    const std::size_t end = pos_ + word.size();
    return end >= text_.size() ||
           !(std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_');
  }

  std::int64_t integer() {
    std::string digits;
    if (peek() == '-' || peek() == '+') {
      digits.push_back(peek());
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer" + found());
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
      if (digits.size() > 18) fail("integer too large");
    }
    skip();
    return std::stoll(digits);
  }

  int small_integer(std::int64_t lo, std::int64_t hi, const std::string& what) {
    const int line = line_, col = column_;
    const std::int64_t v = integer();
    if (v < lo || v > hi) {
      throw ParseError(what + " " + std::to_string(v) + " out of range [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]",
                       line, col);
    }
    return static_cast<int>(v);
  }

  // Exact rational: "-3", "1/3", "0.25", "-1.5e-1" is not accepted.
  Rational rational() {
    std::string text;
    if (peek() == '-' || peek() == '+') {
      text.push_back(peek());
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number" + found());
    std::string whole, frac, den;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      whole.push_back(peek());
      advance();
    }
    if (peek() == '.') {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        frac.push_back(peek());
        advance();
      }
    } else if (peek() == '/') {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        den.push_back(peek());
        advance();
      }
      if (den.empty()) fail("expected a denominator");
    }
    skip();
    Rational value;
    if (!den.empty()) {
      value = Rational(mpz_class(whole), mpz_class(den));
      if (mpz_class(den) == 0) fail("zero denominator");
    } else {
      mpz_class scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      value = Rational(mpz_class(whole + frac), scale);
    }
    value.canonicalize();
    return text == "-" ? Rational(-value) : value;
  }

  std::string found() const {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  // Whitespace and comment lines (first non-blank character '#').
  void skip() {
    for (;;) {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
      if (peek() != '#') return;
      while (!at_end() && peek() != '\n') advance();
    }
  }

  std::string text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace ample::detail
