#pragma once

// Tiny whitespace-insensitive scanner shared by the text parsers.

#include <cctype>
#include <string>
#include <string_view>

#include "solenoid/error.hpp"
#include "solenoid/integer.hpp"

namespace solenoid::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t position() const noexcept { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  // Matches a keyword; letters may not be split by whitespace.
  bool consume(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c, std::string_view what) {
    if (!consume(c)) fail(what);
  }

  void expect(std::string_view word) {
    if (!consume(word)) fail("'" + std::string(word) + "'");
  }

  void expect_end() {
    if (!at_end()) fail("end of input");
  }

  // Unsigned decimal integer; returns its text span start via `start`.
  Integer unsigned_integer(std::size_t* start = nullptr) {
    skip_ws();
    if (start != nullptr) *start = pos_;
    std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("a decimal integer");
    return Integer(std::string(text_.substr(begin, pos_ - begin)));
  }

  Integer signed_integer() {
    bool negative = consume('-');
    if (!negative) consume('+');
    Integer v = unsigned_integer();
    return negative ? Integer(-v) : v;
  }

  // "n" or "n/d" with d > 0.
  Rational fraction(bool allow_sign) {
    Integer num = allow_sign ? signed_integer() : unsigned_integer();
    Integer den = 1;
    if (consume('/')) {
      std::size_t at = 0;
      den = unsigned_integer(&at);
      if (den == 0) {
        throw ParseError(ErrorKind::SyntaxError, at,
                         "parse error at position " + std::to_string(at) + ": zero denominator");
      }
    }
    return Rational(num, den);
  }

  [[noreturn]] void fail(std::string_view expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(ErrorKind::SyntaxError, pos_,
                     "parse error at position " + std::to_string(pos_) + ": expected " +
                         std::string(expected) + ", found " + found);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace solenoid::detail
