#include "singchi/poly/parser.hpp"

#include <algorithm>
#include <cctype>

#include "singchi/errors.hpp"

namespace singchi::poly {
namespace {

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (digit(c)) return number();
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (!ring_.contains(name)) throw UnknownVariable(name);
      return Polynomial::variable(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    Integer num(std::string(text_.substr(start, pos_ - start)));
    Integer den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      if (dstart == pos_) fail("expected denominator digits after '/'");
      den = Integer(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) {
        pos_ = dstart;
        fail("zero denominator");
      }
    }
    if (pos_ < text_.size() && ident_start(text_[pos_])) {
      fail("implicit multiplication is not allowed; write '*'");
    }
    return Polynomial::constant(ring_, make_rational(num, den));
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse();
}

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i]) && (i == 0 || !ident_char(text[i - 1]))) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace singchi::poly
