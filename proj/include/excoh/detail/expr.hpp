#pragma once

// Recursive-descent parser for polynomial expressions such as
// "x6^2*x18 + 2*x10^3 - (a + b)*c". The target ring is supplied by Ops:
//   R zero(); R integer(long long); R symbol(std::string_view);
//   R add(R,R); R sub(R,R); R mul(R,R);
// Powers are expanded by repeated multiplication.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace excoh::detail {

template <class Ops>
class ExprParser {
 public:
  using R = decltype(std::declval<Ops&>().zero());

  ExprParser(std::string_view text, Ops& ops) : s_(text), ops_(ops) {}

  R parse() {
    R r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  std::string_view s_;
  Ops& ops_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 17) fail("integer literal too large");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  R expr() {
    R acc = ops_.zero();
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!eat('+') && !first) break;
      R t = term();
      acc = neg ? ops_.sub(acc, t) : ops_.add(acc, t);
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }
  R term() {
    R acc = factor();
    while (eat('*')) acc = ops_.mul(acc, factor());
    return acc;
  }
  R factor() {
    R base = atom();
    if (!eat('^')) return base;
    long long e = number();
    if (e > 10000) fail("exponent too large");
    R acc = ops_.integer(1);
    for (long long i = 0; i < e; ++i) acc = ops_.mul(acc, base);
    return acc;
  }
  R atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      R r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ops_.integer(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return ops_.symbol(s_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

template <class Ops>
auto parse_expression(std::string_view text, Ops& ops) {
  return ExprParser<Ops>(text, ops).parse();
}

}  // namespace excoh::detail
