#include "ramify/parser.hpp"

#include <cctype>

#include "ramify/error.hpp"

namespace ramify {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
 public:
  Parser(std::string_view src, const RingPtr& ring) : src_(src), ring_(ring) {}

  Poly run() {
    skip();
    if (pos_ == src_.size()) throw ParseError(pos_, "empty expression");
    Poly p = expr();
    skip();
    if (pos_ != src_.size()) throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        std::size_t at = ++pos_;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) throw ParseError(at, "division only by nonzero constants");
        acc = acc.scaled(ring_->field().inv(d.constant_term()));
      } else if (pos_ < src_.size() && (ident_start(src_[pos_]) || std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '(')) {
        throw ParseError(pos_, "implicit multiplication is not allowed");
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
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

  Poly power() {
    Poly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t at = pos_;
      std::string digits;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += src_[pos_++];
      if (digits.empty()) throw ParseError(at, "expected exponent");
      if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) throw ParseError(at, "exponent overflow");
      try {
        return base.pow(static_cast<unsigned>(std::stoul(digits)));
      } catch (const ExponentOverflow&) {
        throw ParseError(at, "exponent overflow");
      }
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ == src_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!peek(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += src_[pos_++];
      return Poly::constant(ring_, Coeff(mpz_class(digits)));
    }
    if (ident_start(c)) {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < src_.size() && ident_char(src_[pos_])) name += src_[pos_++];
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError(at, "unknown variable '" + name + "'");
      return Poly::variable(ring_, *idx);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, const RingPtr& ring) {
  try {
    return Parser(src, ring).run();
  } catch (const ExponentOverflow&) {
    throw ParseError(0, "exponent overflow");
  }
}

}  // namespace ramify
