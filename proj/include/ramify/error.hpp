#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramify {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : Error("at " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
};

class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("exponent exceeds 2^16") {}
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ramify
