#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramify {

using Exponent = std::uint32_t;
inline constexpr Exponent kMaxExponent = 1u << 16;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> e);

  static Monomial variable(std::size_t nvars, std::size_t i, Exponent k = 1);

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  std::uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  const std::vector<Exponent>& exponents() const { return e_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return e_ == other.e_; }

 private:
  std::vector<Exponent> e_;
  std::uint64_t deg_ = 0;
};

enum class OrderKind { Lex, GrevLex, Block };

struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::size_t block_split = 0;  // first block = variables [0, block_split)

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
  static MonomialOrder block(std::size_t split) { return {OrderKind::Block, split}; }

  bool operator==(const MonomialOrder&) const = default;
};

// Throws Error on length mismatch.
std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

}  // namespace ramify
