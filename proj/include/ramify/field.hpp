#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ramify {

using Coeff = mpq_class;

// Q or F_p. Residues mod p are kept as canonical integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Coeff normalize(const Coeff& c) const;
  Coeff add(const Coeff& a, const Coeff& b) const { return normalize(a + b); }
  Coeff sub(const Coeff& a, const Coeff& b) const { return normalize(a - b); }
  Coeff mul(const Coeff& a, const Coeff& b) const { return normalize(a * b); }
  Coeff neg(const Coeff& a) const { return normalize(-a); }
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  std::string str() const;
  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

std::string coeff_str(const Coeff& c);

}  // namespace ramify
