#include "ramify/field.hpp"

#include "ramify/error.hpp"

namespace ramify {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Coeff Field::normalize(const Coeff& c) const {
  if (p_ == 0) return c;
  mpz_class p(p_);
  mpz_class num = c.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw Error("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  return Coeff(num);
}

Coeff Field::inv(const Coeff& a) const {
  if (a == 0) throw Error("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class p(p_), r;
  mpz_class x = a.get_num();
  mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return Coeff(r);
}

std::string Field::str() const { return p_ == 0 ? "Q" : "Fp " + std::to_string(p_); }

std::string coeff_str(const Coeff& c) { return c.get_str(); }

}  // namespace ramify
