#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramify/field.hpp"
#include "ramify/monomial.hpp"

namespace ramify {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> vars, Field field,
                      MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  std::strong_ordering cmp(const Monomial& a, const Monomial& b) const {
    return compare(a, b, order_);
  }
  // Same variables and field; only the order differs.
  RingPtr with_order(MonomialOrder order) const;

  bool same_as(const PolyRing& other) const;

 private:
  PolyRing(std::vector<std::string> vars, Field field, MonomialOrder order)
      : vars_(std::move(vars)), field_(field), order_(order) {}
  std::vector<std::string> vars_;
  Field field_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse polynomial; terms kept strictly decreasing in the ring order.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(const RingPtr& ring, const Coeff& c);
  static Poly variable(const RingPtr& ring, std::size_t i);
  static Poly monomial(const RingPtr& ring, const Monomial& m, const Coeff& c);
  // Terms in any order, duplicates allowed.
  static Poly from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& lead() const { return terms_.front(); }
  Coeff constant_term() const;
  std::uint64_t total_degree() const;
  Exponent degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Coeff& c) const;
  Poly times_term(const Monomial& m, const Coeff& c) const;
  // this - c*m*g in one merge pass.
  Poly sub_mul(const Coeff& c, const Monomial& m, const Poly& g) const;
  Poly pow(unsigned k) const;
  Poly monic() const;
  Poly derivative(std::size_t var) const;

  // Reinterpret in another ring; var_map[i] is the target index of variable i.
  Poly mapped(const RingPtr& target, const std::vector<std::size_t>& var_map) const;
  // Same variables, possibly different order.
  Poly reordered(const RingPtr& target) const;
  // Ring homomorphism sending variable i to images[i].
  Poly substitute(const std::vector<Poly>& images) const;

  // In-place helpers for reduction loops.
  void drop_lead() { terms_.erase(terms_.begin()); }
  // Caller guarantees t is smaller than every stored term.
  void append_smaller(Term t) { terms_.push_back(std::move(t)); }

  std::string str() const;
  bool operator==(const Poly& o) const;

 private:
  void check_ring(const Poly& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Deterministic total order on polynomials (by terms, then coefficients).
bool poly_less(const Poly& a, const Poly& b);

}  // namespace ramify
