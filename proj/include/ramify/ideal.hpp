#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramify/groebner.hpp"
#include "ramify/poly.hpp"

namespace ramify {

// Finitely generated ideal with a lazily computed reduced GB (compute-once, thread-safe).
class Ideal {
 public:
  Ideal();
  Ideal(RingPtr ring, std::vector<Poly> gens);
  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Poly::constant(ring, 1)}); }
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const std::vector<Poly>& groebner() const;

  Poly reduce(const Poly& p) const { return normal_form(p, groebner()); }
  bool contains(const Poly& p) const { return reduce(p).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return groebner().empty(); }

  Ideal operator+(const Ideal& other) const;
  Ideal with(std::vector<Poly> more) const;
  // Same ideal viewed in a ring with the same variables and another order.
  Ideal reordered(const RingPtr& target) const;

  bool operator==(const Ideal& other) const;
  // Reduced GB elements, printed.
  std::string str() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

// I ∩ k[remaining variables], computed with a block order.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars);
Ideal saturate(const Ideal& I, const Poly& f);
Ideal quotient(const Ideal& I, const Poly& f);
Ideal intersect(const Ideal& a, const Ideal& b);
bool radical_membership(const Poly& p, const Ideal& I);
// Dimension of R/I; -1 for the unit ideal.
int krull_dim(const Ideal& I);
// dim R/ambient - dim R/(ambient+locus); nullopt when the locus is empty.
std::optional<int> codim_in(const Ideal& ambient, const Ideal& locus);

}  // namespace ramify
