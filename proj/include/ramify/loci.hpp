#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramify/differentials.hpp"

namespace ramify {

struct Component {
  Ideal ideal;
  int codim = 0;
  bool certified = false;  // prime by the substitution/irreducibility certificate
};

struct LocusReport {
  std::string kind;  // branch | critical | smoothness | discriminant
  std::size_t index = 0;
  Ideal ideal;       // in the ambient polynomial ring, contains I
  bool empty = false;
  int codim_lower = 0;                 // dim B - dim B/locus
  std::optional<int> codim_upper;      // codim+, only when certified
  bool certified = false;
  std::vector<Component> components;
  std::optional<Ideal> radical;        // intersection of certified components
};

struct Splitting {
  std::vector<Ideal> primes;
  std::vector<Ideal> uncertified;
};

// Naive decomposition of V(J) into certified primes and leftover pieces.
Splitting split_components(const Ideal& J);
bool certified_prime(const Ideal& P);

LocusReport codim_report(const RingDecl& ambient, const Ideal& locus, std::string kind = "locus",
                         std::size_t index = 0);
LocusReport branch_scheme(const MorphismDecl& m, std::size_t i);
LocusReport critical_scheme(const MorphismDecl& m, std::size_t i);
LocusReport smoothness_locus(const RingDecl& ring);
// Closure of pi(B_pi), as an ideal of the source ring containing J.
Ideal discriminant(const MorphismDecl& m);

// Height of the locus at the origin: minimum over components through the origin.
struct HeightBounds {
  bool through_origin = true;
  int lower = 0;
  int upper = 0;
  bool exact() const { return lower == upper; }
};
HeightBounds height_at_origin(const RingDecl& ambient, const Ideal& locus);

}  // namespace ramify
