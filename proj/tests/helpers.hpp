#pragma once

#include <string>
#include <vector>

#include "ramify/ideal.hpp"
#include "ramify/parser.hpp"

namespace th {

inline ramify::RingPtr ring(std::vector<std::string> vars,
                            ramify::MonomialOrder order = ramify::MonomialOrder::grevlex(),
                            ramify::Field f = ramify::Field::rationals()) {
  return ramify::PolyRing::make(std::move(vars), f, order);
}

inline ramify::Poly P(const ramify::RingPtr& R, const std::string& s) { return ramify::parse_poly(s, R); }

inline ramify::Ideal ideal(const ramify::RingPtr& R, std::vector<std::string> gens) {
  std::vector<ramify::Poly> g;
  for (const auto& s : gens) g.push_back(P(R, s));
  return ramify::Ideal(R, std::move(g));
}

}  // namespace th
