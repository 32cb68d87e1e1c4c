#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramify/module.hpp"

namespace ramify {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;      // cases actually evaluated
  std::size_t failures = 0;
  std::size_t skipped = 0;    // generated cases outside the suite's domain (e.g. zero at the origin)
  std::string first_failure;
};

PropertyResult prop_dual_fitting(std::uint64_t seed, std::size_t cases);
PropertyResult prop_fitting_chain(std::uint64_t seed, std::size_t cases);
PropertyResult prop_auslander_buchsbaum(std::uint64_t seed, std::size_t cases);
PropertyResult prop_eagon_northcott(std::uint64_t seed, std::size_t cases);
PropertyResult prop_groebner(std::uint64_t seed, std::size_t cases);
PropertyResult prop_roundtrip(std::uint64_t seed, std::size_t cases);
std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases);

// Depth at the origin over Q[x,y] from Koszul cohomology H^i(x, y; M).
int koszul_depth_plane(const PresentedModule& M);

}  // namespace ramify
