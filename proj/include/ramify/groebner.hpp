#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ramify/poly.hpp"

namespace ramify {

// Element of a free module R^rank.
using Vec = std::vector<Poly>;

enum class ModuleOrder {
  PositionOverTerm,  // smaller component index is larger
  TermOverPosition,
};

// Reduced, monic Gröbner basis sorted ascending by leading term.
std::vector<Vec> module_groebner(std::span<const Vec> gens, std::size_t rank, ModuleOrder order);
Vec module_normal_form(const Vec& v, std::span<const Vec> gb, ModuleOrder order);

// Rank-one convenience wrappers; polynomials must share the ring used for the order.
std::vector<Poly> groebner(std::span<const Poly> gens);
Poly normal_form(const Poly& p, std::span<const Poly> gb);

}  // namespace ramify
