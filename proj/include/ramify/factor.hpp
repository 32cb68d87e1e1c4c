#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramify/poly.hpp"

namespace ramify {

// Naive splitting: monomial content, content in one variable, squarefree parts,
// and Kronecker factoring of univariate or homogeneous bivariate pieces up to degree 8.
struct Factorization {
  Coeff unit = 1;
  std::vector<std::pair<Poly, int>> factors;  // monic, pairwise distinct
  bool certified = true;                      // every factor certified irreducible
};

Factorization factor(const Poly& f);
bool certified_irreducible(const Poly& f);
// All terms of the same total degree.
bool is_homogeneous(const Poly& f);
Poly poly_gcd(const Poly& a, const Poly& b);
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

}  // namespace ramify
