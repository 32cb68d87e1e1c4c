#pragma once

#include <string>
#include <vector>

#include "ramify/module.hpp"

namespace ramify {

// Ring map k[y]/J -> k[x]/I, y_j -> f_j; geometrically pi: X -> Y.
class MorphismDecl {
 public:
  // Throws Error naming the first generator g of J with g(f) not in I.
  MorphismDecl(std::string name, RingDecl source, RingDecl target, std::vector<Poly> images);

  const std::string& name() const { return name_; }
  const RingDecl& source() const { return source_; }
  const RingDecl& target() const { return target_; }
  const std::vector<Poly>& images() const { return images_; }
  // n x m, entry (i, j) = d f_j / d x_i.
  const Matrix& jacobian() const { return jacobian_; }

 private:
  std::string name_;
  RingDecl source_, target_;
  std::vector<Poly> images_;
  Matrix jacobian_;
};

// Columns are gradients of the generators of I.
Matrix gradient_matrix(const RingDecl& ring);

PresentedModule kaehler(const RingDecl& ring);
PresentedModule relative_kaehler(const MorphismDecl& m);
// pi^*(Omega_Y) on generators dy_j; relations are gradients of gens(J) evaluated at f.
PresentedModule pullback_omega(const MorphismDecl& m);
// Kernel of pi^*(Omega_Y) -> Omega_X, generators in dy-coordinates.
PresentedModule imperfection(const MorphismDecl& m);
// Image of pi^*(Omega_Y) in Omega_X.
PresentedModule image_in_omega(const MorphismDecl& m);
PresentedModule tangent(const RingDecl& ring);

struct TangentAlong {
  PresentedModule module;  // embedding: generators as vectors in B^m
  Matrix dpi;              // m x n Jacobian transpose
};
TangentAlong tangent_along(const MorphismDecl& m);
PresentedModule critical_module(const MorphismDecl& m);
PresentedModule image_tangent(const MorphismDecl& m);

std::size_t relative_dimension(const MorphismDecl& m);
// d_{X/Y} equals dim X - dim Y (separability test in any characteristic).
bool generically_smooth(const MorphismDecl& m);
// Non-smooth locus is empty (Jacobian criterion with codim = nvars - dim).
bool is_smooth(const RingDecl& ring);

}  // namespace ramify
