#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramify/matrix.hpp"

namespace ramify {

// M = coker(relations) over B; I·e_i are implicit relations.
// embedding, when present, sends generator j to column j of an ambient matrix.
class PresentedModule {
 public:
  PresentedModule() = default;
  PresentedModule(RingDecl ring, Matrix relations, std::optional<Matrix> embedding = std::nullopt);
  static PresentedModule free(const RingDecl& ring, std::size_t n);

  const RingDecl& ring() const { return ring_; }
  std::size_t rank() const { return relations_.rows(); }
  const Matrix& relations() const { return relations_; }
  const std::optional<Matrix>& embedding() const { return embedding_; }

  // Splits off generators killed by relations with a nonzero constant entry
  // and drops relations that vanish mod I. Same module, smaller presentation.
  PresentedModule simplified() const;
  // Also removes relations redundant modulo the others (one GB per relation).
  PresentedModule minimized_relations() const;
  bool is_zero() const;

 private:
  RingDecl ring_;
  Matrix relations_;
  std::optional<Matrix> embedding_;
};

// Columns generating ker(B^cols -> B^rows).
Matrix syzygy(const Matrix& a, const RingDecl& B);
// Drops columns of gens lying in the span of the remaining ones plus modulo.
Matrix prune_columns(const Matrix& gens, const Matrix& modulo, const RingDecl& B);
// (im K + im N) / im N inside B^rows, generators = columns of K.
PresentedModule subquotient(const Matrix& K, const Matrix& N, const RingDecl& B);

struct Resolution {
  RingDecl ring;
  std::size_t rank0 = 0;
  std::vector<Matrix> maps;  // maps[k] is d_{k+1}: F_{k+1} -> F_k
  bool terminated = false;
  std::size_t rank(std::size_t i) const { return i == 0 ? rank0 : maps[i - 1].cols(); }
};

Resolution free_resolution(const PresentedModule& M, std::optional<std::size_t> cutoff = std::nullopt);

struct PdVerdict {
  enum class Kind { Exact, AtLeast, ZeroModule } kind = Kind::Exact;
  int value = 0;
  std::string str() const;
};

struct BettiData {
  std::vector<int> betti;
  PdVerdict pd;
  std::optional<int> euler;           // only when pd is exact
  std::vector<int> partial_eulers;    // chi_1, chi_2, ... (exact pd only)
  int chi(std::size_t i) const;       // chi_i, 0 beyond the resolution
};

// Throws when the origin is not on V(I).
std::pair<Resolution, BettiData> minimize_at_origin(const Resolution& res);
BettiData local_betti(const PresentedModule& M, std::optional<std::size_t> cutoff = std::nullopt);

Ideal fitting_ideal(const PresentedModule& M, std::size_t i);
// min{ i : F_i(M) not inside I }.
std::size_t generic_rank(const PresentedModule& M);

PresentedModule dual_module(const PresentedModule& M);
PresentedModule transpose_module(const PresentedModule& M);
// nullopt when the resolution stops short of i+1 maps without terminating.
std::optional<PresentedModule> ext_module(const PresentedModule& M, std::size_t i,
                                          std::optional<std::size_t> cutoff = std::nullopt);
std::optional<PresentedModule> ext_module(const Resolution& res, std::size_t i);
PresentedModule torsion_submodule(const PresentedModule& M, const Poly& f);
// The same module regarded over the ambient polynomial ring.
PresentedModule over_ambient(const PresentedModule& M);
// nullopt when pd is not exact.
std::optional<int> depth_at_origin(const PresentedModule& M);

}  // namespace ramify
