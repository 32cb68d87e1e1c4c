#include "ramify/differentials.hpp"

#include "ramify/error.hpp"
#include "ramify/loci.hpp"

namespace ramify {

MorphismDecl::MorphismDecl(std::string name, RingDecl source, RingDecl target, std::vector<Poly> images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.nvars())
    throw Error("map " + name_ + ": expected " + std::to_string(source_.nvars()) + " images, got " +
                std::to_string(images_.size()));
  for (const auto& f : images_)
    if (!f.ring()->same_as(*target_.ring())) throw RingMismatch();
  for (const auto& g : source_.ideal().gens())
    if (!target_.is_zero(g.substitute(images_)))
      throw Error("map " + name_ + " is ill-defined: generator " + g.str() + " of " + source_.name() +
                  " does not map into the ideal of " + target_.name());
  const std::size_t n = target_.nvars(), m = images_.size();
  jacobian_ = Matrix(target_.ring(), n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) jacobian_.at(i, j) = target_.reduce(images_[j].derivative(i));
}

Matrix gradient_matrix(const RingDecl& ring) {
  const auto& gens = ring.ideal().gens();
  Matrix a(ring.ring(), ring.nvars(), gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c)
    for (std::size_t i = 0; i < ring.nvars(); ++i) a.at(i, c) = gens[c].derivative(i);
  return a;
}

PresentedModule kaehler(const RingDecl& ring) { return PresentedModule(ring, gradient_matrix(ring).reduced(ring)); }

PresentedModule relative_kaehler(const MorphismDecl& m) {
  const RingDecl& X = m.target();
  return PresentedModule(X, gradient_matrix(X).hcat(m.jacobian()).reduced(X));
}

namespace {

// Gradients of gens(J) evaluated at f: an m x #gens(J) matrix over B.
Matrix pulled_gradients(const MorphismDecl& m) {
  Matrix g = gradient_matrix(m.source());
  Matrix out(m.target().ring(), g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out.at(r, c) = m.target().reduce(g.at(r, c).substitute(m.images()));
  return out;
}

}  // namespace

PresentedModule pullback_omega(const MorphismDecl& m) { return PresentedModule(m.target(), pulled_gradients(m)); }

PresentedModule imperfection(const MorphismDecl& m) {
  const RingDecl& X = m.target();
  const std::size_t mm = m.images().size();
  Matrix ax = gradient_matrix(X);
  Matrix k = syzygy(m.jacobian().hcat(ax), X).row_range(0, mm);
  Matrix gj = pulled_gradients(m);
  return subquotient(prune_columns(k, gj, X), gj, X);
}

PresentedModule image_in_omega(const MorphismDecl& m) {
  const RingDecl& X = m.target();
  return subquotient(m.jacobian(), gradient_matrix(X), X);
}

PresentedModule tangent(const RingDecl& ring) { return dual_module(kaehler(ring)); }

namespace {

Matrix tangent_vectors(const PresentedModule& omega) {
  const RingDecl& B = omega.ring();
  const Matrix& A = omega.relations();
  if (A.cols() == 0) return Matrix::identity(B.ring(), omega.rank());
  return syzygy(A.transpose(), B);
}

}  // namespace

TangentAlong tangent_along(const MorphismDecl& m) {
  const RingDecl& X = m.target();
  Matrix ky = tangent_vectors(pullback_omega(m));
  PresentedModule mod = subquotient(ky, Matrix(X.ring(), ky.rows(), 0), X);
  Matrix dpi = m.jacobian().transpose();
  Matrix kx = tangent_vectors(kaehler(X));
  if (!SpanTester(ky, X).contains_all(dpi * kx))
    throw Error("map " + m.name() + ": tangent images are not derivations along the map");
  return {mod, dpi};
}

PresentedModule critical_module(const MorphismDecl& m) {
  const RingDecl& X = m.target();
  Matrix ky = tangent_vectors(pullback_omega(m));
  Matrix image = m.jacobian().transpose() * tangent_vectors(kaehler(X));
  return subquotient(ky, image.reduced(X), X);
}

PresentedModule image_tangent(const MorphismDecl& m) {
  const RingDecl& X = m.target();
  Matrix image = (m.jacobian().transpose() * tangent_vectors(kaehler(X))).reduced(X);
  return subquotient(image, Matrix(X.ring(), image.rows(), 0), X);
}

std::size_t relative_dimension(const MorphismDecl& m) { return generic_rank(relative_kaehler(m)); }

bool generically_smooth(const MorphismDecl& m) {
  return static_cast<int>(relative_dimension(m)) == m.target().dim() - m.source().dim();
}

bool is_smooth(const RingDecl& ring) { return smoothness_locus(ring).empty; }

}  // namespace ramify
