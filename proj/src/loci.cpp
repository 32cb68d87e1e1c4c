#include "ramify/loci.hpp"

#include <algorithm>

#include "ramify/budget.hpp"
#include "ramify/error.hpp"
#include "ramify/factor.hpp"

namespace ramify {

namespace {

// Generator c*v + h with c a nonzero constant and v absent from h.
std::optional<std::pair<std::size_t, Poly>> linear_variable(const std::vector<Poly>& gens, std::size_t& which) {
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Poly& g = gens[gi];
    const RingPtr& R = g.ring();
    for (std::size_t v = 0; v < R->nvars(); ++v) {
      if (g.degree_in(v) != 1) continue;
      Coeff c = 0;
      bool ok = true;
      for (const auto& t : g.terms())
        if (t.mono[v] == 1) {
          if (!t.mono.is_one() && t.mono.degree() != 1) ok = false;
          c = t.coeff;
        }
      if (!ok) continue;
      // v = -(g - c v)/c
      Poly cv = Poly::monomial(R, Monomial::variable(R->nvars(), v), c);
      Poly image = (cv - g).scaled(R->field().inv(c));
      which = gi;
      return std::make_pair(v, image);
    }
  }
  return std::nullopt;
}

bool contains_origin(const Ideal& P) {
  for (const auto& g : P.groebner())
    if (g.constant_term() != 0) return false;
  return true;
}

}  // namespace

bool certified_prime(const Ideal& P) {
  if (P.is_unit()) return false;
  const RingPtr& R = P.ring();
  std::vector<Poly> gens = P.groebner();
  for (;;) {
    std::size_t which = 0;
    auto lin = linear_variable(gens, which);
    if (!lin) break;
    std::vector<Poly> images;
    for (std::size_t i = 0; i < R->nvars(); ++i) images.push_back(Poly::variable(R, i));
    images[lin->first] = lin->second;
    std::vector<Poly> rest;
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      if (gi != which) rest.push_back(gens[gi].substitute(images));
    Ideal next(R, rest);
    if (next.is_unit()) return false;
    gens = next.groebner();
  }
  if (gens.empty()) return true;
  return gens.size() == 1 && certified_irreducible(gens[0]);
}

Splitting split_components(const Ideal& J) {
  Splitting out;
  std::vector<Ideal> work{J};
  std::vector<Ideal> pieces;
  std::vector<bool> is_prime;
  while (!work.empty()) {
    budget_check_time();
    Ideal K = std::move(work.back());
    work.pop_back();
    if (K.is_unit()) continue;
    if (certified_prime(K)) {
      pieces.push_back(K);
      is_prime.push_back(true);
      continue;
    }
    bool split = false;
    for (const auto& g : K.groebner()) {
      Factorization f = factor(g);
      if (f.factors.empty()) continue;
      bool trivial = f.factors.size() == 1 && f.factors[0].second == 1;
      if (trivial) continue;
      bool known = false;
      for (const auto& [h, k] : f.factors)
        if (K.contains(h)) known = true;
      if (known) continue;
      for (const auto& [h, k] : f.factors) work.push_back(K.with({h}));
      split = true;
      break;
    }
    if (!split) {
      pieces.push_back(K);
      is_prime.push_back(false);
    }
  }
  // Drop pieces whose zero set lies inside another piece's zero set.
  std::vector<bool> keep(pieces.size(), true);
  for (std::size_t a = 0; a < pieces.size(); ++a)
    for (std::size_t b = 0; b < pieces.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (pieces[a].contains(pieces[b])) {
        bool equal = pieces[b].contains(pieces[a]);
        if (!equal || b < a) keep[a] = false;
      }
    }
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    if (!keep[a]) continue;
    (is_prime[a] ? out.primes : out.uncertified).push_back(pieces[a]);
  }
  auto by_str = [](const Ideal& x, const Ideal& y) { return x.str() < y.str(); };
  std::sort(out.primes.begin(), out.primes.end(), by_str);
  std::sort(out.uncertified.begin(), out.uncertified.end(), by_str);
  return out;
}

LocusReport codim_report(const RingDecl& ambient, const Ideal& locus, std::string kind, std::size_t index) {
  LocusReport r;
  r.kind = std::move(kind);
  r.index = index;
  r.ideal = ambient.ideal() + locus;
  r.empty = r.ideal.is_unit();
  if (r.empty) {
    r.certified = true;
    return r;
  }
  const int dim_b = ambient.dim();
  r.codim_lower = dim_b - krull_dim(r.ideal);
  Splitting s = split_components(r.ideal);
  for (const auto& p : s.primes) r.components.push_back({p, dim_b - krull_dim(p), true});
  for (const auto& p : s.uncertified) r.components.push_back({p, dim_b - krull_dim(p), false});
  r.certified = s.uncertified.empty();
  if (r.certified) {
    int mx = 0;
    Ideal rad = s.primes.front();
    for (const auto& c : r.components) mx = std::max(mx, c.codim);
    for (std::size_t i = 1; i < s.primes.size(); ++i) rad = intersect(rad, s.primes[i]);
    r.codim_upper = mx;
    r.radical = rad;
  }
  return r;
}

LocusReport branch_scheme(const MorphismDecl& m, std::size_t i) {
  PresentedModule omega = relative_kaehler(m);
  std::size_t d = generic_rank(omega);
  return codim_report(m.target(), fitting_ideal(omega, d + i), "branch", i);
}

LocusReport critical_scheme(const MorphismDecl& m, std::size_t i) {
  return codim_report(m.target(), fitting_ideal(critical_module(m), i), "critical", i);
}

LocusReport smoothness_locus(const RingDecl& ring) {
  const int dim = ring.dim();
  if (dim < 0) throw Error("ring " + ring.name() + " is empty");
  // Minors of size nvars - dim of the Jacobian, i.e. F_dim(Omega).
  return codim_report(ring, fitting_ideal(kaehler(ring), static_cast<std::size_t>(dim)), "smoothness", 0);
}

Ideal discriminant(const MorphismDecl& m) {
  const RingDecl& X = m.target();
  const RingDecl& Y = m.source();
  std::vector<std::string> names = X.ring()->vars();
  std::vector<std::size_t> ymap;
  for (const auto& y : Y.ring()->vars()) {
    std::string name = y;
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    ymap.push_back(names.size());
    names.push_back(name);
  }
  RingPtr joint = PolyRing::make(names, X.ring()->field());
  std::vector<std::size_t> xmap(X.nvars());
  for (std::size_t i = 0; i < X.nvars(); ++i) xmap[i] = i;
  LocusReport b = branch_scheme(m, 0);
  std::vector<Poly> gens;
  for (const auto& g : b.ideal.gens()) gens.push_back(g.mapped(joint, xmap));
  for (std::size_t j = 0; j < m.images().size(); ++j)
    gens.push_back(Poly::variable(joint, ymap[j]) - m.images()[j].mapped(joint, xmap));
  std::vector<std::size_t> drop(X.nvars());
  for (std::size_t i = 0; i < X.nvars(); ++i) drop[i] = i;
  Ideal e = eliminate(Ideal(joint, gens), drop);
  std::vector<std::size_t> back(names.size(), Y.nvars());
  for (std::size_t j = 0; j < ymap.size(); ++j) back[ymap[j]] = j;
  std::vector<Poly> out = Y.ideal().gens();
  for (const auto& g : e.groebner()) out.push_back(g.mapped(Y.ring(), back));
  return Ideal(Y.ring(), out);
}

HeightBounds height_at_origin(const RingDecl& ambient, const Ideal& locus) {
  LocusReport r = codim_report(ambient, locus);
  HeightBounds h;
  if (r.empty || !contains_origin(r.ideal)) {
    h.through_origin = false;
    return h;
  }
  const int dim_b = ambient.dim();
  h.lower = r.codim_lower;
  h.upper = dim_b;
  // Every component of a homogeneous ideal passes through the origin.
  const auto& gb = r.ideal.groebner();
  if (std::all_of(gb.begin(), gb.end(), [](const Poly& g) { return is_homogeneous(g); })) {
    h.upper = h.lower;
    return h;
  }
  bool uncertified_at_origin = false;
  int best_certified = dim_b + 1;
  for (const auto& c : r.components) {
    if (!contains_origin(c.ideal)) continue;
    if (c.certified)
      best_certified = std::min(best_certified, c.codim);
    else
      uncertified_at_origin = true;
  }
  if (best_certified <= dim_b) h.upper = best_certified;
  if (!uncertified_at_origin && best_certified <= dim_b) h.lower = best_certified;
  // A piece through the origin bounds the height below by its own codimension only globally.
  h.lower = std::min(h.lower, h.upper);
  return h;
}

}  // namespace ramify
