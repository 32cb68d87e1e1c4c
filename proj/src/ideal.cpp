#include "ramify/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "ramify/error.hpp"

namespace ramify {

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Poly> gb;
};

Ideal::Ideal() : cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring_)) throw RingMismatch();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Poly>& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb = ramify::groebner(gens_); });
  return cache_->gb;
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Poly& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant();
}

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Poly> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::with(std::vector<Poly> more) const {
  std::vector<Poly> g = gens_;
  for (auto& p : more) g.push_back(std::move(p));
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::reordered(const RingPtr& target) const {
  std::vector<Poly> g;
  for (const auto& p : gens_) g.push_back(p.reordered(target));
  return Ideal(target, std::move(g));
}

bool Ideal::operator==(const Ideal& other) const {
  const auto& a = groebner();
  const auto& b = other.groebner();
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

std::string Ideal::str() const {
  std::string s = "(";
  const auto& gb = groebner();
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (i) s += ", ";
    s += gb[i].str();
  }
  return s + ")";
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars) {
  const RingPtr& R = I.ring();
  if (drop_vars.empty()) return I;
  // Permute so dropped variables come first, then use a block order.
  std::vector<std::size_t> perm;  // new position -> old index
  std::vector<bool> dropped(R->nvars(), false);
  for (auto v : drop_vars) {
    if (v >= R->nvars()) throw Error("eliminated variable out of range");
    dropped[v] = true;
  }
  for (std::size_t i = 0; i < R->nvars(); ++i)
    if (dropped[i]) perm.push_back(i);
  const std::size_t k = perm.size();
  for (std::size_t i = 0; i < R->nvars(); ++i)
    if (!dropped[i]) perm.push_back(i);
  std::vector<std::string> names;
  std::vector<std::size_t> to_new(R->nvars()), to_old(R->nvars());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    names.push_back(R->vars()[perm[j]]);
    to_new[perm[j]] = j;
    to_old[j] = perm[j];
  }
  RingPtr E = PolyRing::make(names, R->field(), MonomialOrder::block(k));
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(g.mapped(E, to_new));
  std::vector<Poly> kept;
  for (const auto& g : ramify::groebner(gens)) {
    bool clean = true;
    for (std::size_t j = 0; j < k; ++j)
      if (g.involves(j)) clean = false;
    if (clean) kept.push_back(g.mapped(R, to_old));
  }
  return Ideal(R, std::move(kept));
}

namespace {

// R with one extra variable appended; returns the ring and the embedding map.
RingPtr extend(const RingPtr& R, const std::string& base) {
  std::vector<std::string> names = R->vars();
  std::string z = base;
  while (R->index_of(z)) z += "_";
  names.push_back(z);
  return PolyRing::make(names, R->field(), R->order());
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

Ideal drop_last(const Ideal& J, const RingPtr& R) {
  std::vector<std::size_t> drop = {J.ring()->nvars() - 1};
  Ideal e = eliminate(J, drop);
  std::vector<Poly> g;
  auto m = identity_map(R->nvars() + 1);
  for (const auto& p : e.groebner()) g.push_back(p.mapped(R, m));
  return Ideal(R, std::move(g));
}

}  // namespace

Ideal saturate(const Ideal& I, const Poly& f) {
  if (f.is_zero()) throw Error("saturation by zero");
  if (f.is_constant()) return I;
  const RingPtr& R = I.ring();
  RingPtr E = extend(R, "_z");
  auto m = identity_map(R->nvars());
  std::vector<Poly> g;
  for (const auto& p : I.gens()) g.push_back(p.mapped(E, m));
  Poly z = Poly::variable(E, R->nvars());
  g.push_back(z * f.mapped(E, m) - Poly::constant(E, 1));
  return drop_last(Ideal(E, std::move(g)), R);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& R = a.ring();
  RingPtr E = extend(R, "_t");
  auto m = identity_map(R->nvars());
  Poly t = Poly::variable(E, R->nvars());
  Poly one_minus_t = Poly::constant(E, 1) - t;
  std::vector<Poly> g;
  for (const auto& p : a.gens()) g.push_back(t * p.mapped(E, m));
  for (const auto& p : b.gens()) g.push_back(one_minus_t * p.mapped(E, m));
  return drop_last(Ideal(E, std::move(g)), R);
}

Ideal quotient(const Ideal& I, const Poly& f) {
  const RingPtr& R = I.ring();
  if (f.is_zero()) return Ideal::unit(R);
  Ideal meet = intersect(I, Ideal(R, {f}));
  std::vector<Poly> g;
  for (const auto& p : meet.groebner()) {
    // p is a multiple of f; divide exactly via reduction against the principal ideal.
    Poly q(R), rem = p;
    while (!rem.is_zero()) {
      const Term& t = rem.lead();
      if (!f.lead().mono.divides(t.mono)) throw Error("inexact division in ideal quotient");
      Monomial mq = t.mono / f.lead().mono;
      Coeff c = R->field().div(t.coeff, f.lead().coeff);
      q += Poly::monomial(R, mq, c);
      rem = rem.sub_mul(c, mq, f);
    }
    g.push_back(q);
  }
  return Ideal(R, std::move(g));
}

bool radical_membership(const Poly& p, const Ideal& I) {
  if (p.is_zero()) return true;
  const RingPtr& R = I.ring();
  RingPtr E = extend(R, "_z");
  auto m = identity_map(R->nvars());
  std::vector<Poly> g;
  for (const auto& q : I.gens()) g.push_back(q.mapped(E, m));
  g.push_back(Poly::variable(E, R->nvars()) * p.mapped(E, m) - Poly::constant(E, 1));
  return Ideal(E, std::move(g)).is_unit();
}

namespace {

// Largest set of variables S such that no leading monomial lives purely in S.
int max_independent(const std::vector<std::vector<bool>>& supports, std::size_t n, std::size_t next,
                    std::vector<bool>& chosen, int size) {
  int best = size;
  for (std::size_t v = next; v < n; ++v) {
    if (size + static_cast<int>(n - v) <= best) break;
    chosen[v] = true;
    bool ok = true;
    for (const auto& sup : supports) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (sup[i] && !chosen[i]) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, max_independent(supports, n, v + 1, chosen, size + 1));
    chosen[v] = false;
  }
  return best;
}

}  // namespace

int krull_dim(const Ideal& I) {
  if (I.is_unit()) return -1;
  const std::size_t n = I.ring()->nvars();
  std::vector<std::vector<bool>> supports;
  for (const auto& g : I.groebner()) {
    std::vector<bool> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = g.lead().mono[i] > 0;
    supports.push_back(std::move(s));
  }
  std::vector<bool> chosen(n, false);
  return max_independent(supports, n, 0, chosen, 0);
}

std::optional<int> codim_in(const Ideal& ambient, const Ideal& locus) {
  Ideal sum = ambient + locus;
  int d = krull_dim(sum);
  if (d < 0) return std::nullopt;
  return krull_dim(ambient) - d;
}

}  // namespace ramify
