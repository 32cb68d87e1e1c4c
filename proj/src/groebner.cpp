#include "ramify/groebner.hpp"

#include <algorithm>
#include <optional>

#include "ramify/budget.hpp"
#include "ramify/error.hpp"

namespace ramify {

namespace {

struct Lead {
  std::size_t comp;
  const Term* term;
};

std::optional<Lead> lead_of(const Vec& v, ModuleOrder order) {
  std::optional<Lead> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (order == ModuleOrder::PositionOverTerm) return Lead{i, &v[i].lead()};
    if (!best || v[i].ring()->cmp(v[i].lead().mono, best->term->mono) > 0) best = Lead{i, &v[i].lead()};
  }
  return best;
}

// Module term order on (component, monomial).
std::strong_ordering cmp_terms(const PolyRing& R, std::size_t ca, const Monomial& ma, std::size_t cb,
                               const Monomial& mb, ModuleOrder order) {
  if (order == ModuleOrder::PositionOverTerm) {
    if (ca != cb) return cb <=> ca;
    return R.cmp(ma, mb);
  }
  if (auto c = R.cmp(ma, mb); c != 0) return c;
  return cb <=> ca;
}

struct Elem {
  Vec v;
  std::size_t comp;
  Monomial lm;
  Coeff lc;
};

Elem make_elem(Vec v, ModuleOrder order) {
  auto l = lead_of(v, order);
  Elem e{std::move(v), l->comp, l->term->mono, l->term->coeff};
  return e;
}

const PolyRing& ring_of(const Vec& v) { return *v.front().ring(); }

// Reducers are scanned in the given order; the first divisor wins.
Vec reduce(Vec p, const std::vector<const Elem*>& reducers, ModuleOrder order) {
  Vec r;
  r.reserve(p.size());
  for (const auto& x : p) r.emplace_back(x.ring());
  const Field& F = ring_of(p).field();
  std::size_t steps = 0;
  for (;;) {
    auto l = lead_of(p, order);
    if (!l) break;
    if (++steps % 256 == 0) budget_check_time();
    const Elem* hit = nullptr;
    for (const Elem* g : reducers)
      if (g->comp == l->comp && g->lm.divides(l->term->mono)) {
        hit = g;
        break;
      }
    if (hit) {
      Monomial q = l->term->mono / hit->lm;
      Coeff c = F.div(l->term->coeff, hit->lc);
      for (std::size_t i = 0; i < p.size(); ++i)
        if (!hit->v[i].is_zero()) p[i] = p[i].sub_mul(c, q, hit->v[i]);
    } else {
      std::size_t c = l->comp;
      r[c].append_smaller(*l->term);
      p[c].drop_lead();
    }
  }
  return r;
}

Vec monic(Vec v, const Coeff& lc) {
  const Field& F = ring_of(v).field();
  Coeff inv = F.inv(lc);
  for (auto& x : v) x = x.scaled(inv);
  return v;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(std::size_t rank, ModuleOrder order) : rank_(rank), order_(order) {}

  std::vector<Vec> run(std::span<const Vec> gens) {
    for (const auto& g : gens) {
      if (g.size() != rank_) throw Error("module element has wrong rank");
      bool zero = std::all_of(g.begin(), g.end(), [](const Poly& p) { return p.is_zero(); });
      if (zero) continue;
      ring_ = &ring_of(g);
      for (const auto& p : g) budget_check_degree(p.total_degree());
      Vec h = reduce(g, sorted_reducers(), order_);
      add_reduced(std::move(h));
    }
    while (!pairs_.empty()) {
      budget_check_time();
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        auto c = cmp_terms(*ring_, elems_[a.i].comp, a.lcm, elems_[b.i].comp, b.lcm, order_);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair pr = *it;
      pairs_.erase(it);
      budget_check_degree(pr.lcm.degree());
      Vec s = spoly(elems_[pr.i], elems_[pr.j], pr.lcm);
      add_reduced(reduce(std::move(s), sorted_reducers(), order_));
    }
    return interreduce();
  }

 private:
  std::vector<const Elem*> sorted_reducers() const {
    std::vector<const Elem*> out;
    for (const auto& e : elems_) out.push_back(&e);
    std::stable_sort(out.begin(), out.end(), [&](const Elem* a, const Elem* b) {
      return cmp_terms(*ring_, a->comp, a->lm, b->comp, b->lm, order_) < 0;
    });
    return out;
  }

  Vec spoly(const Elem& a, const Elem& b, const Monomial& lcm) const {
    const Field& F = ring_->field();
    Monomial qa = lcm / a.lm, qb = lcm / b.lm;
    Coeff ca = F.inv(a.lc), cb = F.inv(b.lc);
    Vec s;
    for (std::size_t i = 0; i < rank_; ++i)
      s.push_back(a.v[i].times_term(qa, ca).sub_mul(cb, qb, b.v[i]));
    return s;
  }

  bool disjoint(const Elem& a, const Elem& b) const { return rank_ == 1 && a.lm.coprime(b.lm); }

  void add_reduced(Vec h) {
    auto l = lead_of(h, order_);
    if (!l) return;
    Coeff lc = l->term->coeff;
    elems_.push_back(make_elem(monic(std::move(h), lc), order_));
    update(elems_.size() - 1);
  }

  // Gebauer–Möller pair bookkeeping.
  void update(std::size_t hi) {
    const Elem& h = elems_[hi];
    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g)
      if (elems_[g].comp == h.comp) c.push_back({g, hi, elems_[g].lm.lcm(h.lm)});
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = disjoint(elems_[p.i], h);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (c[m].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : d)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      const Elem& g1 = elems_[p.i];
      const Elem& g2 = elems_[p.j];
      bool drop = g1.comp == h.comp && h.lm.divides(p.lcm) && !(g1.lm.lcm(h.lm) == p.lcm) &&
                  !(h.lm.lcm(g2.lm) == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : d)
      if (!disjoint(elems_[p.i], h)) kept.push_back(std::move(p));
    pairs_ = std::move(kept);
  }

  std::vector<Vec> interreduce() {
    auto order = sorted_reducers();
    std::vector<const Elem*> minimal;
    for (const Elem* e : order) {
      bool redundant = false;
      for (const Elem* m : minimal)
        if (m->comp == e->comp && m->lm.divides(e->lm)) redundant = true;
      if (!redundant) minimal.push_back(e);
    }
    std::vector<Vec> out;
    for (const Elem* e : minimal) {
      std::vector<const Elem*> others;
      for (const Elem* m : minimal)
        if (m != e) others.push_back(m);
      // Lead term is irreducible by the others, so reduction keeps it.
      Vec r = reduce(e->v, others, order_);
      out.push_back(monic(std::move(r), e->lc));
    }
    return out;
  }

  std::size_t rank_;
  ModuleOrder order_;
  const PolyRing* ring_ = nullptr;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Vec> module_groebner(std::span<const Vec> gens, std::size_t rank, ModuleOrder order) {
  return Engine(rank, order).run(gens);
}

Vec module_normal_form(const Vec& v, std::span<const Vec> gb, ModuleOrder order) {
  if (v.empty()) return v;
  std::vector<Elem> elems;
  for (const auto& g : gb) elems.push_back(make_elem(g, order));
  std::vector<const Elem*> ptrs;
  for (const auto& e : elems) ptrs.push_back(&e);
  const PolyRing& R = ring_of(v);
  std::stable_sort(ptrs.begin(), ptrs.end(), [&](const Elem* a, const Elem* b) {
    return cmp_terms(R, a->comp, a->lm, b->comp, b->lm, order) < 0;
  });
  return reduce(v, ptrs, order);
}

std::vector<Poly> groebner(std::span<const Poly> gens) {
  std::vector<Vec> vs;
  for (const auto& g : gens) vs.push_back({g});
  std::vector<Poly> out;
  for (auto& v : module_groebner(vs, 1, ModuleOrder::TermOverPosition)) out.push_back(std::move(v[0]));
  return out;
}

Poly normal_form(const Poly& p, std::span<const Poly> gb) {
  std::vector<Vec> vs;
  for (const auto& g : gb) vs.push_back({g});
  return module_normal_form({p}, vs, ModuleOrder::TermOverPosition)[0];
}

}  // namespace ramify
