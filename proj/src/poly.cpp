#include "ramify/poly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ramify/error.hpp"

namespace ramify {

RingPtr PolyRing::make(std::vector<std::string> vars, Field field, MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v).second) throw Error("duplicate variable " + v);
  return RingPtr(new PolyRing(std::move(vars), field, order));
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(vars_, field_, order); }

bool PolyRing::same_as(const PolyRing& other) const {
  return this == &other || (vars_ == other.vars_ && field_ == other.field_ && order_ == other.order_);
}

Poly Poly::constant(const RingPtr& ring, const Coeff& c) {
  return monomial(ring, Monomial(ring->nvars()), c);
}

Poly Poly::variable(const RingPtr& ring, std::size_t i) {
  return monomial(ring, Monomial::variable(ring->nvars(), i), 1);
}

Poly Poly::monomial(const RingPtr& ring, const Monomial& m, const Coeff& c) {
  Poly p(ring);
  Coeff x = ring->field().normalize(c);
  if (x != 0) p.terms_.push_back({m, x});
  return p;
}

Poly Poly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const auto& f = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring->cmp(a.mono, b.mono) > 0; });
  Poly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back({std::move(t.mono), f.normalize(t.coeff)});
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

void Poly::check_ring(const Poly& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) throw RingMismatch();
}

Coeff Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

std::uint64_t Poly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Exponent Poly::degree_in(std::size_t var) const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

namespace {

// Merge a + s*b where s = +1/-1 or a general scale applied to b's coefficients.
template <class Scale>
std::vector<Term> merge(const PolyRing& R, const std::vector<Term>& a, const std::vector<Term>& b, Scale scale) {
  const auto& f = R.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term tb = scale(b[j]);
    if (i == a.size()) {
      out.push_back(std::move(tb));
      ++j;
      continue;
    }
    auto c = R.cmp(a[i].mono, tb.mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      Coeff s = f.add(a[i].coeff, tb.coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  check_ring(o);
  Poly r(ring_);
  r.terms_ = merge(*ring_, terms_, o.terms_, [](const Term& t) { return t; });
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_ring(o);
  const auto& f = ring_->field();
  Poly r(ring_);
  r.terms_ = merge(*ring_, terms_, o.terms_, [&](const Term& t) { return Term{t.mono, f.neg(t.coeff)}; });
  return r;
}

Poly Poly::sub_mul(const Coeff& c, const Monomial& m, const Poly& g) const {
  check_ring(g);
  const auto& f = ring_->field();
  Coeff nc = f.neg(c);
  Poly r(ring_);
  r.terms_ = merge(*ring_, terms_, g.terms_, [&](const Term& t) { return Term{t.mono * m, f.mul(nc, t.coeff)}; });
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  if (o.size() < size()) return o * *this;
  // Accumulate one shifted copy of o per term of this.
  Poly acc(ring_);
  for (const auto& t : terms_) acc = acc.sub_mul(ring_->field().neg(t.coeff), t.mono, o);
  return acc;
}

Poly Poly::scaled(const Coeff& c) const {
  const auto& f = ring_->field();
  Coeff x = f.normalize(c);
  if (x == 0) return Poly(ring_);
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = f.mul(t.coeff, x);
  return r;
}

Poly Poly::times_term(const Monomial& m, const Coeff& c) const {
  const auto& f = ring_->field();
  Coeff x = f.normalize(c);
  if (x == 0) return Poly(ring_);
  Poly r(*this);
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff = f.mul(t.coeff, x);
  }
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead().coeff));
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponent e = t.mono[var];
    if (e == 0) continue;
    auto ex = t.mono.exponents();
    ex[var] = e - 1;
    out.push_back({Monomial(std::move(ex)), t.coeff * e});
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::mapped(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Exponent> e(target->nvars(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] >= e.size()) throw Error("variable " + ring_->vars()[i] + " has no image");
      e[var_map[i]] += t.mono[i];
    }
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return from_terms(target, std::move(out));
}

Poly Poly::reordered(const RingPtr& target) const {
  Poly r(target);
  r.terms_ = terms_;
  std::sort(r.terms_.begin(), r.terms_.end(),
            [&](const Term& a, const Term& b) { return target->cmp(a.mono, b.mono) > 0; });
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != ring_->nvars()) throw Error("substitution arity mismatch");
  const RingPtr& target = images.empty() ? ring_ : images[0].ring();
  std::vector<std::map<Exponent, Poly>> cache(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const Poly& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    return cache[i].emplace(e, images[i].pow(e)).first->second;
  };
  Poly acc(target);
  for (const auto& t : terms_) {
    Poly term = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i]) term = term * power(i, t.mono[i]);
    acc += term;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars()[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (ring_ && o.ring_ && !ring_->same_as(*o.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

bool poly_less(const Poly& a, const Poly& b) {
  const auto& R = *a.ring();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = R.cmp(a.terms()[i].mono, b.terms()[i].mono);
    if (c != 0) return c < 0;
    if (a.terms()[i].coeff != b.terms()[i].coeff) return a.terms()[i].coeff < b.terms()[i].coeff;
  }
  return a.size() < b.size();
}

}  // namespace ramify
