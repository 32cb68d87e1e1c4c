#include "ramify/monomial.hpp"

#include <algorithm>

#include "ramify/error.hpp"

namespace ramify {

Monomial::Monomial(std::vector<Exponent> e) : e_(std::move(e)) {
  for (Exponent x : e_) {
    if (x > kMaxExponent) throw ExponentOverflow();
    deg_ += x;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent k) {
  std::vector<Exponent> e(nvars, 0);
  e[i] = k;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] += other.e_[i];
    if (r.e_[i] > kMaxExponent) throw ExponentOverflow();
  }
  r.deg_ = deg_ + other.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
  r.deg_ = deg_ - other.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = std::max(e_[i], other.e_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && other.e_[i]) return false;
  return true;
}

namespace {

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.size() != b.size()) throw Error("monomial length mismatch");
  const std::size_t n = a.size();
  switch (order.kind) {
    case OrderKind::Lex:
      return lex_range(a, b, 0, n);
    case OrderKind::GrevLex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::Block: {
      const std::size_t k = std::min(order.block_split, n);
      if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace ramify
