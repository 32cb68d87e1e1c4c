#include "ramify/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "ramify/budget.hpp"
#include "ramify/ideal.hpp"

namespace ramify {

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  const RingPtr& R = a.ring();
  if (b.is_zero()) return std::nullopt;
  Poly q(R), rem = a;
  while (!rem.is_zero()) {
    const Term& t = rem.lead();
    if (!b.lead().mono.divides(t.mono)) return std::nullopt;
    Monomial mq = t.mono / b.lead().mono;
    Coeff c = R->field().div(t.coeff, b.lead().coeff);
    q += Poly::monomial(R, mq, c);
    rem = rem.sub_mul(c, mq, b);
  }
  return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  const RingPtr& R = a.ring();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(R, 1);
  if (divide_exact(a, b)) return b.monic();
  if (divide_exact(b, a)) return a.monic();
  Ideal meet = intersect(Ideal(R, {a}), Ideal(R, {b}));
  const auto& gb = meet.groebner();
  // The intersection of two principal ideals is principal: generated by lcm(a, b).
  Poly lcm = gb.front();
  return divide_exact(a * b, lcm).value().monic();
}

bool is_homogeneous(const Poly& f) {
  for (const auto& t : f.terms())
    if (t.mono.degree() != f.lead().mono.degree()) return false;
  return true;
}

namespace {

using UPoly = std::vector<Coeff>;  // coefficient of x^k at index k

std::vector<std::size_t> variables_of(const Poly& f) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
    if (f.involves(i)) v.push_back(i);
  return v;
}

// Coefficients of f in variable v (as polynomials in the other variables).
std::vector<Poly> coefficients_in(const Poly& f, std::size_t v) {
  std::vector<std::vector<Term>> buckets(f.degree_in(v) + 1);
  for (const auto& t : f.terms()) {
    auto e = t.mono.exponents();
    Exponent k = e[v];
    e[v] = 0;
    buckets[k].push_back({Monomial(std::move(e)), t.coeff});
  }
  std::vector<Poly> out;
  for (auto& b : buckets) out.push_back(Poly::from_terms(f.ring(), std::move(b)));
  return out;
}

Coeff ueval(const UPoly& p, const Coeff& x) {
  Coeff acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::optional<UPoly> udivide(UPoly a, const UPoly& b) {
  trim(a);
  if (b.empty()) return std::nullopt;
  if (a.size() < b.size()) return a.empty() ? std::optional<UPoly>(UPoly{}) : std::nullopt;
  UPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  return q;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Coeff>& xs, const std::vector<Coeff>& ys) {
  const std::size_t n = xs.size();
  UPoly result(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    UPoly basis{1};
    Coeff denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      UPoly next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * ys[i] / denom;
  }
  trim(result);
  return result;
}

// A proper factor of a univariate rational polynomial, nullopt if irreducible,
// and a flag set when the search was abandoned.
std::optional<UPoly> kronecker(UPoly f, bool& gave_up) {
  trim(f);
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return std::nullopt;
  // Clear denominators.
  mpz_class l = 1;
  for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : f) c *= l;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::vector<Coeff> xs, ys;
    std::vector<std::vector<mpz_class>> divs;
    for (long a = 0; xs.size() < d + 1 && a < 64; ++a) {
      for (long s : {a, -a}) {
        if (xs.size() >= d + 1 || (s == -a && a == 0)) continue;
        Coeff v = ueval(f, Coeff(s));
        if (v == 0) return UPoly{Coeff(-s), Coeff(1)};
        if (abs(v.get_num()) > mpz_class("1000000000000")) continue;
        xs.push_back(Coeff(s));
        divs.push_back(divisors(v.get_num()));
      }
    }
    if (xs.size() < d + 1) {
      gave_up = true;
      return std::nullopt;
    }
    double combos = 1;
    for (const auto& dv : divs) combos *= 2.0 * static_cast<double>(dv.size());
    if (combos > 400000) {
      gave_up = true;
      return std::nullopt;
    }
    std::vector<std::size_t> idx(d + 1, 0);
    std::vector<int> sign(d + 1, 1);
    std::function<std::optional<UPoly>(std::size_t)> rec = [&](std::size_t k) -> std::optional<UPoly> {
      if (k == d + 1) {
        for (std::size_t i = 0; i <= d; ++i) ys[i] = Coeff(divs[i][idx[i]] * sign[i]);
        UPoly g = interpolate(xs, ys);
        if (g.size() < 2) return std::nullopt;
        if (auto q = udivide(f, g); q && q->size() >= 2) return g;
        return std::nullopt;
      }
      for (std::size_t j = 0; j < divs[k].size(); ++j)
        for (int s : {1, -1}) {
          if (k == 0 && s < 0) continue;
          idx[k] = j;
          sign[k] = s;
          if (auto r = rec(k + 1)) return r;
        }
      return std::nullopt;
    };
    ys.assign(d + 1, 0);
    budget_check_time();
    if (auto g = rec(0)) return g;
  }
  return std::nullopt;
}

// Univariate view along variable v (f involves only v).
UPoly to_upoly(const Poly& f, std::size_t v) {
  UPoly u(f.degree_in(v) + 1, 0);
  for (const auto& t : f.terms()) u[t.mono[v]] = t.coeff;
  return u;
}

Poly from_upoly(const UPoly& u, const RingPtr& R, std::size_t v) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] != 0) terms.push_back({Monomial::variable(R->nvars(), v, static_cast<Exponent>(k)), u[k]});
  return Poly::from_terms(R, std::move(terms));
}

// Dehomogenize a bivariate form at v2 = 1; homogenize back to degree dg.
UPoly dehomogenize(const Poly& f, std::size_t v1) { return to_upoly(f, v1); }

Poly homogenize(const UPoly& u, const RingPtr& R, std::size_t v1, std::size_t v2) {
  const std::size_t dg = u.size() - 1;
  std::vector<Term> terms;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    std::vector<Exponent> e(R->nvars(), 0);
    e[v1] = static_cast<Exponent>(k);
    e[v2] = static_cast<Exponent>(dg - k);
    terms.push_back({Monomial(std::move(e)), u[k]});
  }
  return Poly::from_terms(R, std::move(terms));
}

// One nontrivial split f = a * b with both non-constant, if the cheap methods find it.
std::optional<std::pair<Poly, Poly>> split_once(const Poly& f, bool& gave_up) {
  const RingPtr& R = f.ring();
  const bool char0 = R->field().is_rational();
  auto vars = variables_of(f);
  auto accept = [&](const Poly& g) -> std::optional<std::pair<Poly, Poly>> {
    if (g.is_constant()) return std::nullopt;
    auto q = divide_exact(f, g);
    if (!q || q->is_constant()) return std::nullopt;
    return std::make_pair(g, *q);
  };
  // Monomial content.
  for (auto v : vars) {
    Exponent lo = f.lead().mono[v];
    for (const auto& t : f.terms()) lo = std::min(lo, t.mono[v]);
    if (lo > 0) {
      if (auto r = accept(Poly::variable(R, v))) return r;
    }
  }
  // Content with respect to one variable.
  for (auto v : vars) {
    auto cs = coefficients_in(f, v);
    Poly g(R);
    for (const auto& c : cs) {
      g = poly_gcd(g, c);
      if (g.is_constant()) break;
    }
    if (auto r = accept(g)) return r;
  }
  // Repeated factors.
  for (auto v : vars) {
    Poly df = f.derivative(v);
    if (df.is_zero()) continue;
    if (auto r = accept(poly_gcd(f, df))) return r;
  }
  if (!char0) return std::nullopt;
  if (vars.size() == 1 && f.total_degree() <= 8) {
    if (auto g = kronecker(to_upoly(f, vars[0]), gave_up)) return accept(from_upoly(*g, R, vars[0]));
  }
  if (vars.size() == 2 && is_homogeneous(f) && f.total_degree() <= 8) {
    if (auto g = kronecker(dehomogenize(f, vars[0]), gave_up)) return accept(homogenize(*g, R, vars[0], vars[1]));
  }
  return std::nullopt;
}

bool linear_certificate(const Poly& f) {
  for (std::size_t v = 0; v < f.ring()->nvars(); ++v) {
    if (f.degree_in(v) != 1) continue;
    auto cs = coefficients_in(f, v);
    if (poly_gcd(cs[0], cs[1]).is_constant()) return true;
  }
  return false;
}

}  // namespace

// Ostrowski: a binomial whose Newton segment has no interior lattice point
// factors only through monomials, so it is irreducible without monomial content.
bool binomial_certificate(const Poly& f) {
  if (f.terms().size() != 2) return false;
  const Monomial& a = f.terms()[0].mono;
  const Monomial& b = f.terms()[1].mono;
  mpz_class g = 0;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] > 0 && b[v] > 0) return false;
    g = gcd(g, mpz_class(static_cast<long>(a[v]) - static_cast<long>(b[v])));
  }
  return g == 1;
}

bool certified_irreducible(const Poly& f) {
  if (f.is_constant()) return false;
  if (f.total_degree() == 1 || linear_certificate(f) || binomial_certificate(f)) return true;
  const RingPtr& R = f.ring();
  if (!R->field().is_rational()) return false;
  auto vars = variables_of(f);
  bool gave_up = false;
  if (vars.size() == 1 && f.total_degree() <= 8) return !kronecker(to_upoly(f, vars[0]), gave_up) && !gave_up;
  if (vars.size() == 2 && is_homogeneous(f) && f.total_degree() <= 8) {
    // Irreducible forms of degree > 1 are not divisible by either variable.
    if (!coefficients_in(f, vars[1])[0].is_zero() && !coefficients_in(f, vars[0])[0].is_zero()) {
      UPoly u = dehomogenize(f, vars[0]);
      return !kronecker(u, gave_up) && !gave_up;
    }
  }
  return false;
}

Factorization factor(const Poly& f) {
  Factorization out;
  if (f.is_zero()) {
    out.unit = 0;
    return out;
  }
  out.unit = f.lead().coeff;
  std::vector<Poly> work{f.monic()};
  std::vector<Poly> pieces;
  bool gave_up = false;
  while (!work.empty()) {
    Poly g = std::move(work.back());
    work.pop_back();
    if (g.is_constant()) continue;
    if (auto s = split_once(g, gave_up)) {
      work.push_back(s->first.monic());
      work.push_back(s->second.monic());
    } else {
      pieces.push_back(g);
    }
  }
  std::sort(pieces.begin(), pieces.end(), poly_less);
  for (auto& p : pieces) {
    if (!out.factors.empty() && out.factors.back().first == p)
      ++out.factors.back().second;
    else
      out.factors.push_back({p, 1});
  }
  for (const auto& [p, k] : out.factors)
    if (!certified_irreducible(p)) out.certified = false;
  return out;
}

}  // namespace ramify
