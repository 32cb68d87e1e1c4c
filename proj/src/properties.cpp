#include "ramify/properties.hpp"

#include <algorithm>
#include <random>

#include "ramify/budget.hpp"
#include "ramify/error.hpp"
#include "ramify/parser.hpp"
#include "ramify/scenario.hpp"

namespace ramify {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

Poly random_poly(Rng& g, const RingPtr& R, int max_deg, int max_terms, bool constant_ok, bool homogeneous = false) {
  const std::size_t n = R->nvars();
  int deg = homogeneous ? uniform(g, 1, max_deg) : 0;
  std::vector<Term> terms;
  int k = uniform(g, 1, max_terms);
  for (int t = 0; t < k; ++t) {
    std::vector<std::uint32_t> e(n, 0);
    int d = homogeneous ? deg : uniform(g, constant_ok ? 0 : 1, max_deg);
    for (int s = 0; s < d; ++s) ++e[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(n) - 1))];
    int c = uniform(g, -3, 3);
    if (c == 0) c = 1;
    terms.push_back({Monomial(e), Coeff(c)});
  }
  return Poly::from_terms(R, std::move(terms));
}

Matrix random_matrix(Rng& g, const RingPtr& R, std::size_t rows, std::size_t cols, int max_deg, bool constant_ok,
                     bool homogeneous = false) {
  Matrix m(R, rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      m.at(r, c) = uniform(g, 0, 4) == 0 ? Poly(R) : random_poly(g, R, max_deg, 2, constant_ok, homogeneous);
  return m;
}

RingDecl plane(const std::vector<std::string>& vars) {
  return RingDecl("R", PolyRing::make(vars, Field::rationals()), {});
}

template <class F>
PropertyResult suite(std::string name, std::uint64_t seed, std::size_t cases, F&& one) {
  PropertyResult res;
  res.name = std::move(name);
  Rng g(seed);
  std::size_t attempts = 0;
  while (res.cases < cases && attempts < cases * 20) {
    ++attempts;
    BudgetScope scope(Budget{40, 30.0});
    std::string why;
    int outcome;
    try {
      outcome = one(g, why);  // 1 pass, 0 fail, -1 skip
    } catch (const BudgetExceeded&) {
      outcome = -1;
    }
    if (outcome < 0) {
      ++res.skipped;
      continue;
    }
    ++res.cases;
    if (outcome == 0) {
      if (res.failures++ == 0) res.first_failure = why;
    }
  }
  return res;
}

Matrix scaled_identity(const RingPtr& R, std::size_t n, const Poly& f) {
  Matrix m(R, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f;
  return m;
}

Matrix negated(const Matrix& m) {
  Matrix out = m;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out.at(r, c) = -m.at(r, c);
  return out;
}

}  // namespace

int koszul_depth_plane(const PresentedModule& M0) {
  const RingDecl& B = M0.ring();
  if (!B.is_polynomial_ring() || B.nvars() != 2) throw Error("Koszul depth oracle needs Q[x,y]");
  const RingPtr& R = B.ring();
  const std::size_t r = M0.rank();
  const Matrix& A = M0.relations();
  const Poly x = B.var(0), y = B.var(1);
  SpanTester im_a(A, B);
  // H^0: elements of M killed by x and y.
  Matrix ux = syzygy(scaled_identity(R, r, x).hcat(A), B).row_range(0, r);
  Matrix uy = syzygy(scaled_identity(R, r, y).hcat(A), B).row_range(0, r);
  Matrix meet = ux * syzygy(ux.hcat(negated(uy)), B).row_range(0, ux.cols());
  if (!im_a.contains_all(meet)) return 0;
  // H^1: pairs (a, b) with x b - y a in im A, modulo (x v, y v) and A + A.
  Matrix z = syzygy(negated(scaled_identity(R, r, y)).hcat(scaled_identity(R, r, x)).hcat(A), B).row_range(0, 2 * r);
  Matrix bd(R, 2 * r, 0);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < r; ++i) {
    Vec v = zero_vec(R, 2 * r);
    v[i] = x;
    v[r + i] = y;
    cols.push_back(v);
  }
  for (const auto& c : A.columns()) {
    Vec top = zero_vec(R, 2 * r), bottom = zero_vec(R, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
      top[i] = c[i];
      bottom[r + i] = c[i];
    }
    cols.push_back(top);
    cols.push_back(bottom);
  }
  bd = Matrix::from_columns(R, 2 * r, cols);
  if (!SpanTester(bd, B).contains_all(z)) return 1;
  return 2;
}

PropertyResult prop_dual_fitting(std::uint64_t seed, std::size_t cases) {
  RingDecl B = plane({"x", "y"});
  return suite("dual-fitting", seed, cases, [&](Rng& g, std::string& why) {
    std::size_t rows = static_cast<std::size_t>(uniform(g, 1, 3)), cols = static_cast<std::size_t>(uniform(g, 1, 3));
    Matrix phi = random_matrix(g, B.ring(), rows, cols, 2, true);
    PresentedModule M(B, phi), Mt(B, phi.transpose());
    for (std::size_t i = 0; i <= rows; ++i) {
      long long j = static_cast<long long>(cols) - static_cast<long long>(rows) + static_cast<long long>(i);
      Ideal f = fitting_ideal(M, i);
      bool ok = j < 0 ? f.is_zero() : f == fitting_ideal(Mt, static_cast<std::size_t>(j));
      if (!ok) {
        why = "phi = " + phi.str() + ", i = " + std::to_string(i);
        return 0;
      }
    }
    return 1;
  });
}

PropertyResult prop_fitting_chain(std::uint64_t seed, std::size_t cases) {
  RingDecl B = plane({"x", "y", "z"});
  return suite("fitting-chain", seed, cases, [&](Rng& g, std::string& why) {
    std::size_t rows = static_cast<std::size_t>(uniform(g, 1, 3)), cols = static_cast<std::size_t>(uniform(g, 1, 3));
    Matrix phi = random_matrix(g, B.ring(), rows, cols, 2, true);
    PresentedModule M(B, phi);
    Ideal prev = fitting_ideal(M, 0);
    for (std::size_t i = 1; i <= rows; ++i) {
      Ideal next = fitting_ideal(M, i);
      if (!next.contains(prev)) {
        why = "phi = " + phi.str() + ", i = " + std::to_string(i);
        return 0;
      }
      prev = next;
    }
    return prev.is_unit() ? 1 : 0;
  });
}

PropertyResult prop_auslander_buchsbaum(std::uint64_t seed, std::size_t cases) {
  RingDecl B = plane({"x", "y"});
  return suite("auslander-buchsbaum", seed, cases, [&](Rng& g, std::string& why) {
    std::size_t rows = static_cast<std::size_t>(uniform(g, 1, 3)), cols = static_cast<std::size_t>(uniform(g, 0, 3));
    Matrix phi = random_matrix(g, B.ring(), rows, cols, 2, uniform(g, 0, 3) == 0);
    PresentedModule M(B, phi);
    BettiData b = local_betti(M);
    if (b.pd.kind == PdVerdict::Kind::ZeroModule) return -1;
    if (b.pd.kind != PdVerdict::Kind::Exact) {
      why = "pd not exact for " + phi.str();
      return 0;
    }
    int depth = koszul_depth_plane(M);
    if (b.pd.value + depth != 2) {
      why = "phi = " + phi.str() + ", pd " + std::to_string(b.pd.value) + ", depth " + std::to_string(depth);
      return 0;
    }
    return 1;
  });
}

PropertyResult prop_eagon_northcott(std::uint64_t seed, std::size_t cases) {
  RingDecl B = plane({"x", "y", "z"});
  Assertions a;
  a.points = {"R"};
  return suite("eagon-northcott", seed, cases, [&](Rng& g, std::string& why) {
    std::size_t rows = static_cast<std::size_t>(uniform(g, 1, 3)), cols = static_cast<std::size_t>(uniform(g, 1, 3));
    Matrix phi = random_matrix(g, B.ring(), rows, cols, 2, false, true);
    Report r = check_height_bounds(PresentedModule(B, phi), "M", a);
    for (const auto& c : r.clauses)
      if (c.name.rfind("(1)", 0) == 0 && c.verdict == Verdict::Violated) {
        why = "phi = " + phi.str() + ", clause " + c.name + ": " + c.lhs + " > " + c.rhs;
        return 0;
      }
    return 1;
  });
}

PropertyResult prop_groebner(std::uint64_t seed, std::size_t cases) {
  RingPtr R = PolyRing::make({"x", "y", "z"}, Field::rationals());
  return suite("groebner-determinism", seed, cases, [&](Rng& g, std::string& why) {
    std::vector<Poly> gens;
    int k = uniform(g, 1, 3);
    for (int i = 0; i < k; ++i) gens.push_back(random_poly(g, R, 3, 3, true));
    auto g1 = groebner(gens);
    auto g2 = groebner(gens);
    auto again = groebner(g1);
    std::vector<Poly> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), g);
    auto g3 = groebner(shuffled);
    auto same = [](const std::vector<Poly>& a, const std::vector<Poly>& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
      return true;
    };
    std::string label;
    for (const auto& p : gens) label += p.str() + "; ";
    if (!same(g1, g2) || !same(g1, again) || !same(g1, g3)) {
      why = "unstable basis for " + label;
      return 0;
    }
    for (const auto& p : gens)
      if (!normal_form(p, g1).is_zero()) {
        why = "generator not reduced to zero: " + label;
        return 0;
      }
    for (std::size_t i = 0; i < g1.size(); ++i) {
      if (g1[i].lead().coeff != 1) {
        why = "basis not monic: " + label;
        return 0;
      }
      for (std::size_t j = 0; j < g1.size(); ++j)
        if (i != j)
          for (const auto& t : g1[i].terms())
            if (g1[j].lead().mono.divides(t.mono)) {
              why = "basis not reduced: " + label;
              return 0;
            }
    }
    return 1;
  });
}

PropertyResult prop_roundtrip(std::uint64_t seed, std::size_t cases) {
  return suite("parse-print-roundtrip", seed, cases, [&](Rng& g, std::string& why) {
    Field F = uniform(g, 0, 3) == 0 ? Field::prime(7) : Field::rationals();
    RingPtr R = PolyRing::make({"a", "b", "c'"}, F);
    Poly p = random_poly(g, R, 4, 5, true);
    if (uniform(g, 0, 2) == 0 && F.is_rational()) p = p.scaled(Coeff(1, uniform(g, 2, 9)));
    Poly q = parse_poly(p.str(), R);
    if (!(p == q)) {
      why = "polynomial " + p.str() + " reparsed as " + q.str();
      return 0;
    }
    // Scenario round trip.
    std::string src = "field " + F.str() + "\n";
    src += "ring X = [a, b, c'] / (" + random_poly(g, R, 3, 3, false).str() + ")\n";
    src += "ring Y = [u, v]\n";
    src += "map f : Y -> X = { v = " + random_poly(g, R, 2, 3, true).str() + "; u = " +
           random_poly(g, R, 2, 3, true).str() + " }\n";
    if (uniform(g, 0, 1)) src += "assert X domain\n";
    if (uniform(g, 0, 1)) src += "budget degree " + std::to_string(uniform(g, 5, 50)) + " seconds 2.5\n";
    const char* tasks[] = {"branch(f, 1)", "critical(0)", "dci(X)", "discriminant(f)", "heights(omega(f))",
                           "torsion(omega(X), a + b)", "purity_branch(f, 2)"};
    int nt = uniform(g, 0, 3);
    for (int i = 0; i < nt; ++i) src += std::string("task ") + tasks[uniform(g, 0, 6)] + "\n";
    Scenario s1 = parse_scenario(src);
    std::string printed = s1.to_source();
    Scenario s2 = parse_scenario(printed);
    if (!(s1 == s2) || s2.to_source() != printed) {
      why = "scenario round trip failed:\n" + printed;
      return 0;
    }
    return 1;
  });
}

std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases) {
  return {prop_dual_fitting(seed, cases),      prop_fitting_chain(seed + 1, cases),
          prop_auslander_buchsbaum(seed + 2, cases), prop_eagon_northcott(seed + 3, cases),
          prop_groebner(seed + 4, cases),          prop_roundtrip(seed + 5, cases)};
}

}  // namespace ramify
