#include "ramify/verify.hpp"

#include <algorithm>
#include <limits>

#include "ramify/error.hpp"

namespace ramify {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Violated: return "violated";
    case Verdict::Inapplicable: return "inapplicable";
    case Verdict::Indeterminate: return "indeterminate";
    case Verdict::Refuted: return "refuted";
    case Verdict::Computed: return "computed";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::CheckedTrue: return "checked-true";
    case Status::CheckedFalse: return "checked-false";
    case Status::Asserted: return "asserted";
    case Status::Unasserted: return "unasserted";
    case Status::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Indeterminate: return "indeterminate";
  }
  return "?";
}

Verdict Report::verdict() const {
  if (!error.empty() && clauses.empty()) return theorem.empty() ? Verdict::Computed : Verdict::Indeterminate;
  static const Verdict order[] = {Verdict::Violated, Verdict::Verified, Verdict::Indeterminate, Verdict::Refuted,
                                  Verdict::Inapplicable};
  for (Verdict v : order)
    for (const auto& c : clauses)
      if (c.verdict == v) return v;
  return Verdict::Computed;
}

const Hypothesis* Report::hypothesis(const std::string& name) const {
  for (const auto& h : hypotheses)
    if (h.name == name) return &h;
  return nullptr;
}

Status Assertions::get(const std::string& name, const std::string& fact) const {
  auto it = facts.find(name);
  return it != facts.end() && it->second.count(fact) ? Status::Asserted : Status::Unasserted;
}

std::vector<std::string> ideal_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.groebner()) out.push_back(g.str());
  return out;
}

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max();

// Closed interval with an optional infinite top.
struct Interval {
  long long lo = 0, hi = 0;
  static Interval exact(long long v) { return {v, v}; }
  std::string str() const {
    if (lo == hi) return std::to_string(lo);
    return "[" + std::to_string(lo) + ", " + (hi == kInf ? std::string("inf") : std::to_string(hi)) + "]";
  }
};

Tri leq(const Interval& a, const Interval& b) {
  if (a.hi <= b.lo) return Tri::Yes;
  if (a.lo > b.hi) return Tri::No;
  return Tri::Indeterminate;
}

Tri from_bool(bool b) { return b ? Tri::Yes : Tri::No; }

Status from_tri(Tri t) {
  return t == Tri::Yes ? Status::CheckedTrue : t == Tri::No ? Status::CheckedFalse : Status::Indeterminate;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::vector<std::string> columns_str(const Matrix& m) {
  std::vector<std::string> out;
  for (const auto& c : m.columns()) out.push_back(vec_str(c));
  return out;
}

class Builder {
 public:
  Builder(std::string task, std::string theorem) {
    r_.task = std::move(task);
    r_.theorem = std::move(theorem);
  }
  void hyp(std::string name, Status s, std::string note = "") {
    r_.hypotheses.push_back({std::move(name), s, std::move(note)});
  }
  // known_false: a failing conclusion is recorded as refuted, never violated.
  Clause& clause(std::string name, std::string statement, std::vector<std::string> hyps, Tri holds,
                 bool known_false = false) {
    Clause c;
    c.name = std::move(name);
    c.statement = std::move(statement);
    c.hypotheses = std::move(hyps);
    bool inapplicable = false, unsure = false;
    for (const auto& h : c.hypotheses) {
      const Hypothesis* p = r_.hypothesis(h);
      Status s = p ? p->status : Status::Unasserted;
      if (s == Status::CheckedFalse || s == Status::Unasserted) inapplicable = true;
      if (s == Status::Indeterminate) unsure = true;
    }
    if (inapplicable)
      c.verdict = Verdict::Inapplicable;
    else if (holds == Tri::Yes)
      c.verdict = Verdict::Verified;
    else if (holds == Tri::No && !unsure)
      c.verdict = known_false ? Verdict::Refuted : Verdict::Violated;
    else
      c.verdict = Verdict::Indeterminate;
    r_.clauses.push_back(std::move(c));
    return r_.clauses.back();
  }
  Report& report() { return r_; }

 private:
  Report r_;
};

// Runs f, turning budget exhaustion into an indeterminate tri-state.
template <class F>
auto guarded(F&& f, std::string* note = nullptr) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const BudgetExceeded& e) {
    if (note) *note = e.what();
    return std::nullopt;
  }
}

Status integral(const RingDecl& r, const Assertions& a) {
  if (r.is_polynomial_ring() || certified_prime(r.ideal())) return Status::CheckedTrue;
  return a.get(r.name(), "domain");
}

Status smooth_status(const RingDecl& r) {
  auto s = guarded([&] { return is_smooth(r); });
  return s ? (*s ? Status::CheckedTrue : Status::CheckedFalse) : Status::Indeterminate;
}

// codim+ of a locus: exact when certified, otherwise [codim_lower, dim].
Interval codim_plus(const LocusReport& r, int dim) {
  if (r.empty) return Interval::exact(-1);
  if (r.codim_upper) return Interval::exact(*r.codim_upper);
  return {r.codim_lower, dim};
}

int beta(const BettiData& b, std::size_t i) { return i < b.betti.size() ? b.betti[i] : 0; }

std::optional<int> chi2(const BettiData& b) {
  if (b.pd.kind == PdVerdict::Kind::AtLeast) return std::nullopt;
  return b.chi(2);
}

void add_locus(Report& r, const std::string& key, const LocusReport& l, int dim) {
  r.add(key + " ideal", ideal_strings(l.ideal));
  r.add(key + " codim+", codim_plus(l, dim).str());
  if (l.radical) r.add(key + " radical", ideal_strings(*l.radical));
}

std::string betti_str(const BettiData& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.betti.size(); ++i) s += (i ? ", " : "") + std::to_string(b.betti[i]);
  return s + ")";
}

}  // namespace

DciResult check_dci_global(const PresentedModule& M) {
  DciResult out;
  auto r = guarded([&] {
    PresentedModule P = M.simplified();
    const RingDecl& B = P.ring();
    DciResult res;
    if (P.relations().cols() == 0) {
      res.is_dci = Tri::Yes;
      res.witness = "free presentation";
      return res;
    }
    // The relation module is coker(syz); pd <= 1 everywhere iff it is locally free.
    PresentedModule K(B, syzygy(P.relations(), B));
    std::size_t rk = generic_rank(K);
    Ideal top = fitting_ideal(K, rk);
    bool below_zero = rk == 0 || B.ideal().contains(fitting_ideal(K, rk - 1));
    res.is_dci = from_bool(top.is_unit() && below_zero);
    res.witness = "relation module rank " + std::to_string(rk) + ", F_" + std::to_string(rk) + " = " + top.str();
    return res;
  }, &out.witness);
  return r ? *r : out;
}

DciResult check_dci_at_origin(const PresentedModule& M) {
  DciResult out;
  auto b = guarded([&] { return local_betti(M); }, &out.witness);
  if (!b) return out;
  out.witness = "betti " + betti_str(*b) + ", pd " + b->pd.str();
  switch (b->pd.kind) {
    case PdVerdict::Kind::ZeroModule: out.is_dci = Tri::Yes; break;
    case PdVerdict::Kind::Exact: out.is_dci = from_bool(b->pd.value <= 1); break;
    case PdVerdict::Kind::AtLeast: out.is_dci = b->pd.value >= 2 ? Tri::No : Tri::Indeterminate; break;
  }
  return out;
}

DefectData defects_at_origin(const RingDecl& ring) {
  DefectData d;
  PresentedModule om = kaehler(ring);
  d.d = static_cast<int>(generic_rank(om));
  d.ed = beta(local_betti(om), 0);
  d.delta = d.ed - d.d;
  d.eta = beta(local_betti(tangent(ring)), 0) - d.d;
  return d;
}

Tri serre_s2_sufficient(const PresentedModule& M0) {
  auto r = guarded([&] {
    PresentedModule M = M0.ring().is_polynomial_ring() ? M0 : over_ambient(M0);
    const int n = static_cast<int>(M.ring().nvars());
    Ideal f0 = fitting_ideal(M, 0);
    if (f0.is_unit()) return Tri::Yes;
    if (n - krull_dim(f0) > 0) return Tri::Indeterminate;
    Resolution res = free_resolution(M);
    if (!res.terminated) return Tri::Indeterminate;
    for (std::size_t i = 1; i <= res.maps.size(); ++i) {
      auto e = ext_module(res, i);
      if (!e) return Tri::Indeterminate;
      Ideal fe = fitting_ideal(*e, 0);
      if (fe.is_unit()) continue;
      if (n - krull_dim(fe) < static_cast<int>(i) + 2) return Tri::Indeterminate;
    }
    return Tri::Yes;
  });
  return r ? *r : Tri::Indeterminate;
}

Report check_dci(const PresentedModule& M, const std::string& label, const Assertions& a) {
  Builder b("dci(" + label + ")", "differential complete intersection");
  Report& r = b.report();
  DciResult g = check_dci_global(M);
  r.add("global", to_string(g.is_dci));
  r.add("global witness", g.witness);
  b.hyp("B integral", integral(M.ring(), a));
  Tri consistent = Tri::Yes;
  if (a.has_point(M.ring()) && M.ring().origin_on_variety()) {
    DciResult o = check_dci_at_origin(M);
    r.add("at origin", to_string(o.is_dci));
    r.add("origin witness", o.witness);
    if (g.is_dci == Tri::Yes && o.is_dci == Tri::No) consistent = Tri::No;
    if (g.is_dci == Tri::Yes && o.is_dci == Tri::Indeterminate) consistent = Tri::Indeterminate;
  }
  b.clause("localization", "global d.c.i. implies d.c.i. at the origin", {"B integral"}, consistent);
  return r;
}

Report check_gamma_zero(const MorphismDecl& m, const Assertions& a) {
  Builder b("gamma(" + m.name() + ")", "vanishing of the imperfection module");
  Report& r = b.report();
  b.hyp("pi generically smooth", from_tri(from_bool(generically_smooth(m))));
  b.hyp("X integral", integral(m.target(), a));
  DciResult x = check_dci_global(kaehler(m.target()));
  Status xs = from_tri(x.is_dci);
  if (xs != Status::CheckedTrue && a.get(m.name(), "lci") == Status::Asserted) xs = Status::Asserted;
  b.hyp("X/k d.c.i. or pi l.c.i.", xs, x.witness);
  b.hyp("Y/k smooth", smooth_status(m.source()));
  std::string note;
  auto gamma = guarded([&] { return imperfection(m); }, &note);
  Tri zero = Tri::Indeterminate;
  if (gamma) {
    zero = from_bool(gamma->is_zero());
    r.add("gamma generators", gamma->embedding() ? columns_str(*gamma->embedding()) : std::vector<std::string>{});
  } else {
    r.error = note;
  }
  b.clause("gamma = 0", "imperfection module vanishes",
           {"pi generically smooth", "X integral", "X/k d.c.i. or pi l.c.i.", "Y/k smooth"}, zero);
  return r;
}

Report check_duality(const MorphismDecl& m, std::size_t max_i, const Assertions& a) {
  Builder b("duality(" + m.name() + ", " + std::to_string(max_i) + ")", "critical/branch duality");
  Report& r = b.report();
  b.hyp("X/k smooth", smooth_status(m.target()));
  b.hyp("Y/k smooth", smooth_status(m.source()));
  b.hyp("pi generically smooth", from_tri(from_bool(generically_smooth(m))));
  (void)a;
  std::size_t d = relative_dimension(m);
  r.add("d", static_cast<long long>(d));
  std::string note;
  auto parts = guarded([&] { return std::make_pair(critical_module(m), relative_kaehler(m)); }, &note);
  for (std::size_t i = 0; i <= max_i; ++i) {
    Tri eq = Tri::Indeterminate;
    std::string lhs, rhs;
    if (parts) {
      auto res = guarded([&] {
        Ideal c = fitting_ideal(parts->first, i);
        Ideal o = fitting_ideal(parts->second, d + i);
        return std::make_tuple(c == o, c.str(), o.str());
      }, &note);
      if (res) {
        eq = from_bool(std::get<0>(*res));
        lhs = std::get<1>(*res);
        rhs = std::get<2>(*res);
      }
    }
    Clause& c = b.clause("i=" + std::to_string(i), "F_i(C) = F_{d+i}(Omega_{X/Y})",
                         {"X/k smooth", "Y/k smooth", "pi generically smooth"}, eq);
    c.lhs = lhs;
    c.rhs = rhs;
  }
  if (!parts || !note.empty()) r.error = note;
  return r;
}

Report check_height_bounds(const PresentedModule& M, const std::string& label, const Assertions& a) {
  Builder b("heights(" + label + ")", "height bounds for Fitting ideals");
  Report& r = b.report();
  const RingDecl& B = M.ring();
  bool point = a.has_point(B) && B.origin_on_variety();
  b.hyp("designated point", point ? Status::CheckedTrue : Status::Unasserted, "origin");
  b.hyp("X regular", smooth_status(B));
  if (!point) {
    b.clause("(1)", "Eagon-Northcott height bound", {"designated point"}, Tri::Indeterminate);
    return r;
  }
  std::string note;
  auto bd = guarded([&] { return local_betti(M); }, &note);
  if (!bd) {
    r.error = note;
    b.clause("(1)", "Eagon-Northcott height bound", {"designated point"}, Tri::Indeterminate);
    return r;
  }
  const int b0 = beta(*bd, 0), b1 = beta(*bd, 1);
  r.add("betti", betti_str(*bd));
  r.add("pd", bd->pd.str());
  std::optional<int> chi;
  if (bd->pd.kind != PdVerdict::Kind::AtLeast) chi = bd->chi(0);
  if (chi) r.add("chi", static_cast<long long>(*chi));
  b.hyp("pd exact", chi ? Status::CheckedTrue : Status::Indeterminate);
  for (int i = 0; i < b0; ++i) {
    const std::string tag = " i=" + std::to_string(i);
    auto step = guarded([&] {
      Ideal F = fitting_ideal(M, static_cast<std::size_t>(i));
      bool zero = B.ideal().contains(F);
      return std::make_pair(zero, F);
    }, &note);
    if (!step) {
      r.error = note;
      b.clause("(1)" + tag, "Eagon-Northcott height bound", {"designated point"}, Tri::Indeterminate);
      continue;
    }
    auto& [zero, F] = *step;
    if (i < b0 - std::min(b0, b1)) {
      Tri holds = zero ? Tri::Yes : (integral(B, a) == Status::Unasserted ? Tri::Indeterminate : Tri::No);
      b.clause("(1) vanishing" + tag, "F_i = 0 below beta0 - min(beta0, beta1)", {"designated point"}, holds);
      continue;
    }
    if (zero) continue;
    auto h = guarded([&] { return height_at_origin(B, F); }, &note);
    if (!h) {
      r.error = note;
      b.clause("(1)" + tag, "Eagon-Northcott height bound", {"designated point"}, Tri::Indeterminate);
      continue;
    }
    if (!h->through_origin) continue;
    Interval ht{h->lower, h->upper};
    long long bound1 = static_cast<long long>(i + 1) * (i + 1 + b1 - b0);
    Clause& c1 = b.clause("(1)" + tag, "ht F_i <= (i+1)(i+1+beta1-beta0)", {"designated point"},
                          leq(ht, Interval::exact(bound1)));
    c1.lhs = ht.str();
    c1.rhs = std::to_string(bound1);
    Tri holds2 = Tri::Indeterminate;
    std::string rhs2 = "?";
    if (chi) {
      long long bound2 = static_cast<long long>(i + 1) * (i + 1 - *chi) + b0 - i - 1;
      holds2 = leq(ht, Interval::exact(bound2));
      rhs2 = std::to_string(bound2);
    }
    Clause& c2 = b.clause("(2)" + tag, "ht F_i <= (i+1)(i+1-chi)+beta0-i-1",
                          {"designated point", "X regular", "pd exact"}, holds2, true);
    c2.lhs = ht.str();
    c2.rhs = rhs2;
  }
  if (r.clauses.empty()) b.clause("(1)", "no proper nonzero Fitting ideal through the point", {"designated point"}, Tri::Yes);
  return r;
}

Report check_purity_critical(const MorphismDecl& m, std::size_t max_i, const Assertions& a) {
  Builder b("purity_critical(" + m.name() + ")", "purity of the critical locus");
  Report& r = b.report();
  const RingDecl& X = m.target();
  const int dim_x = X.dim();
  b.hyp("pi generically smooth", from_tri(from_bool(generically_smooth(m))));
  b.hyp("X integral", integral(X, a));
  b.hyp("Y integral", integral(m.source(), a));
  b.hyp("X/k smooth", smooth_status(X));
  b.hyp("Y/k smooth", smooth_status(m.source()));
  Tri s2 = serre_s2_sufficient(image_tangent(m));
  b.hyp("Tbar satisfies S2", s2 == Tri::Yes ? Status::CheckedTrue : Status::Indeterminate, "sufficient Ext test");
  DciResult pd = check_dci_global(relative_kaehler(m));
  b.hyp("pi d.c.i.", from_tri(pd.is_dci), pd.witness);
  const std::vector<std::string> base{"pi generically smooth", "X integral", "Y integral"};
  auto with = [&](std::vector<std::string> more) {
    std::vector<std::string> h = base;
    h.insert(h.end(), more.begin(), more.end());
    return h;
  };

  std::size_t d = relative_dimension(m);
  r.add("d", static_cast<long long>(d));
  std::string note;
  auto crit = guarded([&] { return critical_scheme(m, 0); }, &note);
  auto br = guarded([&] { return branch_scheme(m, 0); }, &note);
  if (crit) add_locus(r, "C", *crit, dim_x);
  if (br) add_locus(r, "B", *br, dim_x);

  Tri inside = Tri::Indeterminate;
  if (crit && br) {
    auto ok = guarded([&] {
      for (const auto& g : br->ideal.groebner())
        if (!radical_membership(g, crit->ideal)) return false;
      return true;
    }, &note);
    if (ok) inside = from_bool(*ok);
  }
  b.clause("(1) inclusion", "C_pi inside B_pi", base, inside);

  Tri ext_eq = Tri::Indeterminate;
  auto ext = guarded([&] {
    auto e = ext_module(relative_kaehler(m), 1);
    if (!e) return Tri::Indeterminate;
    return from_bool(fitting_ideal(*e, 0) == fitting_ideal(critical_module(m), 0));
  }, &note);
  if (ext) ext_eq = *ext;
  b.clause("(1) ext", "F_0(C) = F_0(Ext^1(Omega_{X/Y}, O_X))", with({"X/k smooth"}), ext_eq);

  Interval one = Interval::exact(1);
  Clause& c3 = b.clause("(3)", "codim+ C_pi <= 1", with({"Tbar satisfies S2"}),
                        crit ? leq(codim_plus(*crit, dim_x), one) : Tri::Indeterminate);
  c3.lhs = crit ? codim_plus(*crit, dim_x).str() : "?";
  c3.rhs = "1";
  Clause& c4 = b.clause("(4)", "codim+ B_pi <= 1", with({"X/k smooth", "Y/k smooth", "Tbar satisfies S2"}),
                        br ? leq(codim_plus(*br, dim_x), one) : Tri::Indeterminate);
  c4.lhs = br ? codim_plus(*br, dim_x).str() : "?";
  c4.rhs = "1";
  for (std::size_t i = 0; i <= max_i; ++i) {
    auto bi = guarded([&] { return branch_scheme(m, i); }, &note);
    long long bound = static_cast<long long>(d + i + 1) * static_cast<long long>(i + 1);
    Interval lhs = bi ? codim_plus(*bi, dim_x) : Interval{0, kInf};
    Clause& c = b.clause("(5) i=" + std::to_string(i), "codim+ B^(i) <= (d+i+1)(i+1)", with({"pi d.c.i."}),
                         bi ? leq(lhs, Interval::exact(bound)) : Tri::Indeterminate);
    c.lhs = lhs.str();
    c.rhs = std::to_string(bound);
  }

  // End members of the two inequality chains at the designated points, i = 0; reported only.
  if (a.has_point(X) && a.has_point(m.source()) && X.origin_on_variety() && m.source().origin_on_variety()) {
    auto chains = guarded([&] {
      std::vector<std::pair<std::string, Value>> v;
      auto bx = [&](const PresentedModule& M) { return local_betti(M); };
      BettiData om_xy = bx(relative_kaehler(m));
      BettiData cm = bx(critical_module(m));
      BettiData gam = bx(imperfection(m));
      BettiData img = bx(image_in_omega(m));
      BettiData om_x = bx(kaehler(X));
      BettiData tbar = bx(image_tangent(m));
      BettiData along = bx(tangent_along(m).module);
      DefectData dx = defects_at_origin(X), dy = defects_at_origin(m.source());
      const long long f = static_cast<long long>(d) + 1;
      auto show = [](std::optional<int> c, long long k, long long base) -> Value {
        if (!c) return std::string("indeterminate");
        return k * (base + *c);
      };
      v.emplace_back("chain A first", show(chi2(om_xy), f, 1));
      v.emplace_back("chain A last", f * (dy.delta - beta(gam, 0) + beta(img, 1) + beta(om_x, 1) + 1));
      v.emplace_back("chain B first", show(chi2(cm), f, 1));
      v.emplace_back("chain B last", static_cast<long long>(dx.eta - dy.eta + beta(tbar, 1) + beta(along, 1) + 1));
      return v;
    }, &note);
    if (chains)
      for (auto& kv : *chains) r.values.push_back(std::move(kv));
  }
  if (!note.empty()) r.error = note;
  return r;
}

Report check_purity_branch(const MorphismDecl& m, std::size_t max_i, const Assertions& a) {
  Builder b("purity_branch(" + m.name() + ", " + std::to_string(max_i) + ")", "purity of the branch locus");
  Report& r = b.report();
  const RingDecl& X = m.target();
  const RingDecl& Y = m.source();
  const int dim_x = X.dim();
  b.hyp("pi generically smooth", from_tri(from_bool(generically_smooth(m))));
  b.hyp("X integral", integral(X, a));
  b.hyp("Y integral", integral(Y, a));
  DciResult xd = check_dci_global(kaehler(X));
  DciResult yd = check_dci_global(kaehler(Y));
  b.hyp("X/k d.c.i.", from_tri(xd.is_dci), xd.witness);
  b.hyp("Y/k d.c.i.", from_tri(yd.is_dci), yd.witness);
  b.hyp("X/k smooth", smooth_status(X));
  const std::vector<std::string> base{"pi generically smooth", "X integral", "Y integral"};

  std::string note;
  const long long d = static_cast<long long>(relative_dimension(m));
  r.add("d", d);
  PresentedModule om_xy = relative_kaehler(m).simplified();
  const bool points = a.has_point(X) && a.has_point(Y) && X.origin_on_variety() && Y.origin_on_variety();

  // delta_Y: sup of ed - d over Y; the origin gives a lower bound, #vars - d an upper one.
  const long long dy = static_cast<long long>(generic_rank(kaehler(Y)));
  Interval delta_y{0, static_cast<long long>(Y.nvars()) - dy};
  Interval chi2_x{0, kInf};
  Interval chi2_xy{0, kInf};
  std::optional<BettiData> b_xy;
  if (xd.is_dci == Tri::Yes) chi2_x = Interval::exact(0);
  if (points) {
    auto vals = guarded([&] {
      BettiData by = local_betti(kaehler(Y));
      BettiData bx = local_betti(kaehler(X));
      return std::make_tuple(by, bx, local_betti(om_xy));
    }, &note);
    if (vals) {
      auto& [by, bx, bxy] = *vals;
      delta_y.lo = beta(by, 0) - dy;
      if (auto c = chi2(bx); c && chi2_x.hi == kInf) chi2_x.lo = *c;
      if (auto c = chi2(bxy)) chi2_xy.lo = *c;
      b_xy = bxy;
      r.add("delta_Y at origin", delta_y.lo);
      r.add("betti Omega_{X/Y} at origin", betti_str(bxy));
    }
  }
  // chi_2 <= beta_1 <= number of relations of any presentation.
  chi2_xy.hi = static_cast<long long>(om_xy.relations().cols());

  for (std::size_t i = 0; i <= max_i; ++i) {
    const long long ii = static_cast<long long>(i);
    auto bi = guarded([&] { return branch_scheme(m, i); }, &note);
    Interval lhs = bi ? codim_plus(*bi, dim_x) : Interval{0, kInf};
    const std::string tag = " i=" + std::to_string(i);
    if (bi && i == 0) add_locus(r, "B", *bi, dim_x);
    auto mul = [](long long f, long long v) { return v == kInf ? kInf : f * v; };
    const long long f = d + ii + 1;
    Interval bound1{mul(f, ii + 1 + delta_y.lo + chi2_x.lo),
                    chi2_x.hi == kInf ? kInf : mul(f, ii + 1 + delta_y.hi + chi2_x.hi)};
    Tri h1 = bi ? leq(lhs, bound1) : Tri::Indeterminate;
    Clause& c1 = b.clause("(1)" + tag, "codim+ B^(i) <= (d+i+1)(i+1+delta_Y+chi2(Omega_X))", base, h1);
    c1.lhs = lhs.str();
    c1.rhs = bound1.str();

    Interval bound2{mul(f, ii + 1 + chi2_xy.lo), mul(f, ii + 1 + chi2_xy.hi)};
    std::vector<std::string> h2 = base;
    h2.push_back("X/k d.c.i.");
    h2.push_back("Y/k d.c.i.");
    Clause& c2 = b.clause("(2)" + tag, "codim+ B^(i) <= (d+i+1)(i+1+chi2(Omega_{X/Y}))", h2,
                          bi ? leq(lhs, bound2) : Tri::Indeterminate);
    c2.lhs = lhs.str();
    c2.rhs = bound2.str();

    if (i == 0) {
      // delta_{X/Y} = sup beta0(Omega_{X/Y}) - d.
      Interval bound3{b_xy ? beta(*b_xy, 0) : 0, static_cast<long long>(om_xy.rank())};
      Tri h3 = bi ? leq(lhs, bound3) : Tri::Indeterminate;
      Clause& c3 = b.clause("(3)", "codim+ B_pi <= delta_{X/Y} + d", {"X/k smooth", "pi generically smooth"}, h3,
                            true);
      c3.lhs = lhs.str();
      c3.rhs = bound3.str();
    }
  }
  if (!note.empty()) r.error = note;
  return r;
}

Report check_composition_dci(const MorphismDecl& m, const Assertions& a) {
  Builder b("composition(" + m.name() + ")", "d.c.i. under composition with a smooth map");
  Report& r = b.report();
  (void)a;
  b.hyp("f generically smooth", from_tri(from_bool(generically_smooth(m))));
  b.hyp("g smooth (Y/k smooth)", smooth_status(m.source()));
  DciResult gf = check_dci_global(kaehler(m.target()));
  DciResult f = check_dci_global(relative_kaehler(m));
  r.add("g o f d.c.i.", to_string(gf.is_dci));
  r.add("f d.c.i.", to_string(f.is_dci));
  Tri holds = Tri::Indeterminate;
  if (gf.is_dci != Tri::Indeterminate && f.is_dci != Tri::Indeterminate) holds = from_bool(gf.is_dci == f.is_dci);
  Clause& c = b.clause("(2)", "g o f d.c.i. iff f d.c.i.", {"f generically smooth", "g smooth (Y/k smooth)"}, holds);
  c.lhs = to_string(gf.is_dci);
  c.rhs = to_string(f.is_dci);
  return r;
}

Report check_cutkosky(const MorphismDecl& m, const Assertions& a) {
  Builder b("cutkosky(" + m.name() + ")", "codimension of the branch locus of a finite map");
  Report& r = b.report();
  const RingDecl& X = m.target();
  const RingDecl& Y = m.source();
  b.hyp("pi finite", a.get(m.name(), "finite"));
  b.hyp("X integral", integral(X, a));
  b.hyp("Y integral", integral(Y, a));
  b.hyp("X normal", X.is_polynomial_ring() ? Status::CheckedTrue : a.get(X.name(), "normal"));
  b.hyp("Y normal", Y.is_polynomial_ring() ? Status::CheckedTrue : a.get(Y.name(), "normal"));
  Status lci = a.get(Y.name(), "lci");
  if (static_cast<int>(Y.nvars()) - Y.dim() == static_cast<int>(Y.ideal().groebner().size()))
    lci = Status::CheckedTrue;
  b.hyp("Y l.c.i.", lci);
  std::string note;
  auto br = guarded([&] { return branch_scheme(m, 0); }, &note);
  Interval lhs = br ? codim_plus(*br, X.dim()) : Interval{0, kInf};
  if (br) add_locus(r, "B", *br, X.dim());
  Clause& c = b.clause("codim", "codim+ B_pi <= 2",
                       {"pi finite", "X integral", "Y integral", "X normal", "Y normal", "Y l.c.i."},
                       br ? leq(lhs, Interval::exact(2)) : Tri::Indeterminate);
  c.lhs = lhs.str();
  c.rhs = "2";
  if (!note.empty()) r.error = note;
  return r;
}

Report check_locally_free(const PresentedModule& M, const std::string& label, const Assertions& a) {
  Builder b("locfree(" + label + ")", "local freeness from Fitting ideals");
  Report& r = b.report();
  const RingDecl& B = M.ring();
  b.hyp("X integral", integral(B, a));
  std::size_t rk = generic_rank(M);
  Ideal Fr = fitting_ideal(M, rk);
  LocusReport V = codim_report(B, Fr, "non-free", rk);
  const long long need = static_cast<long long>(rk) + 1;
  r.add("rank", static_cast<long long>(rk));
  add_locus(r, "V", V, B.dim());
  // U = complement of V is where M is free; codim V is exact.
  const long long codim_v = V.empty ? kInf : V.codim_lower;
  Status big = codim_v > need ? Status::CheckedTrue : Status::CheckedFalse;
  b.hyp("codim V > rank + 1", big, V.empty ? "V empty" : std::to_string(V.codim_lower));
  DciResult pd = check_dci_global(M);
  b.hyp("pd <= 1 on V", pd.is_dci == Tri::Yes ? Status::CheckedTrue : Status::Indeterminate, pd.witness);
  Clause& c = b.clause("(2)", "M locally free, F_rank(M) = (1)", {"X integral", "codim V > rank + 1", "pd <= 1 on V"},
                       from_bool(Fr.is_unit()));
  c.lhs = Fr.str();
  c.rhs = "(1)";
  return r;
}

Report check_gamma_pullback(const MorphismDecl& m, const Poly& f, const Assertions& a) {
  Builder b("gamma_pullback(" + m.name() + ", " + f.str() + ")", "imperfection module of a chart");
  Report& r = b.report();
  (void)a;
  const RingDecl& X = m.target();
  const RingDecl& Y = m.source();
  PresentedModule tors = torsion_submodule(kaehler(Y), f);
  Matrix tgens = tors.embedding() ? *tors.embedding() : Matrix(Y.ring(), Y.nvars(), 0);
  std::vector<Vec> pulled;
  for (const auto& col : tgens.columns()) {
    Vec v;
    for (const auto& p : col) v.push_back(X.reduce(p.substitute(m.images())));
    pulled.push_back(std::move(v));
  }
  Matrix pg = Matrix::from_columns(X.ring(), Y.nvars(), pulled);
  PresentedModule gamma = imperfection(m);
  Matrix gg = gamma.embedding() ? *gamma.embedding() : Matrix(X.ring(), Y.nvars(), 0);
  Matrix rel = pullback_omega(m).relations();
  bool g_in_p = SpanTester(pg.hcat(rel), X).contains_all(gg);
  bool p_in_g = SpanTester(gg.hcat(rel), X).contains_all(pg);
  r.add("torsion generators", columns_str(tgens));
  r.add("pulled back", columns_str(pg));
  r.add("gamma generators", columns_str(gg));
  r.add("gamma inside pullback", g_in_p ? "yes" : "no");
  r.add("pullback inside gamma", p_in_g ? "yes" : "no");
  Clause& c = b.clause("equality", "Gamma = B * pullback of the torsion generator", {}, from_bool(g_in_p && p_in_g), true);
  c.lhs = g_in_p ? "inside" : "not inside";
  c.rhs = p_in_g ? "contains" : "does not contain";
  return r;
}

}  // namespace ramify
