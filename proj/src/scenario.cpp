#include "ramify/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ramify/parser.hpp"

namespace ramify {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; });
}

// Splits at top-level separators, keeping the column of each piece.
std::vector<std::pair<std::string, std::size_t>> split_top(std::string_view s, char sep, std::size_t col0) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      std::string_view piece = s.substr(start, i - start);
      std::size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      out.emplace_back(trim(piece), col0 + start + lead);
      start = i + 1;
      continue;
    }
    if (s[i] == '(' || s[i] == '[' || s[i] == '{') ++depth;
    if (s[i] == ')' || s[i] == ']' || s[i] == '}') --depth;
  }
  return out;
}

std::optional<long long> to_int(const std::string& s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

struct ModuleRef {
  std::string kind, target;
};

std::optional<ModuleRef> module_ref(const std::string& s) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return std::nullopt;
  ModuleRef r{s.substr(0, open), s.substr(open + 1, s.size() - open - 2)};
  if (!is_ident(r.kind) || !is_ident(r.target)) return std::nullopt;
  return r;
}

const std::set<std::string> kRingModules{"omega", "tangent", "residue"};
const std::set<std::string> kMapModules{"omega", "critical", "tbar", "gamma", "along", "image"};

class LineParser {
 public:
  LineParser(Scenario& s, std::size_t line) : s_(s), line_(line) {}

  [[noreturn]] void fail(std::size_t col, const std::string& what) const { throw ScenarioError(line_, col, what); }

  Poly poly(const std::string& text, std::size_t col, const RingPtr& R) const {
    try {
      return parse_poly(text, R);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      fail(col + e.position(), msg.substr(msg.find(": ") + 2));
    }
  }

  void check_new_name(const std::string& name, std::size_t col) const {
    if (!is_ident(name)) fail(col, "expected a name, got '" + name + "'");
    if (s_.ring(name) || s_.map(name)) fail(col, "duplicate name " + name);
  }

  void field(const std::string& rest, std::size_t col) {
    if (!s_.rings.empty()) fail(col, "field must precede ring declarations");
    std::istringstream in(rest);
    std::string kind;
    in >> kind;
    if (kind == "Q") {
      s_.field = Field::rationals();
    } else if (kind == "Fp") {
      std::string p;
      in >> p;
      auto v = to_int(p);
      if (!v || *v < 2) fail(col, "expected a prime after Fp");
      try {
        s_.field = Field::prime(static_cast<std::uint32_t>(*v));
      } catch (const Error& e) {
        fail(col, e.what());
      }
    } else {
      fail(col, "unknown field '" + kind + "'");
    }
    std::string extra;
    if (in >> extra) fail(col, "unexpected '" + extra + "'");
  }

  void ring(const std::string& rest, std::size_t col) {
    auto eq = rest.find('=');
    if (eq == std::string::npos) fail(col, "expected '=' in ring declaration");
    std::string name = trim(rest.substr(0, eq));
    check_new_name(name, col);
    std::string body = rest.substr(eq + 1);
    std::size_t bcol = col + eq + 1;
    auto lb = body.find('['), rb = body.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) fail(bcol, "expected [variables]");
    std::vector<std::string> vars;
    for (auto& [v, vcol] : split_top(std::string_view(body).substr(lb + 1, rb - lb - 1), ',', bcol + lb + 1)) {
      if (v.empty() && vars.empty()) continue;
      if (!is_ident(v)) fail(vcol, "bad variable name '" + v + "'");
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) fail(vcol, "duplicate variable " + v);
      vars.push_back(v);
    }
    if (vars.empty()) fail(bcol + lb, "a ring needs at least one variable");
    RingPtr R = PolyRing::make(vars, s_.field);
    std::vector<Poly> gens;
    std::string tail = trim(body.substr(rb + 1));
    if (!tail.empty()) {
      std::size_t tcol = bcol + body.find(tail, rb + 1);
      if (tail[0] != '/') fail(tcol, "expected '/' after variables");
      std::string ideal = trim(tail.substr(1));
      std::size_t icol = tcol + tail.find(ideal, 1);
      if (ideal.size() < 2 || ideal.front() != '(' || ideal.back() != ')') fail(icol, "expected (g1; ...; gk)");
      for (auto& [g, gcol] : split_top(std::string_view(ideal).substr(1, ideal.size() - 2), ';', icol + 1)) {
        if (g.empty()) continue;
        gens.push_back(poly(g, gcol, R));
      }
    }
    s_.rings.emplace_back(name, R, std::move(gens));
  }

  void map(const std::string& rest, std::size_t col) {
    auto colon = rest.find(':');
    auto arrow = rest.find("->");
    auto eq = rest.find('=');
    auto lb = rest.find('{');
    auto rb = rest.rfind('}');
    if (colon == std::string::npos || arrow == std::string::npos || eq == std::string::npos || lb == std::string::npos ||
        rb == std::string::npos || !(colon < arrow && arrow < eq && eq < lb && lb < rb))
      fail(col, "expected: map <name> : <Source> -> <Target> = { y = f; ... }");
    std::string name = trim(rest.substr(0, colon));
    check_new_name(name, col);
    std::string src = trim(rest.substr(colon + 1, arrow - colon - 1));
    std::string tgt = trim(rest.substr(arrow + 2, eq - arrow - 2));
    const RingDecl* Y = s_.ring(src);
    const RingDecl* X = s_.ring(tgt);
    if (!Y) fail(col + colon + 1, "unknown ring " + src);
    if (!X) fail(col + arrow + 2, "unknown ring " + tgt);
    std::vector<std::optional<Poly>> images(Y->nvars());
    for (auto& [piece, pcol] : split_top(std::string_view(rest).substr(lb + 1, rb - lb - 1), ';', col + lb + 1)) {
      if (piece.empty()) continue;
      auto peq = piece.find('=');
      if (peq == std::string::npos) fail(pcol, "expected 'variable = image'");
      std::string var = trim(piece.substr(0, peq));
      auto idx = Y->ring()->index_of(var);
      if (!idx) fail(pcol, "unknown variable " + var + " of ring " + src);
      if (images[*idx]) fail(pcol, "variable " + var + " assigned twice");
      std::string img = trim(piece.substr(peq + 1));
      images[*idx] = poly(img, pcol + piece.find(img, peq + 1), X->ring());
    }
    std::vector<Poly> imgs;
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (!images[j]) fail(col + lb, "no image given for " + Y->ring()->vars()[j]);
      imgs.push_back(*images[j]);
    }
    try {
      s_.maps.emplace_back(name, *Y, *X, std::move(imgs));
    } catch (const ScenarioError&) {
      throw;
    } catch (const Error& e) {
      fail(col, e.what());
    }
  }

  void assertion(const std::string& rest, std::size_t col) {
    std::istringstream in(rest);
    std::string name, fact, extra;
    in >> name >> fact;
    if (!s_.ring(name) && !s_.map(name)) fail(col, "unknown identifier " + name);
    static const std::set<std::string> facts{"domain", "finite", "normal", "lci"};
    if (!facts.count(fact)) fail(col, "unknown assertion '" + fact + "'");
    if (in >> extra) fail(col, "unexpected '" + extra + "'");
    s_.assertions.emplace_back(name, fact);
  }

  void point(const std::string& rest, std::size_t col) {
    std::istringstream in(rest);
    std::string name, where, extra;
    in >> name >> where;
    const RingDecl* R = s_.ring(name);
    if (!R) fail(col, "unknown ring " + name);
    if (where != "origin") fail(col, "only 'origin' points are supported");
    if (in >> extra) fail(col, "unexpected '" + extra + "'");
    if (!R->origin_on_variety()) fail(col, "the origin does not lie on " + name);
    s_.points.push_back(name);
  }

  void budget(const std::string& rest, std::size_t col) {
    std::istringstream in(rest);
    std::string k1, v1, k2, v2, extra;
    in >> k1 >> v1 >> k2 >> v2;
    auto deg = to_int(v1);
    char* end = nullptr;
    double secs = std::strtod(v2.c_str(), &end);
    if (k1 != "degree" || k2 != "seconds" || !deg || *deg < 1 || v2.empty() || *end != '\0' || secs <= 0)
      fail(col, "expected: budget degree <n> seconds <n>");
    if (in >> extra) fail(col, "unexpected '" + extra + "'");
    s_.budget = Budget{static_cast<std::uint64_t>(*deg), secs};
  }

  void task(const std::string& rest, std::size_t col) {
    auto open = rest.find('(');
    if (open == std::string::npos || rest.back() != ')') fail(col, "expected task(<args>)");
    TaskSpec t;
    t.name = trim(rest.substr(0, open));
    t.line = line_;
    std::string inner = rest.substr(open + 1, rest.size() - open - 2);
    std::vector<std::size_t> cols;
    for (auto& [a, acol] : split_top(inner, ',', col + open + 1)) {
      if (a.empty()) {
        if (inner.find_first_not_of(" \t") == std::string::npos) break;
        fail(acol, "empty argument");
      }
      t.args.push_back(strip_spaces(a));
      cols.push_back(acol);
    }
    validate(t, col, cols);
    s_.tasks.push_back(std::move(t));
  }

 private:
  const MorphismDecl& need_map(const std::string& a, std::size_t col) const {
    const MorphismDecl* m = s_.map(a);
    if (!m) fail(col, "unknown map " + a);
    return *m;
  }
  const RingDecl& need_ring(const std::string& a, std::size_t col) const {
    const RingDecl* r = s_.ring(a);
    if (!r) fail(col, "unknown ring " + a);
    return *r;
  }
  void need_int(const std::string& a, std::size_t col) const {
    auto v = to_int(a);
    if (!v || *v < 0 || *v > 16) fail(col, "expected a small nonnegative integer, got '" + a + "'");
  }
  const RingDecl& need_module(const std::string& a, std::size_t col) const {
    auto r = module_ref(a);
    if (!r) fail(col, "expected a module reference kind(name)");
    if (const RingDecl* R = s_.ring(r->target)) {
      if (!kRingModules.count(r->kind)) fail(col, "module " + r->kind + " is not defined for a ring");
      return *R;
    }
    if (const MorphismDecl* m = s_.map(r->target)) {
      if (!kMapModules.count(r->kind)) fail(col, "module " + r->kind + " is not defined for a map");
      return m->target();
    }
    fail(col, "unknown identifier " + r->target);
  }

  void arity(const TaskSpec& t, std::size_t lo, std::size_t hi, std::size_t col) const {
    if (t.args.size() < lo || t.args.size() > hi)
      fail(col, "task " + t.name + " takes " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                    " arguments");
  }

  void validate(TaskSpec& t, std::size_t col, const std::vector<std::size_t>& cols) const {
    const std::string& n = t.name;
    auto at = [&](std::size_t i) { return i < cols.size() ? cols[i] : col; };
    if (n == "branch" || n == "critical" || n == "duality") {
      arity(t, 1, 2, col);
      if (t.args.size() == 1) {
        if (s_.maps.size() != 1) fail(col, "task " + n + " needs a map argument when several maps exist");
        need_int(t.args[0], at(0));
      } else {
        need_map(t.args[0], at(0));
        need_int(t.args[1], at(1));
      }
    } else if (n == "dci") {
      arity(t, 1, 1, col);
      if (!s_.ring(t.args[0]) && !s_.map(t.args[0])) fail(at(0), "unknown identifier " + t.args[0]);
    } else if (n == "gamma" || n == "discriminant" || n == "cutkosky" || n == "composition") {
      arity(t, 1, 1, col);
      need_map(t.args[0], at(0));
    } else if (n == "purity_critical") {
      arity(t, 1, 2, col);
      need_map(t.args[0], at(0));
      if (t.args.size() == 2) need_int(t.args[1], at(1));
    } else if (n == "purity_branch") {
      arity(t, 2, 2, col);
      need_map(t.args[0], at(0));
      need_int(t.args[1], at(1));
    } else if (n == "defects" || n == "smoothness") {
      arity(t, 1, 1, col);
      const RingDecl& R = need_ring(t.args[0], at(0));
      if (n == "defects" && std::find(s_.points.begin(), s_.points.end(), R.name()) == s_.points.end())
        fail(at(0), "defects need a designated point on " + R.name());
    } else if (n == "heights" || n == "betti" || n == "locfree") {
      arity(t, 1, 1, col);
      need_module(t.args[0], at(0));
    } else if (n == "torsion") {
      arity(t, 2, 2, col);
      const RingDecl& R = need_module(t.args[0], at(0));
      poly(t.args[1], at(1), R.ring());
    } else if (n == "gamma_pullback") {
      arity(t, 2, 2, col);
      const MorphismDecl& m = need_map(t.args[0], at(0));
      poly(t.args[1], at(1), m.source().ring());
    } else {
      fail(col, "unknown task '" + n + "'");
    }
    // Canonical spelling for polynomial arguments.
    if (n == "torsion") t.args[1] = poly(t.args[1], at(1), need_module(t.args[0], at(0)).ring()).str();
    if (n == "gamma_pullback") t.args[1] = poly(t.args[1], at(1), need_map(t.args[0], at(0)).source().ring()).str();
    for (auto& a : t.args) a = strip_spaces(a);
  }

  Scenario& s_;
  std::size_t line_;
};

}  // namespace

std::string TaskSpec::str() const {
  std::string s = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i];
  return s + ")";
}

const RingDecl* Scenario::ring(const std::string& name) const {
  for (const auto& r : rings)
    if (r.name() == name) return &r;
  return nullptr;
}

const MorphismDecl* Scenario::map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name() == name) return &m;
  return nullptr;
}

Assertions Scenario::assertion_set() const {
  Assertions a;
  for (const auto& [n, f] : assertions) a.facts[n].insert(f);
  a.points.insert(points.begin(), points.end());
  return a;
}

std::string Scenario::to_source() const {
  std::ostringstream out;
  out << "field " << field.str() << "\n";
  for (const auto& r : rings) {
    out << "ring " << r.name() << " = [";
    const auto& vars = r.ring()->vars();
    for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? ", " : "") << vars[i];
    out << "] / (";
    const auto& g = r.ideal().gens();
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "; " : "") << g[i].str();
    out << ")\n";
  }
  for (const auto& m : maps) {
    out << "map " << m.name() << " : " << m.source().name() << " -> " << m.target().name() << " = { ";
    const auto& vars = m.source().ring()->vars();
    for (std::size_t j = 0; j < vars.size(); ++j)
      out << (j ? "; " : "") << vars[j] << " = " << m.images()[j].str();
    out << " }\n";
  }
  for (const auto& [n, f] : assertions) out << "assert " << n << " " << f << "\n";
  for (const auto& p : points) out << "point " << p << " origin\n";
  if (budget) out << "budget degree " << budget->max_degree << " seconds " << budget->seconds << "\n";
  for (const auto& t : tasks) out << "task " << t.str() << "\n";
  return out.str();
}

bool Scenario::operator==(const Scenario& o) const {
  auto gens = [](const RingDecl& r) {
    std::vector<std::string> v;
    for (const auto& g : r.ideal().gens()) v.push_back(g.str());
    return v;
  };
  if (field.str() != o.field.str() || rings.size() != o.rings.size() || maps.size() != o.maps.size()) return false;
  for (std::size_t i = 0; i < rings.size(); ++i)
    if (rings[i].name() != o.rings[i].name() || rings[i].ring()->vars() != o.rings[i].ring()->vars() ||
        gens(rings[i]) != gens(o.rings[i]))
      return false;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto &a = maps[i], &b = o.maps[i];
    if (a.name() != b.name() || a.source().name() != b.source().name() || a.target().name() != b.target().name())
      return false;
    for (std::size_t j = 0; j < a.images().size(); ++j)
      if (a.images()[j].str() != b.images()[j].str()) return false;
  }
  bool same_budget = budget.has_value() == o.budget.has_value() &&
                     (!budget || (budget->max_degree == o.budget->max_degree && budget->seconds == o.budget->seconds));
  return assertions == o.assertions && points == o.points && same_budget && tasks == o.tasks;
}

Scenario parse_scenario(const std::string& src) {
  Scenario s;
  std::istringstream in(src);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw.substr(0, raw.find('#'));
    if (trim(text).empty()) continue;
    std::size_t col = text.find_first_not_of(" \t") + 1;
    std::size_t kw_end = text.find_first_of(" \t", col - 1);
    std::string kw = text.substr(col - 1, kw_end == std::string::npos ? std::string::npos : kw_end - col + 1);
    std::string rest = kw_end == std::string::npos ? "" : text.substr(kw_end);
    std::size_t rest_col = kw_end == std::string::npos ? text.size() + 1 : kw_end + 1;
    // Trim the rest while tracking its column.
    std::size_t lead = rest.find_first_not_of(" \t");
    if (lead == std::string::npos) {
      rest.clear();
    } else {
      rest_col += lead;
      rest = trim(rest);
    }
    LineParser p(s, line);
    if (kw == "field") p.field(rest, rest_col);
    else if (kw == "ring") p.ring(rest, rest_col);
    else if (kw == "map") p.map(rest, rest_col);
    else if (kw == "assert") p.assertion(rest, rest_col);
    else if (kw == "point") p.point(rest, rest_col);
    else if (kw == "budget") p.budget(rest, rest_col);
    else if (kw == "task") p.task(rest, rest_col);
    else p.fail(col, "unknown keyword '" + kw + "'");
  }
  return s;
}

// ---- running ----

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

void locus_values(Report& r, const LocusReport& l, int dim) {
  r.add("ideal", ideal_strings(l.ideal));
  r.add("empty", l.empty ? "yes" : "no");
  if (l.empty) return;
  r.add("codim lower", static_cast<long long>(l.codim_lower));
  r.add("codim+", l.codim_upper ? std::to_string(*l.codim_upper)
                                : "[" + std::to_string(l.codim_lower) + ", " + std::to_string(dim) + "]");
  r.add("certified", l.certified ? "yes" : "no");
  std::vector<std::string> comps;
  for (const auto& c : l.components)
    comps.push_back(c.ideal.str() + " codim " + std::to_string(c.codim) + (c.certified ? "" : " (uncertified)"));
  r.add("components", comps);
  if (l.radical) r.add("radical", ideal_strings(*l.radical));
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

PresentedModule build_module(const Scenario& s, const std::string& ref) {
  auto r = module_ref(ref);
  if (const RingDecl* R = s.ring(r->target)) {
    if (r->kind == "omega") return kaehler(*R);
    if (r->kind == "tangent") return tangent(*R);
    Matrix m(R->ring(), 1, R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) m.at(0, i) = R->var(i);
    if (!R->origin_on_variety()) throw Error("the residue field at the origin needs the origin on " + R->name());
    return PresentedModule(*R, m);
  }
  const MorphismDecl& m = *s.map(r->target);
  if (r->kind == "omega") return relative_kaehler(m);
  if (r->kind == "critical") return critical_module(m);
  if (r->kind == "tbar") return image_tangent(m);
  if (r->kind == "gamma") return imperfection(m);
  if (r->kind == "along") return tangent_along(m).module;
  return image_in_omega(m);
}

const MorphismDecl& map_arg(const Scenario& s, const TaskSpec& t, std::size_t& next) {
  if (t.args.size() == 1 && (t.name == "branch" || t.name == "critical" || t.name == "duality")) {
    next = 0;
    return s.maps.front();
  }
  next = 1;
  return *s.map(t.args[0]);
}

Report run_task_unguarded(const Scenario& s, const TaskSpec& t) {
  const Assertions a = s.assertion_set();
  const std::string& n = t.name;
  auto integer = [&](std::size_t i) { return static_cast<std::size_t>(*to_int(t.args[i])); };
  std::size_t next = 0;
  if (n == "branch" || n == "critical") {
    const MorphismDecl& m = map_arg(s, t, next);
    std::size_t i = integer(next);
    Report r;
    r.task = t.str();
    r.add("d", static_cast<long long>(relative_dimension(m)));
    locus_values(r, n == "branch" ? branch_scheme(m, i) : critical_scheme(m, i), m.target().dim());
    return r;
  }
  if (n == "duality") {
    const MorphismDecl& m = map_arg(s, t, next);
    return check_duality(m, integer(next), a);
  }
  if (n == "dci") {
    if (const RingDecl* R = s.ring(t.args[0])) return check_dci(kaehler(*R), "omega(" + R->name() + ")", a);
    const MorphismDecl& m = *s.map(t.args[0]);
    return check_dci(relative_kaehler(m), "omega(" + m.name() + ")", a);
  }
  if (n == "gamma") return check_gamma_zero(*s.map(t.args[0]), a);
  if (n == "heights") return check_height_bounds(build_module(s, t.args[0]), t.args[0], a);
  if (n == "purity_critical") return check_purity_critical(*s.map(t.args[0]), t.args.size() > 1 ? integer(1) : 1, a);
  if (n == "purity_branch") return check_purity_branch(*s.map(t.args[0]), integer(1), a);
  if (n == "cutkosky") return check_cutkosky(*s.map(t.args[0]), a);
  if (n == "composition") return check_composition_dci(*s.map(t.args[0]), a);
  if (n == "locfree") return check_locally_free(build_module(s, t.args[0]), t.args[0], a);
  if (n == "gamma_pullback") {
    const MorphismDecl& m = *s.map(t.args[0]);
    return check_gamma_pullback(m, parse_poly(t.args[1], m.source().ring()), a);
  }
  Report r;
  r.task = t.str();
  if (n == "discriminant") {
    r.add("ideal", ideal_strings(discriminant(*s.map(t.args[0]))));
  } else if (n == "smoothness") {
    const RingDecl& R = *s.ring(t.args[0]);
    locus_values(r, smoothness_locus(R), R.dim());
  } else if (n == "defects") {
    DefectData d = defects_at_origin(*s.ring(t.args[0]));
    r.add("ed", static_cast<long long>(d.ed));
    r.add("d", static_cast<long long>(d.d));
    r.add("delta", static_cast<long long>(d.delta));
    r.add("eta", static_cast<long long>(d.eta));
  } else if (n == "betti") {
    PresentedModule M = build_module(s, t.args[0]);
    BettiData b = local_betti(M);
    std::vector<std::string> betti;
    for (int v : b.betti) betti.push_back(std::to_string(v));
    r.add("betti", betti);
    r.add("pd", b.pd.str());
    if (b.euler) r.add("chi", static_cast<long long>(*b.euler));
    std::vector<std::string> partial;
    for (int v : b.partial_eulers) partial.push_back(std::to_string(v));
    if (!partial.empty()) r.add("partial euler", partial);
    if (auto depth = depth_at_origin(M)) r.add("depth over ambient", static_cast<long long>(*depth));
  } else if (n == "torsion") {
    PresentedModule M = build_module(s, t.args[0]);
    PresentedModule T = torsion_submodule(M, parse_poly(t.args[1], M.ring().ring()));
    std::vector<std::string> gens;
    if (T.embedding())
      for (const auto& c : T.embedding()->columns()) gens.push_back(vec_str(c));
    r.add("generators", gens);
    r.add("zero", T.is_zero() ? "yes" : "no");
  }
  return r;
}

}  // namespace

Report run_task(const Scenario& s, const TaskSpec& t) {
  try {
    Report r = run_task_unguarded(s, t);
    r.task = t.str();
    return r;
  } catch (const BudgetExceeded& e) {
    Report r;
    r.task = t.str();
    r.error = e.what();
    return r;
  } catch (const Error& e) {
    Report r;
    r.task = t.str();
    r.error = e.what();
    r.failed = true;
    return r;
  }
}

bool ScenarioReport::failed() const {
  return !error.empty() || std::any_of(tasks.begin(), tasks.end(), [](const Report& r) { return r.failed; });
}

std::size_t ScenarioReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(tasks.begin(), tasks.end(), [&](const Report& r) { return r.verdict() == v; }));
}

ScenarioReport run_scenario(const Scenario& s, const std::string& name, const RunOptions& opt) {
  ScenarioReport out;
  out.name = name;
  Budget b = s.budget.value_or(Budget{});
  if (opt.max_degree) b.max_degree = *opt.max_degree;
  if (opt.seconds) b.seconds = *opt.seconds;
  for (const auto& t : s.tasks) {
    BudgetScope scope(b);
    out.tasks.push_back(run_task(s, t));
  }
  return out;
}

ScenarioReport run_file(const std::string& path, const RunOptions& opt) {
  std::string name = path.substr(path.find_last_of('/') + 1);
  std::ifstream in(path);
  if (!in) {
    ScenarioReport r;
    r.name = name;
    r.error = "cannot read " + path;
    return r;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    Scenario s = parse_scenario(buf.str());
    return run_scenario(s, name, opt);
  } catch (const Error& e) {
    ScenarioReport r;
    r.name = name;
    r.error = path + ":" + e.what();
    return r;
  }
}

// ---- rendering ----

namespace {

std::string value_str(const Value& v) {
  if (auto i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (auto s = std::get_if<std::string>(&v)) return *s;
  return "(" + join(std::get<std::vector<std::string>>(v)) + ")";
}

std::map<Verdict, std::size_t> tally(const std::vector<ScenarioReport>& reports) {
  std::map<Verdict, std::size_t> t;
  for (const auto& s : reports)
    for (const auto& r : s.tasks) ++t[r.verdict()];
  return t;
}

const Verdict kAll[] = {Verdict::Verified, Verdict::Violated, Verdict::Inapplicable,
                        Verdict::Indeterminate, Verdict::Refuted, Verdict::Computed};

}  // namespace

std::string render_text(const std::vector<ScenarioReport>& reports) {
  std::ostringstream out;
  std::size_t errors = 0;
  for (const auto& s : reports) {
    out << "scenario " << s.name << "\n";
    if (!s.error.empty()) {
      out << "  error: " << s.error << "\n";
      ++errors;
      continue;
    }
    for (const auto& r : s.tasks) {
      out << "  task " << r.task << ": " << to_string(r.verdict()) << "\n";
      if (!r.theorem.empty()) out << "    theorem: " << r.theorem << "\n";
      for (const auto& h : r.hypotheses)
        out << "    hypothesis " << h.name << ": " << to_string(h.status) << (h.note.empty() ? "" : " [" + h.note + "]")
            << "\n";
      for (const auto& c : r.clauses) {
        out << "    clause " << c.name << ": " << c.statement;
        if (!c.lhs.empty() || !c.rhs.empty()) out << " | lhs " << c.lhs << " | rhs " << c.rhs;
        out << " -> " << to_string(c.verdict) << "\n";
      }
      for (const auto& [k, v] : r.values) out << "    " << k << ": " << value_str(v) << "\n";
      if (!r.error.empty()) {
        out << "    " << (r.failed ? "error" : "budget") << ": " << r.error << "\n";
        if (r.failed) ++errors;
      }
    }
  }
  auto t = tally(reports);
  out << "summary: " << reports.size() << " scenarios";
  for (Verdict v : kAll) out << ", " << to_string(v) << " " << t[v];
  out << ", errors " << errors << "\n";
  return out.str();
}

std::string render_structured(const std::vector<ScenarioReport>& reports) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["scenarios"] = json::array();
  std::size_t errors = 0;
  for (const auto& s : reports) {
    json js;
    js["scenario"] = s.name;
    if (!s.error.empty()) {
      js["error"] = s.error;
      ++errors;
    }
    js["tasks"] = json::array();
    for (const auto& r : s.tasks) {
      json jt;
      jt["task"] = r.task;
      if (!r.theorem.empty()) jt["theorem"] = r.theorem;
      jt["verdict"] = to_string(r.verdict());
      jt["hypotheses"] = json::array();
      for (const auto& h : r.hypotheses)
        jt["hypotheses"].push_back({{"name", h.name}, {"status", to_string(h.status)}, {"note", h.note}});
      jt["clauses"] = json::array();
      for (const auto& c : r.clauses)
        jt["clauses"].push_back({{"name", c.name},
                                 {"statement", c.statement},
                                 {"hypotheses", c.hypotheses},
                                 {"lhs", c.lhs},
                                 {"rhs", c.rhs},
                                 {"verdict", to_string(c.verdict)}});
      json vals = json::object();
      for (const auto& [k, v] : r.values) std::visit([&, key = k](const auto& x) { vals[key] = x; }, v);
      jt["values"] = vals;
      if (!r.error.empty()) {
        jt["error"] = r.error;
        jt["failed"] = r.failed;
        if (r.failed) ++errors;
      }
      js["tasks"].push_back(jt);
    }
    doc["scenarios"].push_back(js);
  }
  auto t = tally(reports);
  json summary;
  summary["scenarios"] = reports.size();
  for (Verdict v : kAll) summary[to_string(v)] = t[v];
  summary["errors"] = errors;
  doc["summary"] = summary;
  return doc.dump(2) + "\n";
}

}  // namespace ramify
