// One PASS/FAIL line per acceptance criterion, with wall time.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "ramify/parser.hpp"
#include "ramify/properties.hpp"
#include "ramify/scenario.hpp"

using namespace ramify;
namespace fs = std::filesystem;

namespace {

const std::string kRoot = RAMIFY_SOURCE_DIR;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
};

Scenario load(const std::string& rel) {
  std::ifstream in(kRoot + "/" + rel);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(parse_poly(s, R));
  return Ideal(R, g);
}

const Clause* find_clause(const Report& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.name == name) return &c;
  return nullptr;
}

bool spans_agree(const Matrix& a, const Matrix& b, const Matrix& rel, const RingDecl& B) {
  return SpanTester(a.hcat(rel), B).contains_all(b) && SpanTester(b.hcat(rel), B).contains_all(a);
}

Outcome ac1() {
  Outcome o;
  Scenario s = load("corpus/a3_fold.plc");
  const MorphismDecl& m = *s.map("pi");
  const RingPtr& R = m.target().ring();
  Ideal expected = ideal_of(R, {"x1 + x2*x3"});
  LocusReport b = branch_scheme(m, 0);
  o.expect(b.ideal == expected, "B_pi = (x1 + x2*x3)");
  o.expect(b.certified && b.codim_upper == 1, "codim+ B_pi = 1 certified");
  Ideal f0c = fitting_ideal(critical_module(m), 0);
  o.expect(expected.contains(f0c) && radical_membership(parse_poly("x1 + x2*x3", R), f0c), "rad F_0(C) = (x1 + x2*x3)");
  Report d = check_duality(m, 2, s.assertion_set());
  o.expect(d.verdict() == Verdict::Verified, "duality verified");
  for (const char* c : {"i=0", "i=1", "i=2"}) {
    const Clause* cl = find_clause(d, c);
    o.expect(cl && cl->verdict == Verdict::Verified, std::string("duality clause ") + c);
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  Scenario s = load("corpus/whitney.plc");
  const MorphismDecl& w = *s.map("w");
  LocusReport b = branch_scheme(w, 0);
  o.expect(b.radical && *b.radical == ideal_of(w.target().ring(), {"s", "t"}), "radical of F_0(Omega) = (s, t)");
  o.expect(b.certified && b.codim_upper == 2, "codim+ = 2");
  o.expect(fitting_ideal(critical_module(w), 0).is_unit(), "F_0(C) = (1)");
  o.expect(check_dci_global(relative_kaehler(w)).is_dci == Tri::No, "Omega_{X/Y} not d.c.i.");
  o.expect(local_betti(relative_kaehler(w)).betti == std::vector<int>{2, 3, 1}, "betti (2, 3, 1) at origin");
  o.expect(check_dci_global(kaehler(*s.ring("Y"))).is_dci == Tri::Yes, "Omega_{Y'} d.c.i.");
  Report c = check_cutkosky(w, s.assertion_set());
  const Clause* cl = find_clause(c, "codim");
  o.expect(cl && cl->verdict == Verdict::Verified && cl->lhs == "2" && cl->rhs == "2", "Cutkosky 2 <= 2 verified");
  return o;
}

Outcome ac3() {
  Outcome o;
  Scenario s = load("corpus/h_birational.plc");
  const MorphismDecl& h = *s.map("h");
  LocusReport b = branch_scheme(h, 0);
  o.expect(b.radical && *b.radical == ideal_of(h.target().ring(), {"y1", "y2"}), "radical of B_h = (y1, y2)");
  o.expect(b.certified && b.codim_upper == 2, "codim+ = 2");
  o.expect(critical_scheme(h, 0).empty, "C_h empty");
  Report p = check_purity_branch(h, 1, s.assertion_set());
  const Clause* cl = find_clause(p, "(1) i=0");
  o.expect(cl && cl->verdict == Verdict::Verified && cl->lhs == "2" && cl->rhs == "2", "purity bound 2 matched");
  bool delta_one = false;
  for (const auto& [k, v] : p.values)
    if (k == "delta_Y at origin") delta_one = std::get<long long>(v) == 1;
  o.expect(delta_one, "delta_Y = 1");
  return o;
}

Outcome ac4() {
  Outcome o;
  Scenario s = load("corpus/cusp_chart.plc");
  const MorphismDecl& c = *s.map("c");
  const RingDecl& A = c.source();
  const RingPtr& Ra = A.ring();
  PresentedModule omega = kaehler(A);
  PresentedModule T = torsion_submodule(omega, parse_poly("x", Ra));
  o.expect(T.embedding() && T.embedding()->cols() == 1, "torsion cyclic");
  Matrix v(Ra, 2, 1);
  v.at(0, 0) = parse_poly("2*y", Ra);
  v.at(1, 0) = parse_poly("-3*x", Ra);
  if (T.embedding())
    o.expect(spans_agree(*T.embedding(), v, omega.relations(), A), "torsion generator = 2y dx - 3x dy");

  // Gamma against B * pullback of that generator, inside pi^* Omega_A.
  const RingDecl& B = c.target();
  PresentedModule pulled = pullback_omega(c);
  Matrix pv(B.ring(), 2, 1);
  for (std::size_t r = 0; r < 2; ++r) pv.at(r, 0) = B.reduce(v.at(r, 0).substitute(c.images()));
  PresentedModule gamma = imperfection(c);
  bool inside = gamma.embedding() && SpanTester(gamma.embedding()->hcat(pulled.relations()), B).contains_all(pv);
  bool equal = gamma.embedding() && spans_agree(*gamma.embedding(), pv, pulled.relations(), B);
  o.expect(inside, "pullback inside Gamma");
  o.expect(equal, "Gamma = B * pullback (Gamma also holds dx - 3/2*xp*dy, outside that span)");
  return o;
}

Outcome ac5() {
  Outcome o;
  for (const auto& r : run_properties(20261017, 100)) {
    std::ostringstream line;
    line << r.name << " " << r.cases << " cases " << r.failures << " failures";
    o.notes.push_back(line.str());
    o.expect(r.cases >= 100 && r.failures == 0, r.name + (r.first_failure.empty() ? "" : ": " + r.first_failure));
  }
  return o;
}

int tool_exit(const std::string& args) {
  std::string cmd = std::string(RAMIFY_TOOL) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome ac6() {
  Outcome o;
  std::size_t files = 0, violated = 0;
  for (const auto& e : fs::directory_iterator(kRoot + "/corpus")) {
    if (e.path().extension() != ".plc") continue;
    ++files;
    ScenarioReport r = run_file(e.path().string());
    violated += r.count(Verdict::Violated);
    o.expect(!r.failed(), e.path().filename().string() + " ran cleanly");
  }
  o.expect(files >= 6, "at least 6 corpus scenarios");
  o.expect(violated == 0, "zero violated in corpus");
  o.expect(tool_exit("corpus " + kRoot + "/corpus") == 0, "corpus exit 0");
  ScenarioReport mut = run_file(kRoot + "/mutations/whitney_veronese3.plc");
  o.expect(mut.count(Verdict::Violated) > 0, "mutation flips the Cutkosky verdict");
  o.expect(tool_exit("corpus " + kRoot + "/mutations") == 2, "mutation exit 2");
  o.notes.push_back(std::to_string(files) + " scenarios");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {{"AC1", 5, ac1},  {"AC2", 10, ac2}, {"AC3", 20, ac3},
                                {"AC4", 10, ac4}, {"AC5", 0, ac5},  {"AC6", 0, ac6}};
  int failed = 0;
  for (auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs > c.limit) {
      o.ok = false;
      o.notes.push_back("over time limit");
    }
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << secs;
    std::cout << c.id << " " << (o.ok ? "PASS" : "FAIL") << " " << t.str() << "s";
    for (const auto& n : o.notes) std::cout << " | " << n;
    std::cout << "\n";
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
