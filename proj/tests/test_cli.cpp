#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "ramify/scenario.hpp"

using namespace ramify;
namespace fs = std::filesystem;

namespace {

const std::string kRoot = RAMIFY_SOURCE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(kRoot + "/corpus"))
    if (e.path().extension() == ".plc") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

const Report& task(const ScenarioReport& r, const std::string& name) {
  for (const auto& t : r.tasks)
    if (t.task == name) return t;
  FAIL("missing task " << name);
  return r.tasks.front();
}

std::vector<std::string> strings(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.values)
    if (k == key) return std::get<std::vector<std::string>>(v);
  FAIL("missing value " << key);
  return {};
}

const Clause& clause(const Report& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.name == name) return c;
  FAIL("missing clause " << name);
  return r.clauses.front();
}

}  // namespace

TEST_CASE("grammar basics") {
  Scenario s = parse_scenario(
      "# comment\nfield Fp 5\nring R = [x, y] / ()\nring S = [u]\n"
      "map f : S -> R = { u = x^2 - y }\nassert R domain\npoint R origin\nbudget degree 12 seconds 3\n");
  CHECK(s.field.str() == "Fp 5");
  CHECK(s.rings.size() == 2);
  CHECK(s.maps.size() == 1);
  CHECK(s.tasks.empty());
  REQUIRE(s.budget);
  CHECK(s.budget->max_degree == 12);
  CHECK(run_scenario(s, "empty").tasks.empty());
  CHECK(s == parse_scenario(s.to_source()));
}

TEST_CASE("diagnostics carry positions") {
  CHECK_THROWS_AS(parse_scenario("ring R = [x]\nmap f : R -> T = { x = x }\n"), ScenarioError);
  try {
    parse_scenario("field Q\nring R = [x, y]\ntask branch(0)\n");
    FAIL("expected an error");
  } catch (const ScenarioError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_scenario("ring R = [x]\nring R = [y]\n");
    FAIL("expected an error");
  } catch (const ScenarioError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_scenario("ring R = [x]\ntask frobnicate(R)\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("ring R = [x]\nring S = [y]\nmap f : S -> R = { y = x y }\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("ring R = [x] / (x - 1)\npoint R origin\n"), ScenarioError);
}

TEST_CASE("ill-defined map names the generator") {
  ScenarioReport r = run_file(kRoot + "/tests/data/ill_defined.plc");
  CHECK(r.failed());
  CHECK(r.tasks.empty());
  CHECK(r.error.find("-b^2 + a*c") != std::string::npos);
  CHECK(r.error.find(":4:") != std::string::npos);
}

TEST_CASE("corpus parses and round-trips") {
  auto files = corpus_files();
  CHECK(files.size() >= 6);
  for (const auto& f : files) {
    CAPTURE(f);
    Scenario s = parse_scenario(slurp(f));
    CHECK(!s.tasks.empty());
    Scenario again = parse_scenario(s.to_source());
    CHECK(s == again);
    CHECK(again.to_source() == s.to_source());
  }
  Scenario a3 = parse_scenario(slurp(kRoot + "/corpus/a3_fold.plc"));
  std::vector<std::string> names;
  for (const auto& t : a3.tasks) names.push_back(t.name);
  CHECK(names[0] == "branch");
  CHECK(names[1] == "critical");
  CHECK(names[2] == "duality");
  CHECK(names[3] == "purity_branch");
}

TEST_CASE("corpus reports") {
  ScenarioReport a3 = run_file(kRoot + "/corpus/a3_fold.plc");
  CHECK(strings(task(a3, "branch(0)"), "ideal") == std::vector<std::string>{"x2*x3 + x1"});
  CHECK(strings(task(a3, "critical(0)"), "ideal") == std::vector<std::string>{"x2*x3 + x1"});
  CHECK(task(a3, "duality(2)").verdict() == Verdict::Verified);
  CHECK(task(a3, "purity_branch(pi, 1)").verdict() == Verdict::Verified);

  ScenarioReport w = run_file(kRoot + "/corpus/whitney.plc");
  CHECK(strings(task(w, "branch(0)"), "radical") == std::vector<std::string>{"t", "s"});
  CHECK(strings(task(w, "critical(0)"), "ideal") == std::vector<std::string>{"1"});
  const Report& dci = task(w, "dci(w)");
  bool global_no = false;
  for (const auto& [k, v] : dci.values)
    if (k == "global") global_no = std::get<std::string>(v) == "no";
  CHECK(global_no);
  const Clause& c1 = clause(task(w, "purity_branch(w, 1)"), "(1) i=0");
  CHECK(c1.rhs == "2");
  CHECK(c1.verdict == Verdict::Verified);

  ScenarioReport cusp = run_file(kRoot + "/corpus/cusp_chart.plc");
  CHECK(strings(task(cusp, "torsion(omega(A), x)"), "generators") == std::vector<std::string>{"(y, -3/2*x)"});
  CHECK(task(cusp, "gamma_pullback(c, x)").verdict() == Verdict::Refuted);
}

TEST_CASE("corpus stays silent and runs are deterministic") {
  auto files = corpus_files();
  std::vector<ScenarioReport> seq;
  for (const auto& f : files) seq.push_back(run_file(f));
  for (const auto& r : seq) {
    CAPTURE(r.name);
    CHECK(r.count(Verdict::Violated) == 0);
    CHECK(!r.failed());
  }
  std::vector<ScenarioReport> par(files.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < files.size(); ++i) pool.emplace_back([&, i] { par[i] = run_file(files[i]); });
  for (auto& t : pool) t.join();
  CHECK(render_structured(seq) == render_structured(par));
  CHECK(render_text(seq) == render_text(par));
  CHECK(render_text(seq) == render_text([&] {
          std::vector<ScenarioReport> again;
          for (const auto& f : files) again.push_back(run_file(f));
          return again;
        }()));
}

TEST_CASE("mutation raises the alarm") {
  ScenarioReport r = run_file(kRoot + "/mutations/whitney_veronese3.plc");
  CHECK(r.count(Verdict::Violated) == 1);
  ScenarioReport orig = run_file(kRoot + "/corpus/whitney.plc");
  CHECK(task(orig, "cutkosky(w)").verdict() == Verdict::Verified);
}

TEST_CASE("broken and unreadable files are flagged") {
  fs::path dir = fs::temp_directory_path() / "ramify_cli_test";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "broken.plc") << "field Q\nring R = [x\n";
  }
  ScenarioReport bad = run_file((dir / "broken.plc").string());
  CHECK(bad.failed());
  CHECK(bad.error.find(":2:") != std::string::npos);
  CHECK(run_file((dir / "missing.plc").string()).failed());
  CHECK(render_text({}).find("0 scenarios") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("budget errors stay in the report") {
  Scenario s = parse_scenario(slurp(kRoot + "/corpus/whitney.plc"));
  RunOptions opt;
  opt.max_degree = 1;
  ScenarioReport r = run_scenario(s, "tight", opt);
  CHECK(r.tasks.size() == s.tasks.size());
  bool some_budget = false;
  for (const auto& t : r.tasks) some_budget = some_budget || (!t.error.empty() && !t.failed);
  CHECK(some_budget);
  CHECK(r.count(Verdict::Violated) == 0);
}
