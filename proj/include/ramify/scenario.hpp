#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramify/budget.hpp"
#include "ramify/error.hpp"
#include "ramify/verify.hpp"

namespace ramify {

class ScenarioError : public Error {
 public:
  ScenarioError(std::size_t line, std::size_t col, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + what), line_(line), col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_, col_;
};

struct TaskSpec {
  std::string name;
  std::vector<std::string> args;  // whitespace-free
  std::size_t line = 0;
  std::string str() const;
  bool operator==(const TaskSpec& o) const { return name == o.name && args == o.args; }
};

struct Scenario {
  Field field = Field::rationals();
  std::vector<RingDecl> rings;
  std::vector<MorphismDecl> maps;
  std::vector<std::pair<std::string, std::string>> assertions;  // (name, fact) in file order
  std::vector<std::string> points;
  std::optional<Budget> budget;
  std::vector<TaskSpec> tasks;

  const RingDecl* ring(const std::string& name) const;
  const MorphismDecl* map(const std::string& name) const;
  Assertions assertion_set() const;
  std::string to_source() const;
  // Structural equality: names, variables, printed generators and images, tasks.
  bool operator==(const Scenario& o) const;
};

Scenario parse_scenario(const std::string& src);

struct ScenarioReport {
  std::string name;
  std::vector<Report> tasks;
  std::string error;  // parse or setup failure; tasks is then empty
  bool failed() const;
  std::size_t count(Verdict v) const;
};

struct RunOptions {
  std::optional<std::uint64_t> max_degree;
  std::optional<double> seconds;
};

Report run_task(const Scenario& s, const TaskSpec& t);
ScenarioReport run_scenario(const Scenario& s, const std::string& name, const RunOptions& opt = {});
ScenarioReport run_file(const std::string& path, const RunOptions& opt = {});

std::string render_text(const std::vector<ScenarioReport>& reports);
std::string render_structured(const std::vector<ScenarioReport>& reports);

}  // namespace ramify
