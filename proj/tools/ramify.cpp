#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "ramify/properties.hpp"
#include "ramify/scenario.hpp"

namespace fs = std::filesystem;
using namespace ramify;

namespace {

int exit_code(const std::vector<ScenarioReport>& reports) {
  bool violated = false, failed = false;
  for (const auto& r : reports) {
    violated = violated || r.count(Verdict::Violated) > 0;
    failed = failed || r.failed();
  }
  return violated ? 2 : failed ? 1 : 0;
}

void emit(const std::vector<ScenarioReport>& reports, const std::string& format) {
  std::cout << (format == "structured" ? render_structured(reports) : render_text(reports));
}

// Results land in fixed slots, so output does not depend on the thread count.
std::vector<ScenarioReport> run_all(const std::vector<std::string>& files, const RunOptions& opt, unsigned jobs) {
  std::vector<ScenarioReport> out(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) out[i] = run_file(files[i], opt);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::max(1u, jobs); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramify: branch and critical loci of morphisms of affine schemes"};
  app.require_subcommand(1);
  RunOptions opt;
  std::string format = "text";
  unsigned jobs = 1;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget-degree", opt.max_degree, "degree cap for Groebner computations");
    sub->add_option("--budget-seconds", opt.seconds, "time limit per task");
    sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };

  std::string file;
  auto* run = app.add_subcommand("run", "run one scenario file");
  run->add_option("file", file)->required();
  common(run);

  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "run every .plc file in a directory");
  corpus->add_option("dir", dir)->required();
  corpus->add_option("--jobs", jobs, "scenarios evaluated concurrently");
  common(corpus);

  std::string gb_file, ideal_name;
  auto* gb = app.add_subcommand("gb", "print the reduced Groebner basis of a ring's ideal");
  gb->add_option("file", gb_file)->required();
  gb->add_option("--ideal", ideal_name, "ring name")->required();

  std::uint64_t seed = 1;
  std::size_t cases = 100;
  auto* props = app.add_subcommand("props", "run the randomized property suites");
  props->add_option("--seed", seed);
  props->add_option("--cases", cases);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      std::vector<ScenarioReport> reports{run_file(file, opt)};
      emit(reports, format);
      if (!reports[0].error.empty()) std::cerr << reports[0].error << "\n";
      return exit_code(reports);
    }
    if (*corpus) {
      if (!fs::is_directory(dir)) {
        std::cerr << "not a directory: " << dir << "\n";
        return 1;
      }
      std::vector<std::string> files;
      for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".plc") files.push_back(e.path().string());
      std::sort(files.begin(), files.end());
      auto reports = run_all(files, opt, jobs);
      emit(reports, format);
      return exit_code(reports);
    }
    if (*gb) {
      std::ifstream in(gb_file);
      if (!in) {
        std::cerr << "cannot read " << gb_file << "\n";
        return 1;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      Scenario s = parse_scenario(buf.str());
      const RingDecl* R = s.ring(ideal_name);
      if (!R) {
        std::cerr << "unknown ring " << ideal_name << "\n";
        return 1;
      }
      for (const auto& g : R->ideal().groebner()) std::cout << g.str() << "\n";
      return 0;
    }
    if (*props) {
      bool ok = true;
      for (const auto& r : run_properties(seed, cases)) {
        std::cout << r.name << ": " << r.cases << " cases, " << r.failures << " failures";
        if (!r.first_failure.empty()) std::cout << " (first: " << r.first_failure << ")";
        std::cout << "\n";
        ok = ok && r.failures == 0;
      }
      return ok ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
