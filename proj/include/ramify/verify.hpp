#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ramify/loci.hpp"

namespace ramify {

// refuted: the clause is a statement already known to fail on a fixed example;
// it never raises the alarm. computed: plain computation, no theorem attached.
enum class Verdict { Verified, Violated, Inapplicable, Indeterminate, Refuted, Computed };
enum class Status { CheckedTrue, CheckedFalse, Asserted, Unasserted, Indeterminate };
enum class Tri { Yes, No, Indeterminate };

std::string to_string(Verdict v);
std::string to_string(Status s);
std::string to_string(Tri t);

struct Hypothesis {
  std::string name;
  Status status = Status::Indeterminate;
  std::string note;
};

struct Clause {
  std::string name;
  std::string statement;
  std::vector<std::string> hypotheses;  // names from the report's list
  std::string lhs, rhs;
  Verdict verdict = Verdict::Indeterminate;
  std::string note;
};

using Value = std::variant<long long, std::string, std::vector<std::string>>;

struct Report {
  std::string task;
  std::string theorem;  // empty for plain computations
  std::vector<Hypothesis> hypotheses;
  std::vector<Clause> clauses;
  std::vector<std::pair<std::string, Value>> values;
  std::string error;    // budget exhaustion and similar, reported in place
  bool failed = false;  // a hard error (not a budget) stopped the task

  Verdict verdict() const;
  void add(std::string key, Value v) { values.emplace_back(std::move(key), std::move(v)); }
  const Hypothesis* hypothesis(const std::string& name) const;
};

// Facts about named rings and maps that are asserted rather than checked.
struct Assertions {
  std::map<std::string, std::set<std::string>> facts;  // name -> {domain, finite, normal, lci}
  std::set<std::string> points;                         // rings with a designated origin
  Status get(const std::string& name, const std::string& fact) const;
  bool has_point(const RingDecl& r) const { return points.count(r.name()) > 0; }
};

std::vector<std::string> ideal_strings(const Ideal& I);

struct DciResult {
  Tri is_dci = Tri::Indeterminate;
  std::string witness;
};
DciResult check_dci_global(const PresentedModule& M);
DciResult check_dci_at_origin(const PresentedModule& M);

// Smoothness defect data at the origin of a ring.
struct DefectData {
  int ed = 0, d = 0, delta = 0, eta = 0;
};
DefectData defects_at_origin(const RingDecl& ring);

// Sufficient (S2) test for modules over a polynomial ring.
Tri serre_s2_sufficient(const PresentedModule& M);

Report check_dci(const PresentedModule& M, const std::string& label, const Assertions& a);
Report check_gamma_zero(const MorphismDecl& m, const Assertions& a);
Report check_duality(const MorphismDecl& m, std::size_t max_i, const Assertions& a);
Report check_height_bounds(const PresentedModule& M, const std::string& label, const Assertions& a);
Report check_purity_critical(const MorphismDecl& m, std::size_t max_i, const Assertions& a);
Report check_purity_branch(const MorphismDecl& m, std::size_t max_i, const Assertions& a);
Report check_composition_dci(const MorphismDecl& m, const Assertions& a);
Report check_cutkosky(const MorphismDecl& m, const Assertions& a);
Report check_locally_free(const PresentedModule& M, const std::string& label, const Assertions& a);
// Compares the imperfection module with the pullback of the torsion of Omega_Y along f.
Report check_gamma_pullback(const MorphismDecl& m, const Poly& f, const Assertions& a);

}  // namespace ramify
