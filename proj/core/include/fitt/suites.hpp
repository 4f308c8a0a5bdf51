#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fitt/budget.hpp"
#include "fitt/fitting.hpp"

namespace fitt {

struct SuiteConfig {
  int max_vars = 4;
  int max_gens = 5;
  int max_degree = 4;
  int count = 200;
  int graph_vertex_bound = 5;
  int max_genus = 8;
  std::uint64_t seed = 414243;
  std::int64_t max_minors = default_budget().max_minors;
  std::int64_t max_nodes = default_budget().max_search_nodes;
  // nominal minor count above which the sweep swaps the brute-force oracle
  // for the localization oracle plus certificates
  std::int64_t oracle_minor_budget = 8000000;
};

struct SuiteReport {
  std::string suite;
  long instances = 0;
  long checks = 0;
  std::vector<CheckResult> failing;
  std::vector<std::string> notes;

  bool pass() const { return failing.empty(); }
  void absorb(const FittingReport& r);
  void note(const std::string& text) { notes.push_back(text); }
};

// the shared seeded sample used by the containment, radical, invariance,
// structure, and fixed-point sweeps
std::vector<MonomialIdeal> sample_ideals(const SuiteConfig& cfg);

SuiteReport run_containment_suite(const SuiteConfig& cfg);
SuiteReport run_radical_suite(const SuiteConfig& cfg);
SuiteReport run_presentation_invariance_suite(const SuiteConfig& cfg);
SuiteReport run_tri_equivalence_suite(const SuiteConfig& cfg);
SuiteReport run_structure_suite(const SuiteConfig& cfg);
SuiteReport run_edge_formula_suite(const SuiteConfig& cfg);
SuiteReport run_complete_graph_suite(const SuiteConfig& cfg);
SuiteReport run_semigroup_suite(const SuiteConfig& cfg);
SuiteReport run_semigroup_examples_suite(const SuiteConfig& cfg);

// dispatch by suite name; throws PreconditionViolated for unknown names
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<std::string> suite_names();

}  // namespace fitt
