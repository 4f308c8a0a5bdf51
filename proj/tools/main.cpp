#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fitt/budget.hpp"
#include "fitt/errors.hpp"
#include "fitt/fitting.hpp"
#include "fitt/graph.hpp"
#include "fitt/io.hpp"
#include "fitt/relative_ideal.hpp"
#include "fitt/semigroup.hpp"
#include "fitt/series.hpp"
#include "fitt/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitBudget = 3;

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_failures(const fitt::SuiteReport& report) {
  for (const auto& c : report.failing) {
    std::cout << "FAIL " << c.statement << "\n";
    std::cout << "  instance: " << c.instance << "\n";
    if (!c.witness.empty()) std::cout << "  witness: " << c.witness << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fitting ideals of monomial ideals and numerical semigroup rings"};
  app.require_subcommand(1);

  std::int64_t budget = -1;
  std::int64_t max_minors = -1;
  if (const char* env = std::getenv("FITT_BUDGET")) {
    try {
      budget = std::stoll(env);
    } catch (const std::exception&) {
      std::cerr << "FITT_BUDGET is not an integer: " << env << "\n";
      return kExitUsage;
    }
  }
  app.add_option("--budget", budget,
                 "cap on minor enumeration and search nodes (default FITT_BUDGET)");

  std::string ideal_path, graph_path, suite_name, gens_text, ideal_text;
  int j = 0;
  bool as_json = false;
  std::uint64_t seed = 414243;
  int count = 200;
  int max_genus = 8;

  CLI::App* compute = app.add_subcommand("compute", "Fitting ideal of a monomial ideal");
  compute->add_option("--ideal", ideal_path, "ideal file")->required();
  compute->add_option("--j", j, "Fitting index")->required();
  compute->add_flag("--json", as_json, "JSON output");
  compute->add_option("--max-minors", max_minors, "minor enumeration cap");

  CLI::App* edge = app.add_subcommand("edge-radical",
                                      "radical Fitting ideal of an edge ideal");
  edge->add_option("--graph", graph_path, "graph file")->required();
  edge->add_option("--j", j, "Fitting index")->required();
  edge->add_flag("--json", as_json, "JSON output");

  CLI::App* classify = app.add_subcommand(
      "classify", "equality, squarefreeness, and structure at Fitt_{j-1}");
  classify->add_option("--ideal", ideal_path, "ideal file")->required();
  classify->add_option("--j", j, "index with grade(I) >= j")->required();
  classify->add_flag("--json", as_json, "JSON output");
  classify->add_option("--max-minors", max_minors, "minor enumeration cap");

  CLI::App* verify = app.add_subcommand("verify", "run a named check suite");
  std::string names;
  for (const auto& n : fitt::suite_names()) names += (names.empty() ? "" : ", ") + n;
  verify->add_option("--suite", suite_name, "one of: " + names)->required();
  verify->add_option("--seed", seed, "sample seed");
  verify->add_option("--count", count, "sample size");
  verify->add_option("--max-genus", max_genus, "genus bound for semigroup sweeps");
  verify->add_flag("--json", as_json, "JSON output");
  verify->add_option("--max-minors", max_minors, "minor enumeration cap");

  CLI::App* sg = app.add_subcommand("sg", "numerical semigroup commands");
  sg->require_subcommand(1);
  CLI::App* sg_info = sg->add_subcommand("info", "invariants of a semigroup");
  sg_info->add_option("--gens", gens_text, "generators, e.g. \"4,5\"")->required();
  sg_info->add_flag("--json", as_json, "JSON output");
  CLI::App* sg_fitt1 = sg->add_subcommand(
      "fitt1", "first Fitting ideal of a monomial ideal in K[[t^S]]");
  sg_fitt1->add_option("--gens", gens_text, "semigroup generators")->required();
  sg_fitt1->add_option("--ideal", ideal_text, "ideal generators, e.g. \"12,13\"")
      ->required();
  sg_fitt1->add_flag("--json", as_json, "JSON output");
  CLI::App* sg_search = sg->add_subcommand(
      "search", "canonical ideals fixed by Fitt_1 over non-Gorenstein semigroups");
  sg_search->add_option("--max-genus", max_genus, "genus bound");
  sg_search->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (budget >= 0) {
    fitt::default_budget().max_minors = budget;
    fitt::default_budget().max_search_nodes = budget;
  }
  if (max_minors >= 0) fitt::default_budget().max_minors = max_minors;

  try {
    if (compute->parsed()) {
      fitt::MonomialIdeal ideal = fitt::parse_ideal(fitt::read_file(ideal_path));
      fitt::MonomialIdeal fitting =
          fitt::fitting_ideal(ideal, j, fitt::default_budget().max_minors);
      if (as_json)
        std::cout << fitt::ideal_json(ideal, j, fitting) << "\n";
      else
        std::cout << "Fitt_" << j << " = " << fitting.str() << "\n";
      return kExitOk;
    }

    if (edge->parsed()) {
      fitt::Graph g = fitt::parse_graph(fitt::read_file(graph_path));
      fitt::MonomialIdeal value =
          fitt::radical_fitting_formula(g, j, fitt::default_budget().max_search_nodes);
      std::vector<int> support = fitt::radical_support_vertices(g, j);
      if (as_json) {
        std::cout << fitt::edge_radical_json(g, j, value, support) << "\n";
      } else {
        std::cout << "radical Fitt_" << j << " = " << value.str() << "\n";
        std::cout << "single-variable members:";
        if (support.empty()) std::cout << " none";
        for (int v : support) std::cout << " x" << (v + 1);
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (classify->parsed()) {
      fitt::MonomialIdeal ideal = fitt::parse_ideal(fitt::read_file(ideal_path));
      fitt::TriEquivalence tri = fitt::fitting_equality_classification(
          ideal, j, fitt::default_budget().max_minors);
      if (as_json) {
        std::cout << fitt::classification_json(ideal, j, tri) << "\n";
      } else {
        std::cout << "Fitt_" << (j - 1) << " equals the ideal: "
                  << yesno(tri.fitting_equals_ideal) << "\n";
        std::cout << "Fitt_" << (j - 1) << " squarefree: "
                  << yesno(tri.fitting_squarefree) << "\n";
        std::cout << "structural condition: " << yesno(tri.structural) << "\n";
        std::cout << "consistent: " << yesno(tri.consistent()) << "\n";
      }
      return tri.consistent() ? kExitOk : kExitCounterexample;
    }

    if (verify->parsed()) {
      fitt::SuiteConfig cfg;
      cfg.seed = seed;
      cfg.count = count;
      cfg.max_genus = max_genus;
      cfg.max_minors = fitt::default_budget().max_minors;
      cfg.max_nodes = fitt::default_budget().max_search_nodes;
      fitt::SuiteReport report = fitt::run_suite(suite_name, cfg);
      if (as_json) {
        std::cout << fitt::suite_json(report, cfg) << "\n";
      } else {
        std::cout << "suite " << report.suite << ": " << report.checks << " checks over "
                  << report.instances << " instances, " << report.failing.size()
                  << " failing\n";
        for (const auto& n : report.notes) std::cout << "note: " << n << "\n";
        print_failures(report);
        std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
      }
      return report.pass() ? kExitOk : kExitCounterexample;
    }

    if (sg_info->parsed()) {
      fitt::NumericalSemigroup s =
          fitt::NumericalSemigroup::from_generators(fitt::parse_integer_list(gens_text));
      if (as_json) {
        std::cout << fitt::semigroup_json(s) << "\n";
      } else {
        std::cout << "S = " << s.str() << "\n";
        std::cout << "multiplicity " << s.multiplicity() << ", Frobenius "
                  << s.frobenius() << ", conductor " << s.conductor() << ", genus "
                  << s.genus() << "\n";
        std::cout << "gaps:";
        for (long g : s.gaps()) std::cout << " " << g;
        std::cout << "\npseudo-Frobenius:";
        for (long g : s.pseudo_frobenius()) std::cout << " " << g;
        std::cout << "\ntype " << s.type() << ", symmetric "
                  << yesno(s.is_symmetric()) << "\n";
      }
      return kExitOk;
    }

    if (sg_fitt1->parsed()) {
      fitt::NumericalSemigroup s =
          fitt::NumericalSemigroup::from_generators(fitt::parse_integer_list(gens_text));
      fitt::RelativeIdeal ideal(s, fitt::parse_integer_list(ideal_text));
      fitt::RelativeIdeal honest = fitt::shift_into_ring(ideal);
      fitt::RelativeIdeal trace = fitt::rel_trace(honest);
      fitt::Fitting1Result res =
          fitt::fitting1_series(honest, trace, fitt::default_budget().max_search_nodes);
      if (as_json) {
        std::cout << fitt::fitting1_json(honest, res, trace) << "\n";
      } else {
        if (honest != ideal)
          std::cout << "shifted into the ring as " << honest.str() << "\n";
        std::cout << "Fitt_1 = " << res.fitting.str() << "\n";
        std::cout << "trace  = " << trace.str() << "\n";
        std::cout << "Fitt_1 equals the trace: " << yesno(res.equals_target)
                  << " (truncation bound " << res.truncation_bound << ")\n";
      }
      return kExitOk;
    }

    if (sg_search->parsed()) {
      fitt::CanonicalSearchReport report = fitt::search_canonical_fixed_points(
          max_genus, fitt::default_budget().max_search_nodes);
      if (as_json) {
        std::cout << fitt::search_json(report) << "\n";
      } else {
        std::cout << "semigroups visited: " << report.visited << ", non-Gorenstein "
                  << "analysed: " << report.analysed << ", Gorenstein skipped: "
                  << report.gorenstein_skipped << "\n";
        std::cout << "fixed points found: " << report.hits.size() << "\n";
        for (const auto& h : report.hits)
          std::cout << "  " << h.s.str() << " omega " << h.omega.str() << " Fitt_1 "
                    << h.fitting.str() << " shift " << h.shift << "\n";
        std::cout << "type-2 semigroups checked: " << report.type2_checked
                  << ", violations: " << report.type2_violations.size() << "\n";
        std::cout << "radical agreement failures: " << report.radical_mismatches.size()
                  << "\n";
        if (!report.budget_skips.empty()) {
          std::cout << "skipped on budget:";
          for (const auto& s : report.budget_skips) std::cout << " " << s.str();
          std::cout << "\n";
        }
      }
      const bool clean = report.hits.empty() && report.type2_violations.empty() &&
                         report.radical_mismatches.empty();
      return clean ? kExitOk : kExitCounterexample;
    }
  } catch (const fitt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fitt::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const fitt::InsufficientBound& e) {
    std::cerr << "truncation bound insufficient: " << e.what() << "\n";
    return kExitBudget;
  } catch (const fitt::PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  return kExitUsage;
}
