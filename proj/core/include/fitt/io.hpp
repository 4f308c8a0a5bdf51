#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fitt/graph.hpp"
#include "fitt/monomial_ideal.hpp"
#include "fitt/series.hpp"
#include "fitt/suites.hpp"

namespace fitt {

// `vars: x, y, z` then `gens: x*y, x^2*z`; blank lines and # comments allowed
MonomialIdeal parse_ideal(const std::string& text);
// `vertices: 4` then `edges: 1-2, 2-3` (1-based endpoints)
Graph parse_graph(const std::string& text);

struct ParsedSemigroup {
  NumericalSemigroup s;
  std::optional<RelativeIdeal> ideal;
};
// `gens: 4, 5` and optional `ideal: 12, 13`
ParsedSemigroup parse_semigroup(const std::string& text);

std::vector<long> parse_integer_list(const std::string& text);

std::string read_file(const std::string& path);

// deterministic JSON: fixed key order, two-space indent, no floats
std::string ideal_json(const MonomialIdeal& ideal, int j,
                       const MonomialIdeal& fitting);
std::string edge_radical_json(const Graph& g, int j, const MonomialIdeal& value,
                              const std::vector<int>& support_vertices);
std::string classification_json(const MonomialIdeal& ideal, int j,
                                const TriEquivalence& tri);
std::string report_json(const FittingReport& report);
std::string suite_json(const SuiteReport& report, const SuiteConfig& cfg);
std::string semigroup_json(const NumericalSemigroup& s);
std::string fitting1_json(const RelativeIdeal& ideal, const Fitting1Result& r,
                          const RelativeIdeal& trace);
std::string search_json(const CanonicalSearchReport& report);

}  // namespace fitt
