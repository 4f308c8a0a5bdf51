#include "fitt/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fitt/errors.hpp"

namespace fitt {

namespace {

using nlohmann::ordered_json;

struct Cursor {
  const std::string& s;
  int line;
  std::size_t pos = 0;

  int column() const { return static_cast<int>(pos) + 1; }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_space() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, column());
  }
  long integer() {
    skip_space();
    const std::size_t start = pos;
    if (!done() && s[pos] == '-') ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (s[start] == '-' && pos == start + 1))
      fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }
  std::string name() {
    skip_space();
    const std::size_t start = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                       s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }
  bool eat(char c) {
    skip_space();
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect_end() {
    skip_space();
    if (!done()) fail("trailing characters");
  }
};

// key: rest-of-line pairs, remembering line numbers; '#' starts a comment
std::vector<std::pair<std::string, Cursor>> key_lines(const std::string& text,
                                                      std::vector<std::string>& storage) {
  storage.clear();
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) storage.push_back(line);
  }
  std::vector<std::pair<std::string, Cursor>> out;
  for (std::size_t i = 0; i < storage.size(); ++i) {
    std::string& line = storage[i];
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected `key: value`", static_cast<int>(i) + 1, 1);
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
      key.pop_back();
    Cursor c{line, static_cast<int>(i) + 1, colon + 1};
    out.emplace_back(std::move(key), c);
  }
  return out;
}

Monomial parse_monomial(Cursor& c, const PolynomialRing& ring) {
  std::vector<std::pair<int, int>> pairs;
  for (;;) {
    c.skip_space();
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      const int col = c.column();
      const long v = c.integer();
      if (v != 1)
        throw ParseError("only the constant 1 is a monomial", c.line, col);
    } else {
      const int col = c.column();
      const std::string var = c.name();
      const int index = ring.var_index(var);
      if (index < 0)
        throw ParseError("unknown variable `" + var + "`", c.line, col);
      int exponent = 1;
      if (c.eat('^')) {
        const int ecol = c.column();
        const long e = c.integer();
        if (e < 0) throw ParseError("negative exponent", c.line, ecol);
        exponent = static_cast<int>(e);
      }
      pairs.emplace_back(index, exponent);
    }
    if (!c.eat('*')) break;
  }
  return Monomial::from_pairs(std::move(pairs));
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
  std::vector<std::string> storage;
  auto lines = key_lines(text, storage);
  std::optional<PolynomialRing> ring;
  std::optional<std::vector<Monomial>> gens;
  for (auto& [key, cursor] : lines) {
    Cursor c = cursor;
    if (key == "vars") {
      std::vector<std::string> names;
      c.skip_space();
      if (!c.done()) {
        do names.push_back(c.name());
        while (c.eat(','));
      }
      c.expect_end();
      if (names.empty()) c.fail("at least one variable required");
      ring = PolynomialRing(names);
    } else if (key == "gens") {
      if (!ring)
        throw ParseError("`gens` before `vars`", c.line, 1);
      std::vector<Monomial> list;
      c.skip_space();
      if (!c.done()) {
        do list.push_back(parse_monomial(c, *ring));
        while (c.eat(','));
      }
      c.expect_end();
      gens = std::move(list);
    } else {
      throw ParseError("unknown key `" + key + "`", c.line, 1);
    }
  }
  if (!ring) throw ParseError("missing `vars` line", 1, 1);
  if (!gens) throw ParseError("missing `gens` line", 1, 1);
  return MonomialIdeal(*ring, std::move(*gens));
}

Graph parse_graph(const std::string& text) {
  std::vector<std::string> storage;
  auto lines = key_lines(text, storage);
  std::optional<int> vertices;
  std::optional<std::vector<std::pair<int, int>>> edges;
  for (auto& [key, cursor] : lines) {
    Cursor c = cursor;
    if (key == "vertices") {
      const int col = c.column();
      const long n = c.integer();
      c.expect_end();
      if (n < 1 || n > 31)
        throw ParseError("vertex count out of range", c.line, col);
      vertices = static_cast<int>(n);
    } else if (key == "edges") {
      if (!vertices) throw ParseError("`edges` before `vertices`", c.line, 1);
      std::vector<std::pair<int, int>> list;
      c.skip_space();
      if (!c.done()) {
        do {
          const int col = c.column();
          const long a = c.integer();
          if (!c.eat('-')) c.fail("expected `-` in edge");
          const long b = c.integer();
          if (a < 1 || b < 1 || a > *vertices || b > *vertices)
            throw ParseError("edge endpoint out of range", c.line, col);
          list.emplace_back(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
        } while (c.eat(','));
      }
      c.expect_end();
      edges = std::move(list);
    } else {
      throw ParseError("unknown key `" + key + "`", c.line, 1);
    }
  }
  if (!vertices) throw ParseError("missing `vertices` line", 1, 1);
  if (!edges) throw ParseError("missing `edges` line", 1, 1);
  try {
    return Graph::from_edges(*vertices, std::move(*edges));
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

ParsedSemigroup parse_semigroup(const std::string& text) {
  std::vector<std::string> storage;
  auto lines = key_lines(text, storage);
  std::optional<std::vector<long>> gens;
  std::optional<std::vector<long>> ideal_gens;
  for (auto& [key, cursor] : lines) {
    Cursor c = cursor;
    std::vector<long> list;
    c.skip_space();
    if (!c.done()) {
      do list.push_back(c.integer());
      while (c.eat(','));
    }
    c.expect_end();
    if (key == "gens")
      gens = std::move(list);
    else if (key == "ideal")
      ideal_gens = std::move(list);
    else
      throw ParseError("unknown key `" + key + "`", c.line, 1);
  }
  if (!gens) throw ParseError("missing `gens` line", 1, 1);
  NumericalSemigroup s = [&] {
    try {
      return NumericalSemigroup::from_generators(*gens);
    } catch (const PreconditionViolated& e) {
      throw ParseError(e.what(), 1, 1);
    }
  }();
  ParsedSemigroup out{std::move(s), std::nullopt};
  if (ideal_gens) out.ideal = RelativeIdeal(out.s, std::move(*ideal_gens));
  return out;
}

std::vector<long> parse_integer_list(const std::string& text) {
  Cursor c{text, 1, 0};
  std::vector<long> out;
  c.skip_space();
  if (!c.done()) {
    do out.push_back(c.integer());
    while (c.eat(','));
  }
  c.expect_end();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file `" + path + "`", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

ordered_json gens_array(const MonomialIdeal& ideal) {
  ordered_json a = ordered_json::array();
  for (const Monomial& g : ideal.gens()) a.push_back(g.str(ideal.ring()));
  return a;
}

ordered_json long_array(const std::vector<long>& xs) {
  ordered_json a = ordered_json::array();
  for (long x : xs) a.push_back(x);
  return a;
}

ordered_json check_obj(const CheckResult& c) {
  ordered_json o;
  o["statement"] = c.statement;
  o["instance"] = c.instance;
  o["pass"] = c.pass;
  if (!c.pass) o["witness"] = c.witness;
  return o;
}

}  // namespace

std::string ideal_json(const MonomialIdeal& ideal, int j,
                       const MonomialIdeal& fitting) {
  ordered_json o;
  o["ideal"] = gens_array(ideal);
  o["j"] = j;
  o["fitting"] = gens_array(fitting);
  return o.dump(2);
}

std::string edge_radical_json(const Graph& g, int j, const MonomialIdeal& value,
                              const std::vector<int>& support_vertices) {
  ordered_json o;
  o["vertices"] = g.n;
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : g.edges)
    edges.push_back(std::to_string(a + 1) + "-" + std::to_string(b + 1));
  o["edges"] = edges;
  o["j"] = j;
  o["radical_fitting"] = gens_array(value);
  ordered_json sup = ordered_json::array();
  for (int v : support_vertices) sup.push_back(v + 1);
  o["support_vertices"] = sup;
  return o.dump(2);
}

std::string classification_json(const MonomialIdeal& ideal, int j,
                                const TriEquivalence& tri) {
  ordered_json o;
  o["ideal"] = gens_array(ideal);
  o["j"] = j;
  o["fitting_equals_ideal"] = tri.fitting_equals_ideal;
  o["fitting_squarefree"] = tri.fitting_squarefree;
  o["structural"] = tri.structural;
  o["consistent"] = tri.consistent();
  return o.dump(2);
}

std::string report_json(const FittingReport& report) {
  ordered_json o;
  o["name"] = report.name;
  o["instance"] = report.instance;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) checks.push_back(check_obj(c));
  o["checks"] = checks;
  o["notes"] = report.notes;
  o["pass"] = report.pass();
  return o.dump(2);
}

std::string suite_json(const SuiteReport& report, const SuiteConfig& cfg) {
  ordered_json o;
  o["suite"] = report.suite;
  ordered_json config;
  config["max_vars"] = cfg.max_vars;
  config["max_gens"] = cfg.max_gens;
  config["max_degree"] = cfg.max_degree;
  config["count"] = cfg.count;
  config["graph_vertex_bound"] = cfg.graph_vertex_bound;
  config["max_genus"] = cfg.max_genus;
  config["seed"] = cfg.seed;
  config["max_minors"] = cfg.max_minors;
  config["max_nodes"] = cfg.max_nodes;
  config["oracle_minor_budget"] = cfg.oracle_minor_budget;
  o["config"] = config;
  o["instances"] = report.instances;
  o["checks"] = report.checks;
  ordered_json failing = ordered_json::array();
  for (const auto& c : report.failing) failing.push_back(check_obj(c));
  o["failing"] = failing;
  o["notes"] = report.notes;
  o["pass"] = report.pass();
  return o.dump(2);
}

std::string semigroup_json(const NumericalSemigroup& s) {
  ordered_json o;
  o["generators"] = long_array(s.minimal_generators());
  o["multiplicity"] = s.multiplicity();
  o["frobenius"] = s.frobenius();
  o["conductor"] = s.conductor();
  o["genus"] = s.genus();
  o["gaps"] = long_array(s.gaps());
  o["apery"] = long_array(s.apery(s.multiplicity()));
  o["pseudo_frobenius"] = long_array(s.pseudo_frobenius());
  o["type"] = s.type();
  o["symmetric"] = s.is_symmetric();
  return o.dump(2);
}

std::string fitting1_json(const RelativeIdeal& ideal, const Fitting1Result& r,
                          const RelativeIdeal& trace) {
  ordered_json o;
  o["semigroup"] = long_array(ideal.semigroup().minimal_generators());
  o["ideal"] = long_array(ideal.gens());
  o["fitt1"] = long_array(r.fitting.gens());
  o["trace"] = long_array(trace.gens());
  o["equals_target"] = r.equals_target;
  o["truncation_bound"] = r.truncation_bound;
  return o.dump(2);
}

std::string search_json(const CanonicalSearchReport& report) {
  ordered_json o;
  o["max_genus"] = report.max_genus;
  o["visited"] = report.visited;
  o["gorenstein_skipped"] = report.gorenstein_skipped;
  o["analysed"] = report.analysed;
  ordered_json per_genus;
  for (const auto& [g, n] : report.per_genus)
    per_genus[std::to_string(g)] = n;
  o["per_genus"] = per_genus;
  ordered_json hits = ordered_json::array();
  for (const auto& h : report.hits) {
    ordered_json hit;
    hit["semigroup"] = long_array(h.s.minimal_generators());
    hit["type"] = h.s.type();
    hit["omega_gens"] = long_array(h.omega.gens());
    hit["fitt1_gens"] = long_array(h.fitting.gens());
    hit["shift"] = h.shift;
    hits.push_back(hit);
  }
  o["hits"] = hits;
  ordered_json skips = ordered_json::array();
  for (const auto& s : report.budget_skips) skips.push_back(s.str());
  o["budget_skips"] = skips;
  o["type2_checked"] = report.type2_checked;
  ordered_json violations = ordered_json::array();
  for (const auto& s : report.type2_violations) violations.push_back(s.str());
  o["type2_violations"] = violations;
  ordered_json mismatches = ordered_json::array();
  for (const auto& s : report.radical_mismatches) mismatches.push_back(s.str());
  o["radical_mismatches"] = mismatches;
  return o.dump(2);
}

}  // namespace fitt
