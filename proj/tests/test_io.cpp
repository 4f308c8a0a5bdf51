#include <doctest.h>

#include <string>

#include "fitt/errors.hpp"
#include "fitt/io.hpp"

using namespace fitt;

TEST_CASE("ideal files") {
  MonomialIdeal i = parse_ideal("# comment\nvars: x, y, z\n\ngens: x*y, x^2 # tail\n");
  CHECK(i.ring().var_count() == 3);
  CHECK(i.mu() == 2);
  CHECK(i.contains(Monomial::var(0).pow(2)));

  CHECK(parse_ideal("vars: x\ngens:").is_zero());
  CHECK(parse_ideal("vars: x\ngens: 1").is_unit());
  CHECK(parse_ideal("vars: x\ngens: x, 1").is_unit());
}

TEST_CASE("ideal file errors") {
  CHECK_THROWS_AS((void)parse_ideal("gens: x\nvars: x"), ParseError);
  CHECK_THROWS_AS((void)parse_ideal("vars: x\ngens: y"), ParseError);
  CHECK_THROWS_AS((void)parse_ideal("vars: x\ngens: 2"), ParseError);
  CHECK_THROWS_AS((void)parse_ideal("vars: x\ngens: x^-2"), ParseError);
  CHECK_THROWS_AS((void)parse_ideal("vars: x\ngens: x y"), ParseError);
  CHECK_THROWS_AS((void)parse_ideal("vars: x"), ParseError);
  CHECK_THROWS_AS((void)parse_ideal("vars: x\nspam: 1"), ParseError);
  CHECK_THROWS_AS((void)parse_ideal("no colon here"), ParseError);

  try {
    parse_ideal("vars: x\ngens: y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
    CHECK(std::string(e.what()).find("(line 2, column") != std::string::npos);
  }
}

TEST_CASE("graph files") {
  Graph g = parse_graph("vertices: 4\nedges: 1-2, 2-3, 3-4, 1-4\n");
  CHECK(g.n == 4);
  CHECK(g.edges == Graph::cycle(4).edges);

  CHECK(parse_graph("vertices: 3\nedges:").m() == 0);

  CHECK_THROWS_AS((void)parse_graph("edges: 1-2"), ParseError);
  CHECK_THROWS_AS((void)parse_graph("vertices: 2\nedges: 1-3"), ParseError);
  CHECK_THROWS_AS((void)parse_graph("vertices: 2\nedges: 1,2"), ParseError);
  CHECK_THROWS_AS((void)parse_graph("vertices: 40\nedges:"), ParseError);
  CHECK_THROWS_AS((void)parse_graph("vertices: 2\nedges: 1-1"), ParseError);
}

TEST_CASE("semigroup files") {
  ParsedSemigroup plain = parse_semigroup("gens: 4, 5");
  CHECK(plain.s.frobenius() == 11);
  CHECK_FALSE(plain.ideal.has_value());

  ParsedSemigroup with_ideal = parse_semigroup("gens: 4, 5\nideal: 12, 13");
  REQUIRE(with_ideal.ideal.has_value());
  CHECK(with_ideal.ideal->gens() == std::vector<long>{12, 13});

  CHECK_THROWS_AS((void)parse_semigroup("gens: 4, 6"), ParseError);
  CHECK_THROWS_AS((void)parse_semigroup("ideal: 3"), ParseError);
  CHECK_THROWS_AS((void)parse_semigroup("gens: 4, 5\nfoo: 1"), ParseError);
}

TEST_CASE("integer lists") {
  CHECK(parse_integer_list("3, 5, 7") == std::vector<long>{3, 5, 7});
  CHECK(parse_integer_list("  -2 ") == std::vector<long>{-2});
  CHECK(parse_integer_list("").empty());
  CHECK_THROWS_AS((void)parse_integer_list("4 5"), ParseError);
  CHECK_THROWS_AS((void)parse_integer_list("a"), ParseError);
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS((void)read_file("/no/such/file.sorry"), ParseError);
}

TEST_CASE("json rendering") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({4, 5});
  std::string a = semigroup_json(s);
  std::string b = semigroup_json(s);
  CHECK(a == b);
  CHECK(a.find("\"frobenius\": 11") != std::string::npos);
  CHECK(a.find("\"symmetric\": true") != std::string::npos);
  CHECK(a.find("\"apery\"") != std::string::npos);

  MonomialIdeal i = parse_ideal("vars: x, y\ngens: x, y");
  std::string js = ideal_json(i, 1, i);
  CHECK(js.find("\"j\": 1") != std::string::npos);
  CHECK(js.find("\"fitting\"") != std::string::npos);

  TriEquivalence tri{true, true, true};
  std::string cs = classification_json(i, 2, tri);
  CHECK(cs.find("\"consistent\": true") != std::string::npos);

  FittingReport rep;
  rep.name = "demo";
  rep.instance = "(x)";
  rep.check("always true", true, "");
  std::string rs = report_json(rep);
  CHECK(rs.find("\"pass\": true") != std::string::npos);

  Graph g = Graph::cycle(4);
  std::string es = edge_radical_json(g, 2, edge_ideal(g), {0, 1, 2, 3});
  CHECK(es.find("\"1-2\"") != std::string::npos);
  CHECK(es.find("\"support_vertices\": [") != std::string::npos);
}
