#include <doctest.h>

#include <algorithm>

#include "fitt/errors.hpp"
#include "fitt/fitting.hpp"
#include "fitt/graph.hpp"

using namespace fitt;

namespace {
MonomialIdeal variable_ideal(const PolynomialRing& ring, int n) {
  std::vector<Monomial> vars;
  for (int v = 0; v < n; ++v) vars.push_back(Monomial::var(v));
  return MonomialIdeal(ring, vars);
}
}  // namespace

TEST_CASE("graph construction") {
  Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}, {1, 0}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(1, 2));

  CHECK(Graph::complete(4).m() == 6);
  CHECK(Graph::cycle(5).m() == 5);
  CHECK(Graph::path(4).m() == 3);
  CHECK(Graph::star(3).m() == 3);

  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), PreconditionViolated);
  CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), PreconditionViolated);
  CHECK_THROWS_AS(Graph::from_edges(40, {}), PreconditionViolated);
}

TEST_CASE("vertex and edge neighbourhoods") {
  Graph p4 = Graph::path(4);
  CHECK(p4.neighbour_mask(0) == 0b0010u);
  CHECK(p4.neighbour_mask(1) == 0b0101u);
  // E(v): edges missing v but touching a neighbour of v
  CHECK(p4.edge_neighbourhood(0) == std::vector<int>{1});
  CHECK(p4.edge_neighbourhood(1) == std::vector<int>{2});
  CHECK(p4.edge_neighbourhood(2) == std::vector<int>{0});
  CHECK(p4.edge_neighbourhood(3) == std::vector<int>{1});

  Graph star = Graph::star(3);
  CHECK(star.edge_neighbourhood(0).empty());
  CHECK(star.edge_neighbourhood(1).size() == 2);
}

TEST_CASE("covers and independence") {
  CHECK(Graph::path(4).cover_number() == 2);
  CHECK(Graph::cycle(4).cover_number() == 2);
  CHECK(Graph::complete(5).cover_number() == 4);
  CHECK(Graph::star(3).cover_number() == 1);

  Graph c4 = Graph::cycle(4);
  CHECK(c4.is_independent(0b0101u));
  CHECK_FALSE(c4.is_independent(0b0011u));
  CHECK(c4.induced_edge_count(0b0111u) == 2);
}

TEST_CASE("admissible covers") {
  Graph p3 = Graph::path(3);
  // both candidate picks produce the same tagged set {0,1,2}
  CHECK(admissible_covers(p3, {0, 2}, 2).empty());
  CHECK_FALSE(has_admissible_cover(p3, {0, 2}, 2));

  auto single = admissible_covers(p3, {0}, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].vertices == std::vector<int>{0});
  CHECK(single[0].blocks == std::vector<std::vector<int>>{{1}});
  CHECK(single[0].size() == 1);

  CHECK(admissible_covers(p3, {}, 0).size() == 1);
  CHECK(admissible_covers(p3, {}, 1).empty());
  CHECK(admissible_covers(p3, {0, 2}, 1).empty());  // blocks must be nonempty
  CHECK_THROWS_AS((void)admissible_covers(p3, {0, 0}, 2), PreconditionViolated);

  Graph c4 = Graph::cycle(4);
  CHECK(has_admissible_cover(c4, {0}, 2));
  CHECK_FALSE(has_admissible_cover(c4, {0}, 3));
}

TEST_CASE("radical formula on paths") {
  Graph p4 = Graph::path(4);
  PolynomialRing ring = edge_ideal(p4).ring();
  CHECK(radical_fitting_formula(p4, 0).is_zero());
  CHECK(radical_fitting_formula(p4, 1) == edge_ideal(p4));
  CHECK(radical_fitting_formula(p4, 2) == variable_ideal(ring, 4));
  CHECK(radical_fitting_formula(p4, 3).is_unit());
  CHECK(radical_fitting_formula(p4, 9).is_unit());
  CHECK(full_support_threshold(p4) == 2);
}

TEST_CASE("radical formula matches minors") {
  for (const Graph& g : {Graph::path(4), Graph::cycle(4), Graph::star(3),
                         Graph::complete(4), Graph::path(5)}) {
    MonomialIdeal i = edge_ideal(g);
    for (int j = 0; j <= g.m(); ++j) {
      CHECK(radical_fitting_formula(g, j) == fitting_ideal(i, j).radical());
      CHECK(radical_fitting_formula(g, j) == radical_fitting_support(i, j));
    }
  }
}

TEST_CASE("star keeps its centre out") {
  Graph star = Graph::star(3);
  PolynomialRing ring = edge_ideal(star).ring();
  MonomialIdeal f2 = radical_fitting_formula(star, 2);
  CHECK(f2 == MonomialIdeal(ring, {Monomial::var(1), Monomial::var(2), Monomial::var(3)}));
  CHECK_FALSE(f2.contains(Monomial::var(0)));
  CHECK(full_support_threshold(star) == 3);
}

TEST_CASE("support vertices") {
  Graph p4 = Graph::path(4);
  CHECK(radical_support_vertices(p4, 1).empty());
  CHECK(radical_support_vertices(p4, 2) == std::vector<int>{0, 1, 2, 3});

  for (const Graph& g : {Graph::path(4), Graph::cycle(5), Graph::star(4)}) {
    for (int j = 0; j <= g.m(); ++j) {
      MonomialIdeal f = radical_fitting_formula(g, j);
      auto support = radical_support_vertices(g, j);
      for (int v = 0; v < g.n; ++v) {
        bool listed = std::binary_search(support.begin(), support.end(), v);
        CHECK(f.contains(Monomial::var(v)) == listed);
      }
    }
  }
}

TEST_CASE("full support thresholds on complete graphs") {
  for (int n = 3; n <= 6; ++n) CHECK(full_support_threshold(Graph::complete(n)) == n - 1);
  CHECK(full_support_threshold(Graph::cycle(4)) == 2);
}

TEST_CASE("chordality") {
  CHECK(is_chordal(Graph::path(4)));
  CHECK(is_chordal(Graph::star(5)));
  CHECK(is_chordal(Graph::complete(4)));
  CHECK_FALSE(is_chordal(Graph::cycle(4)));
  CHECK_FALSE(is_chordal(Graph::cycle(5)));
  CHECK(is_chordal(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})));
  CHECK(is_chordal(Graph::from_edges(1, {})));
}

TEST_CASE("isomorphism sweep") {
  CHECK(graphs_up_to_iso(2).size() == 2);
  CHECK(graphs_up_to_iso(3).size() == 4);
  CHECK(graphs_up_to_iso(4).size() == 11);
  CHECK(graphs_up_to_iso(5).size() == 34);
  int with_edges = 0;
  for (const auto& g : graphs_up_to_iso(4))
    if (g.m() > 0) ++with_edges;
  CHECK(with_edges == 10);
  CHECK_THROWS_AS((void)graphs_up_to_iso(7), PreconditionViolated);
}

TEST_CASE("edge ideal") {
  Graph p3 = Graph::path(3);
  MonomialIdeal i = edge_ideal(p3);
  CHECK(i.ring().var_count() == 3);
  CHECK(i.mu() == 2);
  CHECK(i.contains(Monomial::var(0) * Monomial::var(1)));
  CHECK_THROWS_AS((void)edge_ideal(Graph::from_edges(3, {})), PreconditionViolated);
}
