#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fitt/budget.hpp"
#include "fitt/monomial_ideal.hpp"

namespace fitt {

// Finite simple graph on vertices 0..n-1. Edges normalized (a < b), sorted.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
  static Graph complete(int n);
  static Graph cycle(int n);   // n >= 3
  static Graph path(int n);    // n >= 2
  static Graph star(int leaves);  // center 0, leaves 1..k

  int m() const { return static_cast<int>(edges.size()); }
  bool adjacent(int a, int b) const;
  std::uint32_t neighbour_mask(int v) const;
  std::uint32_t closed_neighbour_mask(int v) const {
    return neighbour_mask(v) | (1u << v);
  }
  // indices of edges avoiding v with an endpoint adjacent to v
  std::vector<int> edge_neighbourhood(int v) const;
  int cover_number() const;
  bool is_independent(std::uint32_t vertex_mask) const;
  // edge count of the induced subgraph on the given vertices
  int induced_edge_count(std::uint32_t vertex_mask) const;
};

MonomialIdeal edge_ideal(const Graph& g);  // ring x1..xn, pre: m >= 1

// A family of pairwise-disjoint nonempty blocks A_s inside the edge
// neighbourhoods of the vertices of F, subject to the separation condition
// {i_s} u e != {i_t} u e' across distinct vertices.
struct AdmissibleCover {
  std::vector<int> vertices;               // F, sorted
  std::vector<std::vector<int>> blocks;    // per vertex, edge indices
  int size() const {
    int s = 0;
    for (const auto& b : blocks) s += static_cast<int>(b.size());
    return s;
  }
};

std::vector<AdmissibleCover> admissible_covers(
    const Graph& g, const std::vector<int>& f, int t,
    std::int64_t max_nodes = default_budget().max_search_nodes);
bool has_admissible_cover(const Graph& g, const std::vector<int>& f, int t,
                          std::int64_t max_nodes = default_budget().max_search_nodes);

// Combinatorial sqrt(Fitt_j(I(G))): the zero ideal at j = 0; I(G) for
// 1 <= j < cover number; otherwise I(G) plus x_F over the minimal independent
// F with an admissible cover of size m - j; the unit ideal for j >= m.
MonomialIdeal radical_fitting_formula(const Graph& g, int j,
                                      std::int64_t max_nodes = default_budget().max_search_nodes);

// vertices i with |E(i)| >= m - j: exactly the variables inside sqrt(Fitt_j)
std::vector<int> radical_support_vertices(const Graph& g, int j);
// max over vertices of |N(i)| + |E(G - N[i])|; sqrt(Fitt_j) is the full
// maximal ideal exactly when this bound is <= j < m
int full_support_threshold(const Graph& g);

bool is_chordal(const Graph& g);

// one representative per isomorphism class of graphs on exactly n vertices
std::vector<Graph> graphs_up_to_iso(int n);

}  // namespace fitt
