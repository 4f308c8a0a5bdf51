#include "fitt/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "fitt/errors.hpp"

namespace fitt {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0 || n > 31)
    throw PreconditionViolated("graph must have between 0 and 31 vertices");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw PreconditionViolated("edge endpoint out of range");
    if (a == b) throw PreconditionViolated("loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return from_edges(n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw PreconditionViolated("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a) e.emplace_back(a, (a + 1) % n);
  return from_edges(n, std::move(e));
}

Graph Graph::path(int n) {
  if (n < 2) throw PreconditionViolated("path needs at least 2 vertices");
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
  return from_edges(n, std::move(e));
}

Graph Graph::star(int leaves) {
  if (leaves < 1) throw PreconditionViolated("star needs at least 1 leaf");
  std::vector<std::pair<int, int>> e;
  for (int a = 1; a <= leaves; ++a) e.emplace_back(0, a);
  return from_edges(leaves + 1, std::move(e));
}

bool Graph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::uint32_t Graph::neighbour_mask(int v) const {
  std::uint32_t mask = 0;
  for (const auto& [a, b] : edges) {
    if (a == v) mask |= 1u << b;
    if (b == v) mask |= 1u << a;
  }
  return mask;
}

std::vector<int> Graph::edge_neighbourhood(int v) const {
  const std::uint32_t nb = neighbour_mask(v);
  std::vector<int> out;
  for (int e = 0; e < m(); ++e) {
    const auto& [a, b] = edges[e];
    if (a == v || b == v) continue;
    if ((nb >> a & 1u) || (nb >> b & 1u)) out.push_back(e);
  }
  return out;
}

int Graph::cover_number() const {
  if (edges.empty()) return 0;
  std::vector<std::uint32_t> masks;
  for (const auto& [a, b] : edges) masks.push_back((1u << a) | (1u << b));
  int best = n;
  for (std::uint32_t t : minimal_transversals(masks))
    best = std::min(best, std::popcount(t));
  return best;
}

bool Graph::is_independent(std::uint32_t vertex_mask) const {
  return induced_edge_count(vertex_mask) == 0;
}

int Graph::induced_edge_count(std::uint32_t vertex_mask) const {
  int count = 0;
  for (const auto& [a, b] : edges)
    if ((vertex_mask >> a & 1u) && (vertex_mask >> b & 1u)) ++count;
  return count;
}

MonomialIdeal edge_ideal(const Graph& g) {
  if (g.edges.empty())
    throw PreconditionViolated("edge ideal needs at least one edge");
  PolynomialRing ring = PolynomialRing::with_indexed_vars(g.n);
  std::vector<Monomial> gens;
  for (const auto& [a, b] : g.edges)
    gens.push_back(Monomial::var(a) * Monomial::var(b));
  return MonomialIdeal(ring, gens);
}

namespace {

struct CoverSearch {
  const Graph& g;
  std::vector<int> f;
  int target = 0;
  std::int64_t max_nodes = 0;
  std::int64_t nodes = 0;
  bool collect = false;
  bool found = false;

  std::vector<std::vector<int>> neighbourhoods;  // E(i) per vertex of f
  std::vector<bool> used;                        // edge index -> taken
  std::vector<std::vector<int>> blocks;
  // masks {i_s} u e of everything chosen so far, tagged by block
  std::vector<std::pair<int, std::uint32_t>> chosen_masks;
  std::vector<AdmissibleCover> covers;

  CoverSearch(const Graph& graph, std::vector<int> vertices, int t,
              std::int64_t budget)
      : g(graph), f(std::move(vertices)), target(t), max_nodes(budget) {
    for (int v : f) neighbourhoods.push_back(g.edge_neighbourhood(v));
    used.assign(g.m(), false);
    blocks.resize(f.size());
  }

  void tick() {
    if (++nodes > max_nodes)
      throw BudgetExceeded("admissible cover search exceeded node budget");
  }

  std::uint32_t tagged_mask(int s, int e) const {
    const auto& [a, b] = g.edges[e];
    return (1u << f[s]) | (1u << a) | (1u << b);
  }

  bool separated(int s, std::uint32_t mask) const {
    for (const auto& [t, other] : chosen_masks)
      if (t != s && other == mask) return false;
    return true;
  }

  // exact remaining capacity check ignoring disjointness
  bool capacity_left(std::size_t s, int size) const {
    int room = 0;
    for (std::size_t t = s; t < neighbourhoods.size(); ++t)
      room += static_cast<int>(neighbourhoods[t].size());
    return size + room >= target;
  }

  void run_block(std::size_t s, int size) {
    if (found && !collect) return;
    tick();
    if (s == f.size()) {
      if (size == target) {
        found = true;
        if (collect) covers.push_back(AdmissibleCover{f, blocks});
      }
      return;
    }
    if (size + static_cast<int>(f.size() - s) > target) return;
    if (!capacity_left(s, size)) return;
    run_edge(s, 0, size, 0);
  }

  void run_edge(std::size_t s, std::size_t pos, int size, int taken) {
    if (found && !collect) return;
    tick();
    if (size > target) return;
    if (pos == neighbourhoods[s].size()) {
      if (taken >= 1) run_block(s + 1, size);
      return;
    }
    const int e = neighbourhoods[s][pos];
    if (!used[e]) {
      const std::uint32_t mask = tagged_mask(static_cast<int>(s), e);
      if (separated(static_cast<int>(s), mask)) {
        used[e] = true;
        blocks[s].push_back(e);
        chosen_masks.emplace_back(static_cast<int>(s), mask);
        run_edge(s, pos + 1, size + 1, taken + 1);
        chosen_masks.pop_back();
        blocks[s].pop_back();
        used[e] = false;
      }
    }
    run_edge(s, pos + 1, size, taken);
  }
};

}  // namespace

std::vector<AdmissibleCover> admissible_covers(const Graph& g,
                                               const std::vector<int>& f,
                                               int t, std::int64_t max_nodes) {
  for (int v : f)
    if (v < 0 || v >= g.n) throw PreconditionViolated("vertex out of range");
  if (f.empty()) {
    if (t == 0) return {AdmissibleCover{}};
    return {};
  }
  std::vector<int> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionViolated("repeated vertex");
  if (t < static_cast<int>(sorted.size())) return {};
  CoverSearch search(g, sorted, t, max_nodes);
  search.collect = true;
  search.run_block(0, 0);
  return std::move(search.covers);
}

bool has_admissible_cover(const Graph& g, const std::vector<int>& f, int t,
                          std::int64_t max_nodes) {
  for (int v : f)
    if (v < 0 || v >= g.n) throw PreconditionViolated("vertex out of range");
  if (f.empty()) return t == 0;
  std::vector<int> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionViolated("repeated vertex");
  if (t < static_cast<int>(sorted.size())) return false;
  CoverSearch search(g, sorted, t, max_nodes);
  search.run_block(0, 0);
  return search.found;
}

MonomialIdeal radical_fitting_formula(const Graph& g, int j,
                                      std::int64_t max_nodes) {
  if (j < 0) throw PreconditionViolated("j must be nonnegative");
  const int m = g.m();
  if (m == 0) throw PreconditionViolated("graph must have at least one edge");
  PolynomialRing ring = PolynomialRing::with_indexed_vars(g.n);
  if (j == 0) return MonomialIdeal::zero(ring);
  if (j >= m) return MonomialIdeal::unit(ring);
  MonomialIdeal base = edge_ideal(g);
  if (j < g.cover_number()) return base;

  const int want = m - j;
  std::vector<Monomial> gens = base.gens();
  std::vector<std::uint32_t> qualifying;
  std::vector<std::uint32_t> by_size[32];
  for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask)
    by_size[std::popcount(mask)].push_back(mask);
  for (int size = 1; size <= std::min(g.n, want); ++size) {
    for (std::uint32_t mask : by_size[size]) {
      bool redundant = false;
      for (std::uint32_t q : qualifying)
        if ((q & mask) == q) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      if (!g.is_independent(mask)) continue;
      std::vector<int> f;
      for (int v = 0; v < g.n; ++v)
        if (mask >> v & 1u) f.push_back(v);
      if (!has_admissible_cover(g, f, want, max_nodes)) continue;
      qualifying.push_back(mask);
      Monomial prod = Monomial::one();
      for (int v : f) prod = prod * Monomial::var(v);
      gens.push_back(prod);
    }
  }
  return MonomialIdeal(ring, gens);
}

std::vector<int> radical_support_vertices(const Graph& g, int j) {
  if (j < 0) throw PreconditionViolated("j must be nonnegative");
  const int m = g.m();
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (static_cast<int>(g.edge_neighbourhood(v).size()) >= m - j)
      out.push_back(v);
  return out;
}

int full_support_threshold(const Graph& g) {
  int worst = 0;
  for (int v = 0; v < g.n; ++v) {
    const std::uint32_t closed = g.closed_neighbour_mask(v);
    const std::uint32_t rest = ~closed & ((1u << g.n) - 1u);
    const int bound = std::popcount(g.neighbour_mask(v)) +
                      g.induced_edge_count(rest);
    worst = std::max(worst, bound);
  }
  return worst;
}

bool is_chordal(const Graph& g) {
  const int n = g.n;
  if (n == 0) return true;
  // maximum cardinality search, then verify the reverse order eliminates
  // every vertex whose later neighbours fail to form a clique
  std::vector<int> weight(n, 0), order;
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && (best < 0 || weight[v] > weight[best])) best = v;
    placed[best] = true;
    order.push_back(best);
    for (int v = 0; v < n; ++v)
      if (!placed[v] && g.adjacent(best, v)) ++weight[v];
  }
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  // eliminate in reverse visit order; later means visited earlier
  for (int i = n - 1; i >= 0; --i) {
    const int v = order[i];
    std::vector<int> later;
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u) && position[u] < i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

namespace {

std::uint64_t canonical_edge_mask(int n, std::uint64_t mask,
                                  const std::vector<std::pair<int, int>>& slots) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t relabeled = 0;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!(mask >> s & 1ull)) continue;
      int a = perm[slots[s].first], b = perm[slots[s].second];
      if (a > b) std::swap(a, b);
      for (std::size_t t = 0; t < slots.size(); ++t)
        if (slots[t] == std::make_pair(a, b)) {
          relabeled |= 1ull << t;
          break;
        }
    }
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(int n) {
  if (n < 0 || n > 6)
    throw PreconditionViolated("isomorphism sweep supports up to 6 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<std::uint64_t> canonical;
  for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask)
    canonical.push_back(canonical_edge_mask(n, mask, slots));
  std::sort(canonical.begin(), canonical.end(),
            [](std::uint64_t a, std::uint64_t b) {
              const int ca = std::popcount(a), cb = std::popcount(b);
              return ca != cb ? ca < cb : a < b;
            });
  canonical.erase(std::unique(canonical.begin(), canonical.end()),
                  canonical.end());
  std::vector<Graph> out;
  for (std::uint64_t mask : canonical) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1ull) edges.push_back(slots[s]);
    out.push_back(Graph::from_edges(n, std::move(edges)));
  }
  return out;
}

}  // namespace fitt
