#include "fitt/series.hpp"

#include <algorithm>
#include <set>

#include "fitt/errors.hpp"

namespace fitt {

SemigroupPresentation semigroup_presentation(const RelativeIdeal& ideal) {
  if (ideal.is_zero())
    throw PreconditionViolated("presentation needs a nonzero ideal");
  SemigroupPresentation p{ideal.semigroup(), ideal.gens(), {}};
  const int m = p.m();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      RelativeIdeal inter = rel_intersection(
          RelativeIdeal(p.s, {p.gens[i]}), RelativeIdeal(p.s, {p.gens[j]}));
      for (long d : inter.gens())
        p.columns.push_back(SemigroupPresentation::Column{i, j, d});
    }
  return p;
}

TruncatedIdeal::TruncatedIdeal(NumericalSemigroup s, long bound)
    : s_(std::move(s)), bound_(bound) {
  if (bound <= 0) throw PreconditionViolated("truncation bound must be positive");
  for (long d = 0; d < bound_; ++d)
    if (s_.contains(d)) {
      index_[d] = static_cast<int>(degrees_.size());
      degrees_.push_back(d);
    }
}

std::vector<mpq_class> TruncatedIdeal::reduce(std::vector<mpq_class> v) const {
  for (const auto& row : rows_) {
    int pivot = 0;
    while (row[pivot] == 0) ++pivot;
    if (v[pivot] != 0) {
      const mpq_class c = v[pivot];
      for (std::size_t k = pivot; k < v.size(); ++k) v[k] -= c * row[k];
    }
  }
  return v;
}

void TruncatedIdeal::add_element(
    const std::vector<std::pair<long, mpq_class>>& terms) {
  std::vector<mpq_class> v(degrees_.size(), 0);
  bool any = false;
  for (const auto& [d, c] : terms) {
    if (d >= bound_) continue;
    auto it = index_.find(d);
    if (it == index_.end())
      throw PreconditionViolated("term degree outside the semigroup");
    v[it->second] += c;
    any = true;
  }
  if (!any) return;
  v = reduce(std::move(v));
  int pivot = -1;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) {
      pivot = static_cast<int>(k);
      break;
    }
  if (pivot < 0) return;
  const mpq_class lead = v[pivot];
  for (auto& c : v) c /= lead;
  for (auto& row : rows_)
    if (row[pivot] != 0) {
      const mpq_class c = row[pivot];
      for (std::size_t k = 0; k < v.size(); ++k) row[k] -= c * v[k];
    }
  auto pos = rows_.begin();
  while (pos != rows_.end()) {
    int p = 0;
    while ((*pos)[p] == 0) ++p;
    if (p > pivot) break;
    ++pos;
  }
  rows_.insert(pos, std::move(v));
}

void TruncatedIdeal::add_generator(
    const std::vector<std::pair<long, mpq_class>>& terms) {
  if (terms.empty()) return;
  long min_deg = terms.front().first;
  for (const auto& [d, c] : terms) min_deg = std::min(min_deg, d);
  for (long s = 0; s < bound_ - min_deg; ++s) {
    if (!s_.contains(s)) continue;
    std::vector<std::pair<long, mpq_class>> shifted;
    for (const auto& [d, c] : terms)
      if (d + s < bound_) shifted.emplace_back(d + s, c);
    if (!shifted.empty()) add_element(shifted);
  }
}

void TruncatedIdeal::add_monomial_generator(long degree) {
  add_generator({{degree, mpq_class(1)}});
}

bool TruncatedIdeal::contains_power(long degree) const {
  auto it = index_.find(degree);
  if (it == index_.end())
    throw PreconditionViolated("degree outside the truncated model");
  std::vector<mpq_class> v(degrees_.size(), 0);
  v[it->second] = 1;
  v = reduce(std::move(v));
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

bool TruncatedIdeal::contains(const TruncatedIdeal& other) const {
  if (s_ != other.s_ || bound_ != other.bound_)
    throw PreconditionViolated("truncated ideals use different models");
  for (const auto& row : other.rows_) {
    auto r = reduce(row);
    for (const auto& c : r)
      if (c != 0) return false;
  }
  return true;
}

bool TruncatedIdeal::equals(const TruncatedIdeal& other) const {
  if (s_ != other.s_ || bound_ != other.bound_)
    throw PreconditionViolated("truncated ideals use different models");
  return rows_ == other.rows_;
}

TruncatedIdeal truncated_span(const NumericalSemigroup& s,
                              const std::vector<long>& monomial_gens,
                              long bound) {
  TruncatedIdeal span(s, bound);
  for (long g : monomial_gens)
    if (g < bound) span.add_monomial_generator(g);
  return span;
}

RelativeIdeal shift_into_ring(const RelativeIdeal& e) {
  if (e.is_zero()) return e;
  long a = std::max(0L, -e.min_gen());
  auto honest = [&](long shift) {
    for (long g : e.gens())
      if (!e.semigroup().contains(g + shift)) return false;
    return true;
  };
  while (!honest(a)) ++a;
  return e.shifted(a);
}

namespace {

// All spanning trees of the pairwise-relation graph with weight sum at most
// the cap; weights are the available relation degrees per pair.
struct TreeEnum {
  int m = 0;
  long cap = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<long>> dlists;
  std::vector<long> suffix_min;
  std::int64_t max_nodes = 0;
  std::int64_t nodes = 0;
  std::set<long> sums;

  void tick() {
    if (++nodes > max_nodes)
      throw BudgetExceeded("spanning tree sweep exceeded node budget");
  }

  void rec(std::size_t p, const std::vector<int>& comp, int chosen, long sum) {
    tick();
    if (chosen == m - 1) {
      sums.insert(sum);
      return;
    }
    const int needed = m - 1 - chosen;
    if (pairs.size() - p < static_cast<std::size_t>(needed)) return;
    if (sum + needed * suffix_min[p] > cap) return;
    const auto [a, b] = pairs[p];
    if (comp[a] != comp[b]) {
      std::vector<int> merged = comp;
      const int from = merged[b], to = merged[a];
      for (int& label : merged)
        if (label == from) label = to;
      for (long d : dlists[p]) {
        if (sum + d + (needed - 1) * suffix_min[p + 1] > cap) break;
        rec(p + 1, merged, chosen + 1, sum + d);
      }
    }
    rec(p + 1, comp, chosen, sum);
  }
};

}  // namespace

RelativeIdeal fitting1_ideal(const RelativeIdeal& ideal,
                             std::int64_t max_nodes) {
  if (ideal.is_zero())
    throw PreconditionViolated("Fitting ideal of the zero ideal is undefined here");
  const NumericalSemigroup& s = ideal.semigroup();
  if (ideal.mu() == 1) return RelativeIdeal::ring_ideal(s);
  const RelativeIdeal honest = shift_into_ring(ideal);
  const SemigroupPresentation pres = semigroup_presentation(honest);
  const int m = pres.m();

  TreeEnum te;
  te.m = m;
  te.max_nodes = max_nodes;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) te.pairs.emplace_back(i, j);
  te.dlists.resize(te.pairs.size());
  for (const auto& col : pres.columns) {
    const std::size_t p = std::find(te.pairs.begin(), te.pairs.end(),
                                    std::make_pair(col.i, col.j)) -
                          te.pairs.begin();
    te.dlists[p].push_back(col.d);
  }
  for (auto& dl : te.dlists) std::sort(dl.begin(), dl.end());

  // cheapest spanning tree by greedy merge over ascending pair minima
  std::vector<std::pair<long, std::pair<int, int>>> sorted_edges;
  for (std::size_t p = 0; p < te.pairs.size(); ++p)
    sorted_edges.push_back({te.dlists[p].front(), te.pairs[p]});
  std::sort(sorted_edges.begin(), sorted_edges.end());
  std::vector<int> comp(m);
  for (int i = 0; i < m; ++i) comp[i] = i;
  long cheapest = 0;
  int merges = 0;
  for (const auto& [w, pr] : sorted_edges) {
    if (comp[pr.first] == comp[pr.second]) continue;
    const int from = comp[pr.second], to = comp[pr.first];
    for (int& label : comp)
      if (label == from) label = to;
    cheapest += w;
    if (++merges == m - 1) break;
  }

  te.cap = cheapest + std::max(s.frobenius(), 0L);
  te.suffix_min.assign(te.pairs.size() + 1, 0);
  for (std::size_t p = te.pairs.size(); p-- > 0;)
    te.suffix_min[p] =
        p + 1 < te.pairs.size()
            ? std::min(te.dlists[p].front(), te.suffix_min[p + 1])
            : te.dlists[p].front();
  for (int i = 0; i < m; ++i) comp[i] = i;
  te.rec(0, comp, 0, 0);

  // a tree sum lying in a smaller one plus S contributes nothing new
  std::vector<long> kept;
  for (long sum : te.sums) {
    bool redundant = false;
    for (long k : kept)
      if (s.contains(sum - k)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(sum);
  }
  long total = 0;
  for (long e : pres.gens) total += e;
  std::vector<long> gens;
  for (long sum : kept)
    for (long e : pres.gens) gens.push_back(sum - total + e);
  return RelativeIdeal(s, std::move(gens));
}

Fitting1Result fitting1_series(const RelativeIdeal& ideal,
                               const RelativeIdeal& target,
                               std::int64_t max_nodes) {
  if (ideal.semigroup() != target.semigroup())
    throw PreconditionViolated("ideals live over different semigroups");
  if (ideal.is_zero() || ideal.mu() < 2)
    throw PreconditionViolated("need an ideal with at least two generators");
  if (!ideal.inside_ring() || target.is_zero() || !target.inside_ring())
    throw PreconditionViolated("series comparison needs ideals of the ring");
  const NumericalSemigroup& s = ideal.semigroup();
  const long c = s.conductor();
  const long m = ideal.mu();

  RelativeIdeal fitting = fitting1_ideal(ideal, max_nodes);

  const long bound =
      std::max(target.min_gen() + c, (m - 1) * ideal.min_gen() + c) + 1;
  const long tail = bound + std::max(s.frobenius(), 0L);
  for (long d = bound; d <= tail; ++d) {
    if (!fitting.contains(d))
      throw InsufficientBound("computed Fitting ideal misses the tail");
    if (!target.contains(d))
      throw InsufficientBound("target ideal misses the tail");
  }

  TruncatedIdeal lhs = truncated_span(s, fitting.gens(), bound);
  TruncatedIdeal rhs = truncated_span(s, target.gens(), bound);
  return Fitting1Result{std::move(fitting), lhs.equals(rhs), bound};
}

CanonicalSearchReport search_canonical_fixed_points(int max_genus,
                                                    std::int64_t max_nodes) {
  if (max_genus < 0 || max_genus > 16)
    throw PreconditionViolated("genus bound out of range");
  CanonicalSearchReport report;
  report.max_genus = max_genus;
  enumerate_semigroups(max_genus, [&](const NumericalSemigroup& s) {
    ++report.visited;
    ++report.per_genus[s.genus()];
    if (s.type() == 1) {
      ++report.gorenstein_skipped;
      return true;
    }
    ++report.analysed;
    const RelativeIdeal omega = canonical_ideal(s);
    const RelativeIdeal honest = shift_into_ring(omega);
    RelativeIdeal fitting = RelativeIdeal::zero(s);
    try {
      fitting = fitting1_ideal(honest, max_nodes);
    } catch (const BudgetExceeded&) {
      report.budget_skips.push_back(s);
      return true;
    }
    const auto shift = ideal_equal_up_to_shift(fitting, honest);
    if (shift)
      report.hits.push_back(CanonicalSearchHit{s, omega, fitting, *shift});
    if (s.type() == 2) {
      ++report.type2_checked;
      if (shift) report.type2_violations.push_back(s);
    }
    const RelativeIdeal trace = rel_trace(honest);
    if (fitting.is_ring() != trace.is_ring())
      report.radical_mismatches.push_back(s);
    return true;
  });
  return report;
}

}  // namespace fitt
