#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "fitt/budget.hpp"
#include "fitt/relative_ideal.hpp"

namespace fitt {

// Presentation of a monomial ideal over the power-series semigroup ring:
// one column per pair (i, j) and minimal degree d of the intersection
// (e_i + S) cap (e_j + S), encoding t^{d-e_i} e_i - t^{d-e_j} e_j.
struct SemigroupPresentation {
  NumericalSemigroup s;
  std::vector<long> gens;
  struct Column {
    int i = 0;
    int j = 0;
    long d = 0;
  };
  std::vector<Column> columns;

  int m() const { return static_cast<int>(gens.size()); }
};

SemigroupPresentation semigroup_presentation(const RelativeIdeal& ideal);

// Exact model of an ideal of K[[t^S]] modulo the tail (t^d : d >= bound).
// Span kept as a reduced row echelon basis over the rationals, coordinates
// indexed by the semigroup elements below the bound.
class TruncatedIdeal {
 public:
  TruncatedIdeal(NumericalSemigroup s, long bound);

  // span element given as (degree, coefficient) terms; degrees at or past the
  // bound are dropped, the rest must lie in S
  void add_element(const std::vector<std::pair<long, mpq_class>>& terms);
  // element together with all its t^s multiples below the bound
  void add_generator(const std::vector<std::pair<long, mpq_class>>& terms);
  void add_monomial_generator(long degree);

  bool contains_power(long degree) const;
  bool contains(const TruncatedIdeal& other) const;
  bool equals(const TruncatedIdeal& other) const;

  const NumericalSemigroup& semigroup() const { return s_; }
  long bound() const { return bound_; }
  long rank() const { return static_cast<long>(rows_.size()); }

 private:
  std::vector<mpq_class> reduce(std::vector<mpq_class> v) const;
  NumericalSemigroup s_;
  long bound_;
  std::vector<long> degrees_;  // S cap [0, bound), sorted
  std::map<long, int> index_;
  std::vector<std::vector<mpq_class>> rows_;  // reduced, sorted by pivot
};

TruncatedIdeal truncated_span(const NumericalSemigroup& s,
                              const std::vector<long>& monomial_gens,
                              long bound);

// smallest shift a >= -min gen making every generator a semigroup element
RelativeIdeal shift_into_ring(const RelativeIdeal& e);

// Fitt_1 of a monomial ideal of K[[t^S]] from the pairwise presentation.
// Every nonzero (m-1)-minor is a single signed power of t whose exponent is
// a spanning-tree weight, so the ideal is generated by powers of t.
RelativeIdeal fitting1_ideal(
    const RelativeIdeal& ideal,
    std::int64_t max_nodes = default_budget().max_search_nodes);

struct Fitting1Result {
  RelativeIdeal fitting;
  bool equals_target = false;
  long truncation_bound = 0;
};

// Truncated-span comparison of Fitt_1(ideal) against a target ideal of the
// ring, at a bound past which both certifiably contain every power of t.
Fitting1Result fitting1_series(
    const RelativeIdeal& ideal, const RelativeIdeal& target,
    std::int64_t max_nodes = default_budget().max_search_nodes);

struct CanonicalSearchHit {
  NumericalSemigroup s;
  RelativeIdeal omega;
  RelativeIdeal fitting;
  long shift = 0;  // fitting = shift + shifted omega copy
};

struct CanonicalSearchReport {
  int max_genus = 0;
  long visited = 0;
  long gorenstein_skipped = 0;
  long analysed = 0;
  std::map<long, long> per_genus;
  std::vector<CanonicalSearchHit> hits;
  std::vector<NumericalSemigroup> budget_skips;
  long type2_checked = 0;
  std::vector<NumericalSemigroup> type2_violations;
  // semigroups where Fitt_1(omega) and tr(omega) disagree about properness
  std::vector<NumericalSemigroup> radical_mismatches;
};

// Scans all semigroups up to the genus bound for a non-Gorenstein one whose
// canonical ideal satisfies Fitt_1(omega) = omega up to shift.
CanonicalSearchReport search_canonical_fixed_points(
    int max_genus, std::int64_t max_nodes = default_budget().max_search_nodes);

}  // namespace fitt
