#pragma once

#include <string>
#include <vector>

#include "fitt/budget.hpp"
#include "fitt/matrix.hpp"
#include "fitt/monomial_ideal.hpp"

namespace fitt {

// Syzygy presentation of a monomial ideal: rows follow generator_order, one
// column per syzygy; every column c satisfies sum_i c_i * u_i = 0.
struct Presentation {
  MonomialIdeal ideal;
  PolyMatrix matrix;
  std::vector<Monomial> generator_order;
};

struct CheckResult {
  std::string statement;
  std::string instance;
  bool pass = true;
  std::string witness;  // nonempty exactly when pass is false
};

struct FittingReport {
  std::string name;
  std::string instance;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void check(const std::string& statement, bool ok, const std::string& witness_on_fail) {
    checks.push_back({statement, instance, ok, ok ? "" : witness_on_fail});
  }
};

// Columns in lexicographic pair order (1,2),(1,3),...,(2,3),...; the column
// for pair (i,j) holds lcm/u_i at row i and -lcm/u_j at row j.
Presentation taylor_presentation(const MonomialIdeal& ideal);
// Same matrix for an explicitly ordered, possibly redundant generating set.
Presentation taylor_presentation_of(const PolynomialRing& ring,
                                    const std::vector<Monomial>& generators);

// Fitt_j as a monomial ideal: every monomial term of every (m-j)-minor of the
// Taylor presentation, minimalized. j >= m gives the unit ideal.
MonomialIdeal fitting_ideal(const MonomialIdeal& ideal, int j,
                            std::int64_t max_minors = default_budget().max_minors);
MonomialIdeal fitting_ideal_of_generators(const PolynomialRing& ring,
                                          const std::vector<Monomial>& generators, int j,
                                          std::int64_t max_minors = default_budget().max_minors);

// Raw (m-j)-minors of a caller-supplied presentation; never monomialized.
std::vector<Polynomial> fitting_of_presentation(
    const PolyMatrix& matrix, int declared_rows, int j,
    std::int64_t max_minors = default_budget().max_minors);

// sqrt(Fitt_j) through the localization characterization: the intersection of
// the monomial primes P with mu(I_P) > j. Exact; no minors involved.
MonomialIdeal radical_fitting_support(const MonomialIdeal& ideal, int j);

// Certificate that every column of the presentation is a syzygy; with
// nonzero monomial row multipliers this pins rank < m, so all m-minors vanish.
bool row_relation_holds(const Presentation& p);

// Certificate that the squarefree part of every nonzero t-fold diagonal
// product (injective column -> row choices) lies in `claimed`. Since each term
// monomial of each t-minor equals some diagonal product's monomial, success
// certifies radical(Fitt-term ideal) subseteq claimed. Membership pruning is
// monotone, so subtrees under a member are skipped soundly.
bool diagonal_products_within(const Presentation& p, int t, const MonomialIdeal& claimed,
                              std::int64_t max_nodes = default_budget().max_search_nodes);

FittingReport verify_containment(const MonomialIdeal& ideal,
                                 std::int64_t max_minors = default_budget().max_minors);
FittingReport verify_radical(const MonomialIdeal& ideal,
                             std::int64_t max_minors = default_budget().max_minors);

// The three equivalent conditions at Fitt_{j-1}: (i) Fitt_{j-1}(I) = I,
// (ii) Fitt_{j-1}(I) squarefree, (iii) the structural side: for j = 2 height 2
// with pd(S/I) = 2, for j > 2 a regular sequence of length j.
struct TriEquivalence {
  bool fitting_equals_ideal = false;
  bool fitting_squarefree = false;
  bool structural = false;
  bool consistent() const {
    return fitting_equals_ideal == fitting_squarefree && fitting_squarefree == structural;
  }
};
TriEquivalence fitting_equality_classification(
    const MonomialIdeal& ideal, int j,
    std::int64_t max_minors = default_budget().max_minors);

// Structural consequences of Fitt_{j-1}(I) = I for radical I, and the local
// mu criterion implying it.
FittingReport structure_check(const MonomialIdeal& ideal, int j,
                              std::int64_t max_minors = default_budget().max_minors);

}  // namespace fitt
