#pragma once

#include <map>
#include <utility>

#include "fitt/budget.hpp"
#include "fitt/monomial_ideal.hpp"

namespace fitt {

// Multigraded Betti numbers of S/I. beta[(i, a)] = dim Tor_i(S/I, K)_a,
// only nonzero entries stored. pd = projective dimension of S/I.
struct BettiTable {
  std::map<std::pair<int, Monomial>, long> beta;
  int pd = 0;

  long total(int i) const {
    long t = 0;
    for (const auto& [key, b] : beta)
      if (key.first == i) t += b;
    return t;
  }
};

// Koszul strand homology at every distinct lcm multidegree of generator
// subsets. Throws BudgetExceeded when the distinct multidegrees exceed budget.
BettiTable betti_pd(const MonomialIdeal& ideal,
                    std::int64_t max_degrees = default_budget().max_betti_degrees);

// height 2 and pd(S/I) = 2
bool is_perfect_grade2(const MonomialIdeal& ideal);
// pd(S/I) = height(I)
bool is_cohen_macaulay(const MonomialIdeal& ideal);

}  // namespace fitt
