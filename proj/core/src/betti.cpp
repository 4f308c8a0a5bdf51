#include "fitt/betti.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <vector>

#include "fitt/errors.hpp"
#include "fitt/matrix.hpp"

namespace fitt {

namespace {

// ranks of one Koszul strand: homology dimensions in degrees 0..|supp(a)|
std::vector<long> strand_homology(const MonomialIdeal& ideal, const Monomial& a) {
  const std::vector<int> supp = a.support();
  const int k = static_cast<int>(supp.size());

  // basis per level: subsets F of supp(a) (as bit masks over positions in
  // supp) with x^(a - eps_F) not in the ideal
  std::vector<std::vector<std::uint32_t>> basis(k + 1);
  std::vector<std::map<std::uint32_t, int>> index(k + 1);
  for (std::uint32_t f = 0; f < (1u << k); ++f) {
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < k; ++p) {
      int e = a.exponent(supp[p]) - ((f >> p) & 1u);
      if (e > 0) pairs.emplace_back(supp[p], e);
    }
    Monomial rest = Monomial::from_pairs(std::move(pairs));
    if (!ideal.contains(rest)) {
      int lvl = std::popcount(f);
      index[lvl][f] = static_cast<int>(basis[lvl].size());
      basis[lvl].push_back(f);
    }
  }

  // boundary from level i to i-1; entries +-1
  std::vector<int> ranks(k + 2, 0);
  for (int i = 1; i <= k; ++i) {
    if (basis[i].empty() || basis[i - 1].empty()) continue;
    std::vector<std::vector<mpz_class>> mtx(
        basis[i].size(), std::vector<mpz_class>(basis[i - 1].size(), 0));
    for (size_t col = 0; col < basis[i].size(); ++col) {
      std::uint32_t f = basis[i][col];
      int pos = 0;
      for (int p = 0; p < k; ++p) {
        if (!((f >> p) & 1u)) continue;
        std::uint32_t g = f & ~(1u << p);
        auto it = index[i - 1].find(g);
        if (it != index[i - 1].end())
          mtx[col][it->second] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    ranks[i] = rational_rank(std::move(mtx));
  }

  std::vector<long> h(k + 1, 0);
  for (int i = 0; i <= k; ++i)
    h[i] = static_cast<long>(basis[i].size()) - ranks[i] - ranks[i + 1];
  return h;
}

}  // namespace

BettiTable betti_pd(const MonomialIdeal& ideal, std::int64_t max_degrees) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionViolated("betti_pd needs a proper nonzero ideal");

  std::set<Monomial> degrees;
  degrees.insert(Monomial::one());
  for (const auto& g : ideal.gens()) {
    std::vector<Monomial> fresh;
    for (const auto& d : degrees) fresh.push_back(d.lcm(g));
    degrees.insert(fresh.begin(), fresh.end());
    if (static_cast<std::int64_t>(degrees.size()) > max_degrees)
      throw BudgetExceeded("betti_pd: more than " + std::to_string(max_degrees) +
                           " distinct lcm multidegrees");
  }

  BettiTable table;
  for (const auto& a : degrees) {
    std::vector<long> h = strand_homology(ideal, a);
    for (size_t i = 0; i < h.size(); ++i) {
      if (h[i] > 0) {
        table.beta[{static_cast<int>(i), a}] = h[i];
        table.pd = std::max(table.pd, static_cast<int>(i));
      }
    }
  }
  return table;
}

bool is_perfect_grade2(const MonomialIdeal& ideal) {
  return ideal.height() == 2 && betti_pd(ideal).pd == 2;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal) {
  return betti_pd(ideal).pd == ideal.height();
}

}  // namespace fitt
