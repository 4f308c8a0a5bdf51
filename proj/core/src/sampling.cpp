#include "fitt/sampling.hpp"

#include "fitt/errors.hpp"

namespace fitt {

int Sampler::below(int n) {
  if (n <= 0) throw PreconditionViolated("sampling from an empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<int>(x % span);
}

int Sampler::between(int lo, int hi) { return lo + below(hi - lo + 1); }

Monomial Sampler::monomial(int vars, int max_degree) {
  for (;;) {
    std::vector<std::pair<int, int>> pairs;
    int total = 0;
    for (int v = 0; v < vars; ++v) {
      const int e = below(max_degree + 1);
      total += e;
      if (e > 0) pairs.emplace_back(v, e);
    }
    if (total >= 1 && total <= max_degree)
      return Monomial::from_pairs(std::move(pairs));
  }
}

MonomialIdeal Sampler::ideal(const PolynomialRing& ring, int max_gens,
                             int max_degree) {
  const int want = between(1, max_gens);
  std::vector<Monomial> gens;
  for (int g = 0; g < want; ++g) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Monomial u = monomial(ring.var_count(), max_degree);
      bool redundant = false;
      for (const Monomial& v : gens)
        if (v.divides(u) || u.divides(v)) {
          redundant = true;
          break;
        }
      if (!redundant) {
        gens.push_back(u);
        break;
      }
    }
  }
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace fitt
