#pragma once

#include <cstdint>
#include <random>

#include "fitt/monomial_ideal.hpp"

namespace fitt {

// Seeded sampling with raw engine output and rejection only, so identical
// seeds give identical ideals on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  int below(int n);               // uniform over [0, n)
  int between(int lo, int hi);    // uniform inclusive

  // exponent vector uniform over {0..max_degree}^vars conditioned on total
  // degree in [1, max_degree]
  Monomial monomial(int vars, int max_degree);
  // uniform generator count, then monomials with mutually indivisible retries
  MonomialIdeal ideal(const PolynomialRing& ring, int max_gens, int max_degree);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fitt
