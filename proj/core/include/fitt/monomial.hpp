#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fitt/ring.hpp"

namespace fitt {

// Exponent-vector monomial. Stored sparse: (variable index, exponent) pairs,
// sorted by variable, exponents strictly positive. The empty list is 1.
class Monomial {
 public:
  Monomial() = default;

  // Pairs may arrive unsorted / with duplicates / with zero exponents.
  static Monomial from_pairs(std::vector<std::pair<int, int>> pairs);
  static Monomial one() { return Monomial(); }
  static Monomial var(int index, int exponent = 1);

  bool is_one() const { return e_.empty(); }
  int degree() const;
  int exponent(int var) const;
  const std::vector<std::pair<int, int>>& exponents() const { return e_; }
  std::vector<int> support() const;
  std::uint32_t support_mask() const;  // bit i set when variable i occurs

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // exact division; throws PreconditionViolated when not divisible
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial squarefree_part() const;
  bool is_squarefree() const;
  Monomial pow(int k) const;

  // variables outside `keep_mask` are substituted by 1
  Monomial localize(std::uint32_t keep_mask) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  // graded-lexicographic: lower degree first; ties by lex with earlier
  // variables dominating (higher exponent on the first differing variable
  // means the larger monomial)
  bool operator<(const Monomial& o) const;

  std::string str(const PolynomialRing& ring) const;

 private:
  std::vector<std::pair<int, int>> e_;
};

}  // namespace fitt
