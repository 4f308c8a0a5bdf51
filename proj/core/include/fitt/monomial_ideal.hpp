#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fitt/monomial.hpp"
#include "fitt/ring.hpp"

namespace fitt {

// Monomial ideal held by its canonical minimal generating set, sorted in
// graded-lex order. The zero ideal has no generators; the unit ideal is (1).
class MonomialIdeal {
 public:
  MonomialIdeal(PolynomialRing ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(const PolynomialRing& ring) { return {ring, {}}; }
  static MonomialIdeal unit(const PolynomialRing& ring) {
    return {ring, {Monomial::one()}};
  }

  const PolynomialRing& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int mu() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;  // other subseteq this

  MonomialIdeal power(int k) const;
  MonomialIdeal product(const MonomialIdeal& other) const;
  MonomialIdeal sum(const MonomialIdeal& other) const;
  MonomialIdeal intersection(const MonomialIdeal& other) const;
  MonomialIdeal colon(const MonomialIdeal& other) const;
  MonomialIdeal radical() const;
  bool is_squarefree() const;

  // minimal transversals of the generator supports; pre: proper and nonzero
  std::vector<std::vector<int>> minimal_primes() const;
  std::pair<int, int> height_and_grade() const;
  int height() const { return height_and_grade().first; }
  bool is_unmixed() const;  // pre: radical

  MonomialIdeal monomial_localization(std::uint32_t keep_mask) const;
  int localized_mu(std::uint32_t keep_mask) const {
    return monomial_localization(keep_mask).mu();
  }

  bool is_regular_sequence() const;
  bool generators_pairwise_coprime() const;

  bool operator==(const MonomialIdeal& o) const {
    return ring_ == o.ring_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  std::string str() const;

 private:
  PolynomialRing ring_;
  std::vector<Monomial> gens_;
};

// Spec-level construction entry: discards monomials divisible by another.
MonomialIdeal minimalize(const PolynomialRing& ring, std::vector<Monomial> monomials);

// Minimal hitting sets (as bit masks) of the given edge masks. An empty edge
// makes the family untransversable: returns {}. No edges: returns {0}.
std::vector<std::uint32_t> minimal_transversals(std::vector<std::uint32_t> edges);

}  // namespace fitt
