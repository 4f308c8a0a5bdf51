#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fitt/semigroup.hpp"

namespace fitt {

// Finitely generated S-stable subset of the integers: E = union of g + S over
// the generators. Gens are kept minimal and sorted; an empty list is the zero
// ideal. E is an ideal of the semigroup ring exactly when every gen lies in S.
class RelativeIdeal {
 public:
  RelativeIdeal(NumericalSemigroup s, std::vector<long> generators);
  static RelativeIdeal zero(NumericalSemigroup s) { return {std::move(s), {}}; }
  static RelativeIdeal ring_ideal(NumericalSemigroup s) {
    return {std::move(s), {0}};
  }

  const NumericalSemigroup& semigroup() const { return s_; }
  const std::vector<long>& gens() const { return gens_; }
  int mu() const { return static_cast<int>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }
  bool is_ring() const { return gens_ == std::vector<long>{0}; }
  bool inside_ring() const;  // all gens in S
  long min_gen() const;

  bool contains(long x) const;
  RelativeIdeal shifted(long a) const;

  bool operator==(const RelativeIdeal& o) const {
    return s_ == o.s_ && gens_ == o.gens_;
  }
  bool operator!=(const RelativeIdeal& o) const { return !(*this == o); }

  std::string str() const;  // "(12, 13)", "(0)" for the zero ideal

 private:
  NumericalSemigroup s_;
  std::vector<long> gens_;
};

RelativeIdeal rel_product(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal rel_power(const RelativeIdeal& e, int k);
RelativeIdeal rel_sum(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal rel_intersection(const RelativeIdeal& e, const RelativeIdeal& f);
// {z : z + F subset of E}; denominator must be nonzero
RelativeIdeal rel_colon(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal rel_inverse(const RelativeIdeal& e);  // (S : E)
RelativeIdeal rel_trace(const RelativeIdeal& e);    // E * E^{-1}

// gens of {z : F(S) - z not in S}; smallest gen is always 0
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);

// a with E = a + F, if any
std::optional<long> ideal_equal_up_to_shift(const RelativeIdeal& e,
                                            const RelativeIdeal& f);

}  // namespace fitt
