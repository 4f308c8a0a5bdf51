#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fitt {

// Cofinite additive submonoid of the nonnegative integers, stored by its gap
// list. Frobenius number of the full monoid is -1 by convention.
class NumericalSemigroup {
 public:
  // positive integers with gcd 1; need not be minimal
  static NumericalSemigroup from_generators(std::vector<long> generators);
  // validated: complement of the gap set must be closed under addition
  static NumericalSemigroup from_gaps(std::vector<long> gaps);
  static NumericalSemigroup naturals() { return NumericalSemigroup({}); }

  bool contains(long x) const;
  long multiplicity() const;
  long frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  long conductor() const { return frobenius() + 1; }
  long genus() const { return static_cast<long>(gaps_.size()); }
  const std::vector<long>& gaps() const { return gaps_; }
  const std::vector<long>& minimal_generators() const { return min_gens_; }

  // least element in each residue class modulo n, indexed by residue;
  // requires n positive and in the semigroup
  std::vector<long> apery(long n) const;
  std::vector<long> pseudo_frobenius() const;
  int type() const { return static_cast<int>(pseudo_frobenius().size()); }
  bool is_symmetric() const;

  // genus tree: drop one minimal generator above the Frobenius number
  std::vector<NumericalSemigroup> children() const;

  bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }
  bool operator!=(const NumericalSemigroup& o) const { return gaps_ != o.gaps_; }
  bool operator<(const NumericalSemigroup& o) const { return gaps_ < o.gaps_; }

  std::string str() const;  // minimal generators, "<4, 5>"

 private:
  explicit NumericalSemigroup(std::vector<long> gaps);

  std::vector<long> gaps_;      // sorted, positive
  std::vector<long> min_gens_;  // sorted
};

// Walks the genus tree from the full monoid. `visit` returns whether to
// descend; descent also stops once genus reaches max_genus.
void enumerate_semigroups(
    int max_genus,
    const std::function<bool(const NumericalSemigroup&)>& visit);

}  // namespace fitt
