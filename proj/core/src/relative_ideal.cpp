#include "fitt/relative_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "fitt/errors.hpp"

namespace fitt {

namespace {

// drop generators lying in another generator plus S
std::vector<long> minimalize(const NumericalSemigroup& s,
                             std::vector<long> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<long> out;
  for (long g : gens) {
    bool redundant = false;
    for (long h : out)
      if (s.contains(g - h)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// minimal generators of an S-stable set given by a membership predicate,
// where `lo` bounds the minimum from below and membership holds from
// lo + conductor on
template <typename Member>
std::vector<long> gens_from_membership(const NumericalSemigroup& s, long lo,
                                       const Member& in) {
  long start = lo;
  const long cap = lo + 4 * s.conductor() + 64;
  while (!in(start)) {
    if (++start > cap)
      throw PreconditionViolated("membership window scan found no element");
  }
  std::vector<long> candidates;
  for (long d = start; d <= start + std::max(s.frobenius(), 0L); ++d)
    if (in(d)) candidates.push_back(d);
  std::vector<long> out;
  for (long d : candidates) {
    bool redundant = false;
    for (long h : out)
      if (h != d && s.contains(d - h)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(d);
  }
  return out;
}

}  // namespace

RelativeIdeal::RelativeIdeal(NumericalSemigroup s, std::vector<long> generators)
    : s_(std::move(s)), gens_(minimalize(s_, std::move(generators))) {}

bool RelativeIdeal::inside_ring() const {
  for (long g : gens_)
    if (!s_.contains(g)) return false;
  return true;
}

long RelativeIdeal::min_gen() const {
  if (gens_.empty()) throw PreconditionViolated("zero ideal has no generators");
  return gens_.front();
}

bool RelativeIdeal::contains(long x) const {
  for (long g : gens_)
    if (s_.contains(x - g)) return true;
  return false;
}

RelativeIdeal RelativeIdeal::shifted(long a) const {
  std::vector<long> gens = gens_;
  for (long& g : gens) g += a;
  return RelativeIdeal(s_, std::move(gens));
}

std::string RelativeIdeal::str() const {
  if (gens_.empty()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i];
  }
  os << ')';
  return os.str();
}

RelativeIdeal rel_product(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.semigroup() != f.semigroup())
    throw PreconditionViolated("ideals live over different semigroups");
  std::vector<long> gens;
  for (long a : e.gens())
    for (long b : f.gens()) gens.push_back(a + b);
  return RelativeIdeal(e.semigroup(), std::move(gens));
}

RelativeIdeal rel_power(const RelativeIdeal& e, int k) {
  if (k < 0) throw PreconditionViolated("negative power");
  RelativeIdeal out = RelativeIdeal::ring_ideal(e.semigroup());
  for (int i = 0; i < k; ++i) out = rel_product(out, e);
  return out;
}

RelativeIdeal rel_sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.semigroup() != f.semigroup())
    throw PreconditionViolated("ideals live over different semigroups");
  std::vector<long> gens = e.gens();
  gens.insert(gens.end(), f.gens().begin(), f.gens().end());
  return RelativeIdeal(e.semigroup(), std::move(gens));
}

RelativeIdeal rel_intersection(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.semigroup() != f.semigroup())
    throw PreconditionViolated("ideals live over different semigroups");
  if (e.is_zero() || f.is_zero()) return RelativeIdeal::zero(e.semigroup());
  const long lo = std::max(e.min_gen(), f.min_gen());
  auto gens = gens_from_membership(
      e.semigroup(), lo, [&](long d) { return e.contains(d) && f.contains(d); });
  return RelativeIdeal(e.semigroup(), std::move(gens));
}

RelativeIdeal rel_colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.semigroup() != f.semigroup())
    throw PreconditionViolated("ideals live over different semigroups");
  if (f.is_zero())
    throw PreconditionViolated("colon by the zero ideal");
  if (e.is_zero()) return RelativeIdeal::zero(e.semigroup());
  const long lo = e.min_gen() - f.min_gen() - std::max(f.semigroup().frobenius(), 0L);
  auto in = [&](long z) {
    for (long g : f.gens())
      if (!e.contains(z + g)) return false;
    return true;
  };
  auto gens = gens_from_membership(e.semigroup(), lo, in);
  return RelativeIdeal(e.semigroup(), std::move(gens));
}

RelativeIdeal rel_inverse(const RelativeIdeal& e) {
  return rel_colon(RelativeIdeal::ring_ideal(e.semigroup()), e);
}

RelativeIdeal rel_trace(const RelativeIdeal& e) {
  return rel_product(rel_inverse(e), e);
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
  auto gens = gens_from_membership(
      s, 0, [&](long z) { return !s.contains(s.frobenius() - z); });
  return RelativeIdeal(s, std::move(gens));
}

std::optional<long> ideal_equal_up_to_shift(const RelativeIdeal& e,
                                            const RelativeIdeal& f) {
  if (e.semigroup() != f.semigroup()) return std::nullopt;
  if (e.mu() != f.mu()) return std::nullopt;
  if (e.is_zero()) return 0;
  const long a = e.min_gen() - f.min_gen();
  for (int i = 0; i < e.mu(); ++i)
    if (e.gens()[i] != f.gens()[i] + a) return std::nullopt;
  return a;
}

}  // namespace fitt
