#include "fitt/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "fitt/errors.hpp"

namespace fitt {

NumericalSemigroup::NumericalSemigroup(std::vector<long> gaps)
    : gaps_(std::move(gaps)) {
  std::sort(gaps_.begin(), gaps_.end());
  const long c = conductor();
  const long m = multiplicity();
  // minimal generators lie below conductor + multiplicity
  for (long s = m; s <= c + m - 1; ++s) {
    if (!contains(s)) continue;
    bool decomposable = false;
    for (long a = m; a + a <= s && !decomposable; ++a)
      decomposable = contains(a) && contains(s - a);
    if (!decomposable) min_gens_.push_back(s);
  }
  if (min_gens_.empty()) min_gens_.push_back(1);  // the full monoid
}

NumericalSemigroup NumericalSemigroup::from_generators(
    std::vector<long> generators) {
  if (generators.empty())
    throw PreconditionViolated("semigroup needs at least one generator");
  for (long g : generators)
    if (g <= 0) throw PreconditionViolated("generators must be positive");
  long d = 0;
  for (long g : generators) d = std::gcd(d, g);
  if (d != 1)
    throw PreconditionViolated("generators must have gcd 1");

  // least element per residue class modulo the smallest generator, by
  // shortest paths in the residue graph
  const long m = *std::min_element(generators.begin(), generators.end());
  const long inf = -1;
  std::vector<long> dist(m, inf);
  using Node = std::pair<long, long>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
  dist[0] = 0;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [v, r] = heap.top();
    heap.pop();
    if (dist[r] != v) continue;
    for (long g : generators) {
      const long nv = v + g;
      const long nr = nv % m;
      if (dist[nr] == inf || nv < dist[nr]) {
        dist[nr] = nv;
        heap.emplace(nv, nr);
      }
    }
  }
  std::vector<long> gaps;
  const long top = *std::max_element(dist.begin(), dist.end());
  for (long x = 1; x < top; ++x)
    if (x < dist[x % m]) gaps.push_back(x);
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<long> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  for (long g : gaps)
    if (g <= 0) throw PreconditionViolated("gaps must be positive");
  NumericalSemigroup s(std::move(gaps));
  const long f = s.frobenius();
  for (long a = 1; a <= f; ++a) {
    if (!s.contains(a)) continue;
    for (long b = a; a + b <= f; ++b)
      if (s.contains(b) && !s.contains(a + b))
        throw PreconditionViolated("complement of the gap set is not closed");
  }
  return s;
}

bool NumericalSemigroup::contains(long x) const {
  if (x < 0) return false;
  if (x >= conductor()) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), x);
}

long NumericalSemigroup::multiplicity() const {
  for (long x = 1;; ++x)
    if (!std::binary_search(gaps_.begin(), gaps_.end(), x)) return x;
}

std::vector<long> NumericalSemigroup::apery(long n) const {
  if (n <= 0 || !contains(n))
    throw PreconditionViolated("Apery set needs a positive semigroup element");
  std::vector<long> out(n);
  for (long r = 0; r < n; ++r) {
    long x = r;
    while (!contains(x)) x += n;
    out[r] = x;
  }
  return out;
}

std::vector<long> NumericalSemigroup::pseudo_frobenius() const {
  if (gaps_.empty()) return {-1};
  std::vector<long> out;
  for (long g : gaps_) {
    bool all_in = true;
    for (long gen : min_gens_)
      if (!contains(g + gen)) {
        all_in = false;
        break;
      }
    if (all_in) out.push_back(g);
  }
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  const long f = frobenius();
  for (long x = 0; x <= f; ++x)
    if (contains(x) == contains(f - x)) return false;
  return true;
}

std::vector<NumericalSemigroup> NumericalSemigroup::children() const {
  std::vector<NumericalSemigroup> out;
  for (long g : min_gens_) {
    if (g <= frobenius()) continue;
    std::vector<long> gaps = gaps_;
    gaps.push_back(g);
    out.push_back(NumericalSemigroup(std::move(gaps)));
  }
  return out;
}

std::string NumericalSemigroup::str() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < min_gens_.size(); ++i) {
    if (i) os << ", ";
    os << min_gens_[i];
  }
  os << '>';
  return os.str();
}

namespace {

void walk(const NumericalSemigroup& s, int max_genus,
          const std::function<bool(const NumericalSemigroup&)>& visit) {
  if (!visit(s)) return;
  if (s.genus() >= max_genus) return;
  for (const NumericalSemigroup& child : s.children())
    walk(child, max_genus, visit);
}

}  // namespace

void enumerate_semigroups(
    int max_genus,
    const std::function<bool(const NumericalSemigroup&)>& visit) {
  if (max_genus < 0) return;
  walk(NumericalSemigroup::naturals(), max_genus, visit);
}

}  // namespace fitt
