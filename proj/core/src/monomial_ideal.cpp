#include "fitt/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "fitt/errors.hpp"

namespace fitt {

namespace {

std::vector<Monomial> reduce(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < ms.size(); ++i) {
    bool redundant = false;
    // sorted ascending, so only earlier (smaller) monomials can divide ms[i]
    for (size_t j = 0; j < i && !redundant; ++j)
      if (ms[j].divides(ms[i])) redundant = true;
    if (!redundant) out.push_back(ms[i]);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(PolynomialRing ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)), gens_(reduce(std::move(generators))) {}

MonomialIdeal minimalize(const PolynomialRing& ring, std::vector<Monomial> monomials) {
  return MonomialIdeal(ring, std::move(monomials));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal MonomialIdeal::power(int k) const {
  if (k < 0) throw PreconditionViolated("negative ideal power");
  if (k == 0) return unit(ring_);
  MonomialIdeal acc = *this;
  for (int i = 1; i < k; ++i) acc = acc.product(*this);
  return acc;
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& other) const {
  if (ring_ != other.ring_) throw PreconditionViolated("ring mismatch");
  std::vector<Monomial> out;
  out.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) out.push_back(a * b);
  return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& other) const {
  if (ring_ != other.ring_) throw PreconditionViolated("ring mismatch");
  std::vector<Monomial> out = gens_;
  out.insert(out.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::intersection(const MonomialIdeal& other) const {
  if (ring_ != other.ring_) throw PreconditionViolated("ring mismatch");
  std::vector<Monomial> out;
  out.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) out.push_back(a.lcm(b));
  return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& other) const {
  if (ring_ != other.ring_) throw PreconditionViolated("ring mismatch");
  MonomialIdeal acc = unit(ring_);
  for (const auto& v : other.gens_) {
    std::vector<Monomial> q;
    q.reserve(gens_.size());
    for (const auto& u : gens_) q.push_back(u / u.gcd(v));
    acc = acc.intersection(MonomialIdeal(ring_, std::move(q)));
  }
  return acc;
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.squarefree_part());
  return MonomialIdeal(ring_, std::move(out));
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

std::vector<std::uint32_t> minimal_transversals(std::vector<std::uint32_t> edges) {
  for (auto e : edges)
    if (e == 0) return {};
  std::vector<std::uint32_t> found;
  // branch on the vertices of the first uncovered edge
  auto rec = [&](auto&& self, std::uint32_t chosen, size_t edge_from) -> void {
    size_t i = edge_from;
    while (i < edges.size() && (edges[i] & chosen) != 0) ++i;
    if (i == edges.size()) {
      found.push_back(chosen);
      return;
    }
    std::uint32_t e = edges[i];
    while (e) {
      std::uint32_t v = e & (~e + 1);
      e &= e - 1;
      self(self, chosen | v, i + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::uint32_t> minimal;
  for (auto t : found) {
    bool keep = true;
    for (auto u : found)
      if (u != t && (u & t) == u) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(t);
  }
  return minimal;
}

std::vector<std::vector<int>> MonomialIdeal::minimal_primes() const {
  if (is_zero() || is_unit())
    throw PreconditionViolated("minimal primes need a proper nonzero ideal");
  MonomialIdeal rad = radical();
  std::vector<std::uint32_t> edges;
  edges.reserve(rad.gens_.size());
  for (const auto& g : rad.gens_) edges.push_back(g.support_mask());
  std::vector<std::vector<int>> out;
  for (auto mask : minimal_transversals(std::move(edges))) {
    std::vector<int> vars;
    for (int v = 0; v < 32; ++v)
      if (mask & (1u << v)) vars.push_back(v);
    out.push_back(std::move(vars));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return out;
}

std::pair<int, int> MonomialIdeal::height_and_grade() const {
  auto primes = minimal_primes();
  size_t h = primes.front().size();
  for (const auto& p : primes) h = std::min(h, p.size());
  int hh = static_cast<int>(h);
  return {hh, hh};  // ambient ring Cohen-Macaulay: grade = height
}

bool MonomialIdeal::is_unmixed() const {
  if (!is_squarefree())
    throw PreconditionViolated("unmixedness implemented for radical ideals only");
  auto primes = minimal_primes();
  for (const auto& p : primes)
    if (p.size() != primes.front().size()) return false;
  return true;
}

MonomialIdeal MonomialIdeal::monomial_localization(std::uint32_t keep_mask) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.localize(keep_mask));
  return MonomialIdeal(ring_, std::move(out));
}

bool MonomialIdeal::is_regular_sequence() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if ((gens_[i].support_mask() & gens_[j].support_mask()) != 0) return false;
  return true;
}

bool MonomialIdeal::generators_pairwise_coprime() const {
  return is_regular_sequence();
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  // display order: degree first, then early variables first (x1*x2 before x2*x3)
  std::vector<Monomial> shown = gens_;
  std::sort(shown.begin(), shown.end(), [this](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int v = 0; v < ring_.var_count(); ++v)
      if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v);
    return false;
  });
  std::string s = "(";
  for (size_t i = 0; i < shown.size(); ++i) {
    if (i) s += ", ";
    s += shown[i].str(ring_);
  }
  return s + ")";
}

}  // namespace fitt
