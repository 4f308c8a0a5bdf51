#include "fitt/monomial.hpp"

#include <algorithm>
#include <map>

#include "fitt/errors.hpp"

namespace fitt {

Monomial Monomial::from_pairs(std::vector<std::pair<int, int>> pairs) {
  std::map<int, int> acc;
  for (auto [v, k] : pairs) {
    if (v < 0) throw PreconditionViolated("negative variable index");
    if (k < 0) throw PreconditionViolated("negative exponent");
    if (k > 0) acc[v] += k;
  }
  Monomial m;
  m.e_.assign(acc.begin(), acc.end());
  return m;
}

Monomial Monomial::var(int index, int exponent) {
  return from_pairs({{index, exponent}});
}

int Monomial::degree() const {
  int d = 0;
  for (auto [v, k] : e_) d += k;
  return d;
}

int Monomial::exponent(int var) const {
  for (auto [v, k] : e_)
    if (v == var) return k;
  return 0;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  s.reserve(e_.size());
  for (auto [v, k] : e_) s.push_back(v);
  return s;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t m = 0;
  for (auto [v, k] : e_) m |= (1u << v);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (auto [v, k] : e_)
    if (other.exponent(v) < k) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::pair<int, int>> out;
  out.reserve(e_.size() + other.e_.size());
  auto a = e_.begin();
  auto b = other.e_.begin();
  while (a != e_.end() && b != other.e_.end()) {
    if (a->first < b->first)
      out.push_back(*a++);
    else if (b->first < a->first)
      out.push_back(*b++);
    else {
      out.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  out.insert(out.end(), a, e_.end());
  out.insert(out.end(), b, other.e_.end());
  Monomial m;
  m.e_ = std::move(out);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this))
    throw PreconditionViolated("monomial division is not exact");
  std::vector<std::pair<int, int>> out;
  for (auto [v, k] : e_) {
    int r = k - other.exponent(v);
    if (r > 0) out.emplace_back(v, r);
  }
  Monomial m;
  m.e_ = std::move(out);
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::pair<int, int>> out;
  auto a = e_.begin();
  auto b = other.e_.begin();
  while (a != e_.end() && b != other.e_.end()) {
    if (a->first < b->first)
      out.push_back(*a++);
    else if (b->first < a->first)
      out.push_back(*b++);
    else {
      out.emplace_back(a->first, std::max(a->second, b->second));
      ++a, ++b;
    }
  }
  out.insert(out.end(), a, e_.end());
  out.insert(out.end(), b, other.e_.end());
  Monomial m;
  m.e_ = std::move(out);
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<std::pair<int, int>> out;
  for (auto [v, k] : e_) {
    int o = other.exponent(v);
    if (o > 0) out.emplace_back(v, std::min(k, o));
  }
  Monomial m;
  m.e_ = std::move(out);
  return m;
}

Monomial Monomial::squarefree_part() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(e_.size());
  for (auto [v, k] : e_) out.emplace_back(v, 1);
  Monomial m;
  m.e_ = std::move(out);
  return m;
}

bool Monomial::is_squarefree() const {
  for (auto [v, k] : e_)
    if (k > 1) return false;
  return true;
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw PreconditionViolated("negative monomial power");
  std::vector<std::pair<int, int>> out;
  if (k > 0) {
    out.reserve(e_.size());
    for (auto [v, kk] : e_) out.emplace_back(v, kk * k);
  }
  Monomial m;
  m.e_ = std::move(out);
  return m;
}

Monomial Monomial::localize(std::uint32_t keep_mask) const {
  std::vector<std::pair<int, int>> out;
  for (auto [v, k] : e_)
    if (keep_mask & (1u << v)) out.emplace_back(v, k);
  Monomial m;
  m.e_ = std::move(out);
  return m;
}

bool Monomial::operator<(const Monomial& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  // lex tie-break: scan variables in increasing index; the monomial with the
  // higher exponent on the first differing variable is the larger one
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() && b != o.e_.end()) {
    if (a->first != b->first) {
      // the side owning the smaller variable index has positive exponent there
      return a->first > b->first;
    }
    if (a->second != b->second) return a->second < b->second;
    ++a, ++b;
  }
  if (a != e_.end()) return false;  // *this has an extra (earlier-unseen) var
  if (b != o.e_.end()) return true;
  return false;
}

std::string Monomial::str(const PolynomialRing& ring) const {
  if (is_one()) return "1";
  std::string s;
  for (auto [v, k] : e_) {
    if (!s.empty()) s += "*";
    s += ring.var_name(v);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace fitt
