#include "fitt/polynomial.hpp"

#include "fitt/errors.hpp"

namespace fitt {

const std::pair<const Monomial, mpz_class>& Polynomial::leading() const {
  if (terms_.empty()) throw PreconditionViolated("zero polynomial has no leading term");
  return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw PreconditionViolated("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quot;
  const auto& [dm, dc] = divisor.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    if (!dm.divides(rm) || rc % dc != 0)
      throw PreconditionViolated("polynomial division is not exact");
    Monomial qm = rm / dm;
    mpz_class qc = rc / dc;
    quot.add_term(qm, qc);
    rem -= divisor * Polynomial(qm, qc);
  }
  return quot;
}

std::string Polynomial::str(const PolynomialRing& ring) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class a = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += m.str(ring);
    }
  }
  return s;
}

Polynomial normalize(const std::vector<std::pair<mpz_class, Monomial>>& terms) {
  Polynomial p;
  for (const auto& [c, m] : terms) p.add_term(m, c);
  return p;
}

}  // namespace fitt
