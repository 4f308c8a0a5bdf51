#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fitt/monomial.hpp"

namespace fitt {

// Multivariate polynomial with arbitrary-precision integer coefficients.
// Terms keyed by monomial in graded-lex order; no zero coefficient is stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Monomial& m, mpz_class c = 1) {
    if (c != 0) terms_[m] = std::move(c);
  }
  explicit Polynomial(long c) {
    if (c != 0) terms_[Monomial::one()] = c;
  }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  // leading = largest in graded-lex; zero polynomial has no leading term
  const std::pair<const Monomial, mpz_class>& leading() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

  // exact division; throws when the quotient does not exist in Z[vars]
  Polynomial divide_exact(const Polynomial& divisor) const;

  std::string str(const PolynomialRing& ring) const;

  void add_term(const Monomial& m, const mpz_class& c);

 private:
  std::map<Monomial, mpz_class> terms_;
};

// Collects like monomials and drops zero coefficients.
Polynomial normalize(const std::vector<std::pair<mpz_class, Monomial>>& terms);

}  // namespace fitt
