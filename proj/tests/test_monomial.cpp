#include <doctest.h>

#include "fitt/errors.hpp"
#include "fitt/fitting.hpp"
#include "fitt/matrix.hpp"
#include "fitt/monomial.hpp"
#include "fitt/polynomial.hpp"

using namespace fitt;

namespace {
const PolynomialRing kXyz({"x", "y", "z"});
Monomial mx() { return Monomial::var(0); }
Monomial my() { return Monomial::var(1); }
Monomial mz() { return Monomial::var(2); }
}  // namespace

TEST_CASE("monomial normalization and arithmetic") {
  Monomial a = Monomial::from_pairs({{1, 2}, {0, 1}, {1, 0}});
  CHECK(a == mx() * my().pow(2));
  CHECK(a.degree() == 3);
  CHECK(a.exponent(1) == 2);
  CHECK(a.exponent(2) == 0);

  CHECK(Monomial::from_pairs({{0, 0}}).is_one());
  CHECK((mx() * my()).divides(mx() * my() * mz()));
  CHECK_FALSE((mx() * mx()).divides(mx() * my()));
  CHECK((mx() * my() * my()) / my() == mx() * my());
  CHECK_THROWS_AS((void)(mx() / my()), PreconditionViolated);

  CHECK((mx() * my()).lcm(my() * mz()) == mx() * my() * mz());
  CHECK((mx().pow(2) * my()).gcd(mx() * mz()) == mx());
  CHECK((mx().pow(3) * my().pow(2)).squarefree_part() == mx() * my());
  CHECK((mx() * my()).is_squarefree());
  CHECK_FALSE(mx().pow(2).is_squarefree());
  CHECK((mx() * my() * mz()).localize(0b011) == mx() * my());
  CHECK((mx() * my()).support_mask() == 0b011);
}

TEST_CASE("graded lex order") {
  CHECK(mx() < mx() * my());               // lower degree first
  CHECK(my().pow(2) < mx() * my());        // same degree, earlier variable wins
  CHECK(my() < mx());                      // x dominates y
  CHECK_FALSE(mx() < mx());
  std::vector<Monomial> v{my() * mz(), mx(), mx() * my(), Monomial::one()};
  std::sort(v.begin(), v.end());
  CHECK(v.front().is_one());
  CHECK(v.back() == mx() * my());
}

TEST_CASE("polynomial normalization") {
  Polynomial cancel = normalize({{1, mx() * my()}, {-1, mx() * my()}});
  CHECK(cancel.is_zero());

  Polynomial merged = normalize({{2, mx()}, {3, mx()}});
  CHECK(merged == Polynomial(mx(), 5));

  Polynomial ordered = normalize({{1, mx().pow(2) * my()}, {1, mz()}});
  CHECK(ordered.term_count() == 2);
  CHECK(ordered.leading().first == mx().pow(2) * my());

  Polynomial p = Polynomial(mx()) - Polynomial(my());
  CHECK(p * p == Polynomial(mx().pow(2)) - Polynomial(mx() * my(), 2) +
                     Polynomial(my().pow(2)));
  CHECK((p - p).is_zero());
}

TEST_CASE("determinant on small matrices") {
  PolyMatrix m(2, 2);
  m.set(0, 0, Polynomial(mx()));
  m.set(0, 1, Polynomial(my()));
  m.set(1, 0, Polynomial(mz()));
  Monomial w = Monomial::var(3);
  m.set(1, 1, Polynomial(w));
  CHECK(determinant(m) == Polynomial(mx() * w) - Polynomial(my() * mz()));

  PolyMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, Polynomial::one());
  CHECK(determinant(id) == Polynomial::one());

  PolyMatrix diag(2, 2);
  diag.set(0, 0, Polynomial(mx(), -1));
  diag.set(1, 1, Polynomial(mz()));
  CHECK(determinant(diag) == Polynomial(mx() * mz(), -1));
}

TEST_CASE("determinant backends and transpose agree") {
  Presentation p = taylor_presentation_of(kXyz, {mx() * my(), mx() * mz(), my() * mz()});
  const PolyMatrix& a = p.matrix;
  CHECK(determinant(a) == determinant_bareiss(a));
  CHECK(determinant(a) == determinant(a.transpose()));

  PolyMatrix b(4, 4);
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      ++k;
      if ((i + j) % 3) b.set(i, j, Polynomial(Monomial::var((i + j) % 4, 1 + k % 2), k));
    }
  CHECK(determinant(b) == determinant_bareiss(b));
  CHECK(determinant(b) == determinant(b.transpose()));
}

TEST_CASE("minor conventions") {
  Presentation xy = taylor_presentation_of(PolynomialRing({"x", "y"}), {mx(), my()});
  auto singles = minors(xy.matrix, 1, 1000);
  REQUIRE(singles.size() == 2);
  CHECK(singles[0] == Polynomial(my()));
  CHECK(singles[1] == Polynomial(mx(), -1));

  CHECK(minors(xy.matrix, 0, 1000) == std::vector<Polynomial>{Polynomial::one()});
  CHECK(minors(xy.matrix, -3, 1000) == std::vector<Polynomial>{Polynomial::one()});
  CHECK(minors(xy.matrix, 2, 1000).empty());  // 2x1 matrix has no 2-minors

  Presentation tri =
      taylor_presentation_of(kXyz, {mx() * my(), mx() * mz(), my() * mz()});
  auto twos = minors(tri.matrix, 2, 1000);
  CHECK(twos.size() == 9);
  for (const auto& d : twos) {
    if (d.is_zero()) continue;
    CHECK(d.term_count() == 1);
    Monomial mono = d.terms().begin()->first;
    CHECK((mono == mx() * my() || mono == mx() * mz() || mono == my() * mz()));
  }

  CHECK_THROWS_AS((void)minors(tri.matrix, 2, 5), BudgetExceeded);
}

TEST_CASE("binomial saturates") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(400, 200) == std::numeric_limits<std::int64_t>::max());
}

TEST_CASE("rational rank") {
  CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rational_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(rational_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(rational_rank({}) == 0);
}
