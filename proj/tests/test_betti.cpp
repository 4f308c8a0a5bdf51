#include <doctest.h>

#include "fitt/betti.hpp"

using namespace fitt;

namespace {
Monomial v(int i) { return Monomial::var(i); }

MonomialIdeal cycle_ideal(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  PolynomialRing ring(names);
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) gens.push_back(v(i) * v((i + 1) % n));
  return MonomialIdeal(ring, std::move(gens));
}
}  // namespace

TEST_CASE("regular sequences") {
  PolynomialRing xy({"x", "y"});
  MonomialIdeal i(xy, {v(0), v(1)});
  auto b = betti_pd(i);
  CHECK(b.pd == 2);
  CHECK(b.total(1) == 2);
  CHECK(b.total(2) == 1);
  // the one second syzygy sits in multidegree xy
  CHECK(b.beta.at({2, v(0) * v(1)}) == 1);

  PolynomialRing xyz({"x", "y", "z"});
  auto m = betti_pd(MonomialIdeal(xyz, {v(0), v(1), v(2)}));
  CHECK(m.pd == 3);
  CHECK(m.total(1) == 3);
  CHECK(m.total(2) == 3);
  CHECK(m.total(3) == 1);

  auto sq = betti_pd(MonomialIdeal(xyz, {v(0).pow(2), v(1).pow(2), v(2).pow(2)}));
  CHECK(sq.pd == 3);
  CHECK(is_cohen_macaulay(MonomialIdeal(xyz, {v(0).pow(2), v(1).pow(2), v(2).pow(2)})));
}

TEST_CASE("triangle edge ideal is perfect of grade 2") {
  PolynomialRing xyz({"x", "y", "z"});
  MonomialIdeal tri(xyz, {v(0) * v(1), v(0) * v(2), v(1) * v(2)});
  auto b = betti_pd(tri);
  CHECK(b.pd == 2);
  CHECK(b.total(1) == 3);
  CHECK(b.total(2) == 2);
  CHECK(is_perfect_grade2(tri));
  CHECK(is_cohen_macaulay(tri));
}

TEST_CASE("cycles") {
  // the square is the smallest non-Cohen-Macaulay cycle
  MonomialIdeal c4 = cycle_ideal(4);
  auto b4 = betti_pd(c4);
  CHECK(b4.pd == 3);
  CHECK(c4.height() == 2);
  CHECK_FALSE(is_cohen_macaulay(c4));
  CHECK_FALSE(is_perfect_grade2(c4));

  MonomialIdeal c5 = cycle_ideal(5);
  auto b5 = betti_pd(c5);
  CHECK(b5.pd == 3);
  CHECK(c5.height() == 3);
  CHECK(is_cohen_macaulay(c5));
}

TEST_CASE("projective dimension bounds height") {
  PolynomialRing r({"a", "b", "c", "d"});
  MonomialIdeal i(r, {v(0) * v(1), v(1) * v(2), v(2) * v(3)});
  auto b = betti_pd(i);
  CHECK(b.pd >= i.height());
  CHECK(b.total(0) == 1);
}

TEST_CASE("degree budget") {
  PolynomialRing r({"a", "b", "c", "d", "e"});
  std::vector<Monomial> gens;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) gens.push_back(v(i) * v(j));
  CHECK_THROWS_AS((void)betti_pd(MonomialIdeal(r, gens), 3), BudgetExceeded);
}
