#include <doctest.h>

#include <algorithm>

#include "fitt/errors.hpp"
#include "fitt/monomial_ideal.hpp"

using namespace fitt;

namespace {
const PolynomialRing kXyz({"x", "y", "z"});
Monomial mx() { return Monomial::var(0); }
Monomial my() { return Monomial::var(1); }
Monomial mz() { return Monomial::var(2); }
}  // namespace

TEST_CASE("construction minimalizes") {
  MonomialIdeal i(kXyz, {mx() * my(), mx(), mx() * mx()});
  CHECK(i.mu() == 1);
  CHECK(i.gens() == std::vector<Monomial>{mx()});

  CHECK(MonomialIdeal::zero(kXyz).is_zero());
  CHECK(MonomialIdeal::unit(kXyz).is_unit());
  CHECK_FALSE(MonomialIdeal::unit(kXyz).is_proper());
  MonomialIdeal dup(kXyz, {mx() * my(), my() * mx()});
  CHECK(dup.mu() == 1);
}

TEST_CASE("membership and containment") {
  MonomialIdeal i(kXyz, {mx() * my(), mz()});
  CHECK(i.contains(mx() * my() * my()));
  CHECK(i.contains(mz().pow(3)));
  CHECK_FALSE(i.contains(mx()));
  CHECK_FALSE(i.contains(Monomial::one()));
  CHECK(i.contains(MonomialIdeal(kXyz, {mx() * my() * mz()})));
  CHECK_FALSE(MonomialIdeal(kXyz, {mx()}).contains(i));
  CHECK(MonomialIdeal::unit(kXyz).contains(i));
  CHECK(i.contains(MonomialIdeal::zero(kXyz)));
}

TEST_CASE("products powers sums") {
  MonomialIdeal x(kXyz, {mx()});
  MonomialIdeal y(kXyz, {my()});
  CHECK(x.product(y) == MonomialIdeal(kXyz, {mx() * my()}));
  MonomialIdeal m(kXyz, {mx(), my()});
  CHECK(m.power(2) == MonomialIdeal(kXyz, {mx().pow(2), mx() * my(), my().pow(2)}));
  CHECK(m.power(0).is_unit());
  CHECK(x.sum(y) == MonomialIdeal(kXyz, {mx(), my()}));
}

TEST_CASE("intersection and colon") {
  MonomialIdeal x(kXyz, {mx()});
  MonomialIdeal y(kXyz, {my()});
  CHECK(x.intersection(y) == MonomialIdeal(kXyz, {mx() * my()}));

  MonomialIdeal i(kXyz, {mx() * my(), mx() * mz()});
  CHECK(i.colon(x) == MonomialIdeal(kXyz, {my(), mz()}));
  CHECK(i.colon(MonomialIdeal(kXyz, {my()})) == MonomialIdeal(kXyz, {mx()}));
  CHECK(x.colon(x).is_unit());
}

TEST_CASE("radical and squarefreeness") {
  MonomialIdeal i(kXyz, {mx().pow(2), mx() * my()});
  CHECK(i.radical() == MonomialIdeal(kXyz, {mx()}));
  CHECK(i.radical().radical() == i.radical());
  CHECK_FALSE(i.is_squarefree());
  CHECK(i.radical().is_squarefree());
  CHECK(MonomialIdeal::zero(kXyz).radical().is_zero());
}

TEST_CASE("minimal primes height grade") {
  MonomialIdeal tri(kXyz, {mx() * my(), mx() * mz(), my() * mz()});
  auto primes = tri.minimal_primes();
  std::sort(primes.begin(), primes.end());
  CHECK(primes == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(tri.height() == 2);
  CHECK(tri.height_and_grade().second == 2);
  CHECK(tri.is_unmixed());

  // (xz, yz) decomposes as (z) meet (x, y): heights 1 and 2
  MonomialIdeal mixed(kXyz, {mx() * mz(), my() * mz()});
  CHECK(mixed.height() == 1);
  CHECK_FALSE(mixed.is_unmixed());

  MonomialIdeal nonradical(kXyz, {mx().pow(2)});
  CHECK_THROWS_AS((void)nonradical.is_unmixed(), PreconditionViolated);
}

TEST_CASE("localization") {
  MonomialIdeal tri(kXyz, {mx() * my(), mx() * mz(), my() * mz()});
  CHECK(tri.localized_mu(0b011) == 2);  // invert z: (xy, x, y) -> (x, y)
  CHECK(tri.monomial_localization(0b011) == MonomialIdeal(kXyz, {mx(), my()}));
  CHECK(tri.localized_mu(0b111) == 3);
  CHECK(tri.localized_mu(0b001) == 1);
  CHECK(tri.monomial_localization(0).is_unit());
}

TEST_CASE("regular sequences and coprimality") {
  CHECK(MonomialIdeal(kXyz, {mx().pow(2), my().pow(3)}).is_regular_sequence());
  CHECK_FALSE(MonomialIdeal(kXyz, {mx() * my(), my() * mz()}).is_regular_sequence());
  CHECK(MonomialIdeal(kXyz, {mx() * my(), mz()}).generators_pairwise_coprime());
}

TEST_CASE("minimal transversals") {
  auto t = minimal_transversals({0b001, 0b110});
  std::sort(t.begin(), t.end());
  CHECK(t == std::vector<std::uint32_t>{0b011, 0b101});

  CHECK(minimal_transversals({0b01, 0b10, 0b11}).size() == 1);  // {x, y} only
  CHECK(minimal_transversals({}).size() == 1);                  // empty transversal
  CHECK(minimal_transversals({0}).empty());                     // nothing hits an empty edge
}
