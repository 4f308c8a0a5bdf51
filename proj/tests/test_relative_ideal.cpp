#include <doctest.h>

#include "fitt/errors.hpp"
#include "fitt/relative_ideal.hpp"

using namespace fitt;

namespace {
NumericalSemigroup s25() { return NumericalSemigroup::from_generators({2, 5}); }
}  // namespace

TEST_CASE("generators minimalize") {
  RelativeIdeal e(s25(), {0, 2, 1, 7});
  CHECK(e.gens() == std::vector<long>{0, 1});
  CHECK(e.mu() == 2);
  CHECK(e.str() == "(0, 1)");
  CHECK(RelativeIdeal::zero(s25()).str() == "(0)");
  CHECK(RelativeIdeal::ring_ideal(s25()).is_ring());
  CHECK(e.inside_ring() == false);  // 1 is a gap
  CHECK(RelativeIdeal(s25(), {2, 4}).inside_ring());
}

TEST_CASE("membership and shifting") {
  RelativeIdeal e(s25(), {0, 3});
  CHECK(e.contains(0));
  CHECK(e.contains(3));
  CHECK(e.contains(5));
  CHECK_FALSE(e.contains(1));
  CHECK_FALSE(e.contains(-4));
  CHECK(e.shifted(4).gens() == std::vector<long>{4, 7});
  CHECK(e.shifted(4).shifted(-4) == e);
  CHECK(e.min_gen() == 0);
  CHECK_THROWS_AS((void)RelativeIdeal::zero(s25()).min_gen(), PreconditionViolated);
}

TEST_CASE("products sums powers") {
  RelativeIdeal two(s25(), {2});
  RelativeIdeal five(s25(), {5});
  CHECK(rel_product(two, five).gens() == std::vector<long>{7});
  CHECK(rel_sum(two, five).gens() == std::vector<long>{2, 5});
  CHECK(rel_power(two, 3).gens() == std::vector<long>{6});
  CHECK(rel_power(two, 0).is_ring());

  RelativeIdeal j(s25(), {0, 1});
  CHECK(rel_product(j, j) == j);  // already the whole of N
  CHECK(rel_product(j, RelativeIdeal::zero(s25())).is_zero());
}

TEST_CASE("intersection and colon") {
  RelativeIdeal two(s25(), {2});
  RelativeIdeal five(s25(), {5});
  // (2) misses t^5 and (5) misses t^6 and t^8, so the meet needs two generators
  CHECK(rel_intersection(two, five).gens() == std::vector<long>({7, 10}));
  CHECK(rel_intersection(two, RelativeIdeal::zero(s25())).is_zero());

  RelativeIdeal seven(s25(), {7});
  CHECK(rel_colon(seven, five).gens() == std::vector<long>{2});
  CHECK(rel_colon(two, two).is_ring());
  CHECK_THROWS_AS((void)rel_colon(two, RelativeIdeal::zero(s25())), PreconditionViolated);
  CHECK(rel_colon(RelativeIdeal::zero(s25()), two).is_zero());
}

TEST_CASE("inverse and trace") {
  RelativeIdeal j(s25(), {0, 1});
  CHECK(rel_inverse(j).gens() == std::vector<long>{4, 5});
  CHECK(rel_trace(j).gens() == std::vector<long>{4, 5});

  RelativeIdeal k(s25(), {0, 3});
  CHECK(rel_inverse(k).gens() == std::vector<long>{2, 5});

  // principal ideals always have full trace
  CHECK(rel_trace(RelativeIdeal(s25(), {2})).is_ring());
  CHECK(rel_trace(RelativeIdeal(s25(), {7})).is_ring());
  CHECK(rel_inverse(RelativeIdeal(s25(), {4})).gens() == std::vector<long>{-4});
}

TEST_CASE("canonical ideals") {
  CHECK(canonical_ideal(NumericalSemigroup::from_generators({3, 4})).is_ring());
  CHECK(canonical_ideal(NumericalSemigroup::from_generators({4, 5})).is_ring());
  CHECK(canonical_ideal(NumericalSemigroup::naturals()).is_ring());

  NumericalSemigroup s = NumericalSemigroup::from_generators({3, 4, 5});
  RelativeIdeal k = canonical_ideal(s);
  CHECK(k.gens() == std::vector<long>{0, 1});
  CHECK(k.mu() == s.type());
  CHECK(rel_trace(k).gens() == std::vector<long>{3, 4, 5});
  CHECK_FALSE(ideal_equal_up_to_shift(rel_trace(k), k).has_value());
}

TEST_CASE("shift detection") {
  RelativeIdeal j(s25(), {0, 1});
  CHECK(ideal_equal_up_to_shift(j.shifted(4), j) == 4);
  CHECK(ideal_equal_up_to_shift(j, j.shifted(4)) == -4);
  CHECK(ideal_equal_up_to_shift(j, j) == 0);
  CHECK_FALSE(ideal_equal_up_to_shift(j, RelativeIdeal(s25(), {0, 3})).has_value());
  CHECK_FALSE(ideal_equal_up_to_shift(j, RelativeIdeal(s25(), {2})).has_value());

  // same generator lists over different semigroups never match
  RelativeIdeal other(NumericalSemigroup::from_generators({3, 4, 5}), {0, 1});
  CHECK_FALSE(ideal_equal_up_to_shift(j, other).has_value());
}
