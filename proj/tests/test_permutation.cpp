#include "doctest.h"

#include <stdexcept>

#include "hourglass/permutation.hpp"

using namespace hourglass;

TEST_CASE("long cycle and longest element") {
  const auto s = Permutation::long_cycle(5);
  const auto w = Permutation::longest_element(5);
  for (int j = 1; j <= 5; ++j) {
    CHECK(s(j) == j % 5 + 1);
    CHECK(w(j) == 6 - j);
  }
  CHECK(w.is_involution());
  CHECK(w.has_fixed_point());
  CHECK_FALSE(Permutation::longest_element(4).has_fixed_point());
}

TEST_CASE("composition acts right to left") {
  const Permutation a({2, 3, 1});
  const Permutation b({1, 3, 2});
  const auto ab = a * b;
  for (int j = 1; j <= 3; ++j) CHECK(ab(j) == a(b(j)));
  CHECK(a * a.inverse() == Permutation::identity(3));
}

TEST_CASE("conjugation by the long cycle") {
  const Permutation p({3, 1, 2, 5, 4});
  const auto s = Permutation::long_cycle(5);
  CHECK(conjugate_by_long_cycle(p) == s.inverse() * p * s);
  const auto w = Permutation::longest_element(5);
  CHECK(conjugate_by_longest(p) == w * p * w);
}

TEST_CASE("cycles and printing") {
  const auto p = Permutation::from_cycles(4, {{1, 4}, {2, 3}});
  CHECK(p.to_string() == "4 3 2 1");
  CHECK(p.cycle_string() == "(1 4)(2 3)");
  CHECK(to_string(PermutationTuple{p, Permutation::identity(4)}) == "4 3 2 1 | 1 2 3 4");
}

TEST_CASE("non-bijections are rejected") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}
