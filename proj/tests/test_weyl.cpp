#include <numeric>

#include "atorsion/error.hpp"
#include "atorsion/weyl.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace atorsion;

TEST_CASE("the cycle c_1 in S_3") {
  const auto c = cycle_perm(2, 1);
  CHECK(c.to_string() == "[2,3,1]");
  CHECK(length(c) == 2);
}

TEST_CASE("small named permutations") {
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(Permutation({3, 2, 1})) == 3);
  CHECK(cycle_perm(3, 2).to_string() == "[3,4,1,2]");
  CHECK(cycle_perm(1, 1).to_string() == "[2,1]");
  CHECK(poincare_polynomial(3, 2) == 21);
  CHECK(poincare_polynomial(2, 5) == 6);
}

TEST_CASE("cycle lengths by bubble sort") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const auto c = cycle_perm(n, k);
      CHECK(length(c) == oracle::bubble_swaps(c.images()));
      CHECK(c(1) == k + 1);
      CHECK(c(n + 1) == k);
    }
}

TEST_CASE("lengths over all of S_5") {
  const auto all = all_permutations(5);
  CHECK(all.size() == 120);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& w : all) {
    CHECK(length(w) == oracle::bubble_swaps(w.images()));
    CHECK(length(w.inverse()) == length(w));
    CHECK(w * w.inverse() == Permutation::identity(5));
  }
  CHECK(length(Permutation::longest(5)) == 10);
}

TEST_CASE("composition") {
  const Permutation a({2, 1, 3}), b({1, 3, 2});
  CHECK((a * b).images() == std::vector<unsigned>{2, 3, 1});
}

TEST_CASE("poincare polynomial is the flag count") {
  for (std::size_t m = 1; m <= 6; ++m)
    for (long q : {2, 3, 5}) CHECK(poincare_polynomial(m, q) == oracle::flag_total(q, m));
  CHECK(poincare_polynomial(3, 1) == 6);
}

TEST_CASE("invalid permutations and arguments") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
  CHECK_THROWS_AS(cycle_perm(3, 0), Error);
  CHECK_THROWS_AS(cycle_perm(3, 4), Error);
  try {
    poincare_polynomial(10, 2);
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size);
  }
}
