#include <doctest.h>

#include <set>
#include <stdexcept>

#include "ehsum/lattice.hpp"

using namespace ehsum;

TEST_CASE("exact simplex enumeration") {
  auto v = collect_simplex_exact(2, 2);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == MultiIndex{0, 2});
  CHECK(v[1] == MultiIndex{1, 1});
  CHECK(v[2] == MultiIndex{2, 0});

  CHECK(collect_simplex_exact(3, 0) == std::vector<MultiIndex>{{0, 0, 0}});
  CHECK(collect_simplex_exact(3, 4).size() == 15);  // C(6,2)
  CHECK(simplex_exact_count(3, 4) == 15);
}

TEST_CASE("solid simplex enumeration") {
  auto v = collect_simplex_le(2, 1);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == MultiIndex{0, 0});
  CHECK(v[1] == MultiIndex{0, 1});
  CHECK(v[2] == MultiIndex{1, 0});

  CHECK(collect_simplex_le(1, 4).size() == 5);
  CHECK(collect_simplex_le(3, 3).size() == 20);  // C(6,3)
  CHECK(simplex_le_count(3, 3) == 20);
}

TEST_CASE("box enumeration") {
  CHECK(collect_box({1, 1}).size() == 4);
  CHECK(collect_box({0, 0, 0}).size() == 1);
  CHECK(collect_box({2, 1, 2}).size() == 18);
  CHECK(box_count({2, 1, 2}) == 18);
}

TEST_CASE("streams are lexicographic, duplicate-free, and consistent") {
  for (int n = 1; n <= 4; ++n) {
    for (int N = 0; N <= 4; ++N) {
      auto exact = collect_simplex_exact(n, N);
      CHECK(exact.size() == simplex_exact_count(n, N));
      std::set<MultiIndex> seen(exact.begin(), exact.end());
      CHECK(seen.size() == exact.size());
      for (std::size_t i = 1; i < exact.size(); ++i) CHECK(exact[i - 1] < exact[i]);
      for (const auto& y : exact) {
        CHECK(weight(y) == N);
        for (int e : y) CHECK(e >= 0);
      }
    }
    // The union of the exact layers is the solid simplex.
    auto solid = collect_simplex_le(n, 4);
    CHECK(solid.size() == simplex_le_count(n, 4));
    std::set<MultiIndex> layered;
    for (int N = 0; N <= 4; ++N)
      for (const auto& y : collect_simplex_exact(n, N)) layered.insert(y);
    CHECK(layered == std::set<MultiIndex>(solid.begin(), solid.end()));
    for (std::size_t i = 1; i < solid.size(); ++i) CHECK(solid[i - 1] < solid[i]);
  }
  auto boxed = collect_box({2, 3, 1});
  CHECK(boxed.size() == box_count({2, 3, 1}));
  std::set<MultiIndex> uniq(boxed.begin(), boxed.end());
  CHECK(uniq.size() == boxed.size());
  for (std::size_t i = 1; i < boxed.size(); ++i) CHECK(boxed[i - 1] < boxed[i]);
}

TEST_CASE("degenerate shapes") {
  CHECK(collect_simplex_exact(1, 3) == std::vector<MultiIndex>{{3}});
  CHECK(collect_simplex_le(1, 0) == std::vector<MultiIndex>{{0}});
  CHECK(collect_box({0}) == std::vector<MultiIndex>{{0}});
  CHECK_THROWS_AS(SimplexExact(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SimplexLe(1, -1), std::invalid_argument);
  CHECK_THROWS_AS(Box({-1}), std::invalid_argument);
}

TEST_CASE("weight") {
  CHECK(weight({}) == 0);
  CHECK(weight({1, 2, 3}) == 6);
}
