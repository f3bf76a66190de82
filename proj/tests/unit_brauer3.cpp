#include <doctest.h>

#include "dp6/brauer3.hpp"
#include "test_fields.hpp"

using namespace dp6;
using namespace dp6::testing;

TEST_CASE("decompose3: rank-1 identity and negation") {
  Brauer3Group id1 = Brauer3Group::identity_involution(1);
  auto [p, m] = decompose3({1}, id1);
  CHECK(p == std::vector<int>{1});
  CHECK(m == std::vector<int>{0});

  Brauer3Group neg1 = Brauer3Group::negation(1);
  auto [p2, m2] = decompose3({1}, neg1);
  CHECK(p2 == std::vector<int>{0});
  CHECK(m2 == std::vector<int>{1});
}

TEST_CASE("decompose3: coordinate swap on (Z/3)^2") {
  Brauer3Group g = Brauer3Group::coordinate_swap(2);
  auto [p, m] = decompose3({1, 0}, g);
  CHECK(p == std::vector<int>{2, 2});
  CHECK(m == std::vector<int>{2, 1});
}

TEST_CASE("w_subgroup: the spec cases") {
  CHECK(w_subgroup(Brauer3Group::identity_involution(1)).empty());
  CHECK(w_subgroup(Brauer3Group::negation(1)).size() == 1);
  Brauer3Group sw = Brauer3Group::coordinate_swap(2);
  auto w = w_subgroup(sw);
  REQUIRE(w.size() == 1);
  // spanned by (1, -1)
  CHECK(((w[0] == std::vector<int>{1, 2}) || (w[0] == std::vector<int>{2, 1})));
  auto f = fixed_subgroup(sw);
  REQUIRE(f.size() == 1);
  CHECK(((f[0] == std::vector<int>{1, 1}) || (f[0] == std::vector<int>{2, 2})));
  CHECK(direct_sum_check(sw));
}

TEST_CASE("decompose3 exhaustive over (Z/3)^n, n <= 4, documented involutions") {
  for (int rank = 1; rank <= 4; ++rank) {
    std::vector<Brauer3Group> invs{Brauer3Group::identity_involution(rank),
                                   Brauer3Group::negation(rank)};
    if (rank >= 2) invs.push_back(Brauer3Group::coordinate_swap(rank));
    for (const auto& g : invs) {
      CHECK(direct_sum_check(g));
      int total = 1;
      for (int i = 0; i < rank; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::vector<int> x(rank);
        int c = code;
        for (int i = 0; i < rank; ++i) { x[i] = c % 3; c /= 3; }
        auto [plus, minus] = decompose3(x, g);
        auto splus = g.apply(plus);
        auto sminus = g.apply(minus);
        for (int i = 0; i < rank; ++i) {
          CHECK((plus[i] + minus[i]) % 3 == x[i]);
          CHECK(splus[i] == plus[i]);
          CHECK((sminus[i] + minus[i]) % 3 == 0);
        }
      }
    }
  }
}

TEST_CASE("involution validation") {
  CHECK_THROWS_AS(Brauer3Group::make(2, {{1, 1}, {0, 1}}), Error);  // square != id
  CHECK_THROWS_AS(Brauer3Group::make(2, {{1, 0}}), Error);
}

TEST_CASE("cyclic algebra data: opposite is an involution, split pair swaps") {
  FieldPtr C = cyclic_cubic();
  auto c = CyclicAlgebraDatum::make(C, 1, Rat(2));
  CHECK(opposite(c).a == Rat(1, 2));
  CHECK(opposite(opposite(c)) == c);
  auto s = CyclicAlgebraDatum::make(C, 1, Rat(1));
  CHECK(opposite(s) == s);  // the split class is self-opposite

  auto pair = split_pair(c);
  CHECK(pair.first == c);
  CHECK(pair.second == opposite(c));
  // the factor-swap involution composed with opposite returns the same pair
  auto swapped = std::make_pair(opposite(pair.second), opposite(pair.first));
  CHECK(swapped.first == pair.first);
  CHECK(swapped.second == pair.second);
}

TEST_CASE("cyclic algebra data validation") {
  FieldPtr C = cyclic_cubic();
  CHECK_THROWS_AS(CyclicAlgebraDatum::make(C, 0, Rat(2)), Error);  // identity generator
  CHECK_THROWS_AS(CyclicAlgebraDatum::make(C, 1, Rat(0)), Error);
  CHECK_THROWS_AS(CyclicAlgebraDatum::make(quad_m3(), 1, Rat(2)), Error);
}
