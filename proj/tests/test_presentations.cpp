#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_helpers.hpp"

using namespace tropmon;

namespace {

Presentation worked_example() {
  return Presentation{{"e0", "e1", "e2", "e3"},
                      {{{{"e0", 1}, {"e2", 1}}, {{"e1", 2}}},
                       {{{"e1", 1}, {"e3", 1}}, {{"e2", 2}}},
                       {{{"e0", 1}, {"e3", 1}}, {{"e1", 1}, {"e2", 1}}}}};
}

}  // namespace

TEST_CASE("torified-zero generators", "[presentations]") {
  SECTION("a dies in <a,b | a+b = b>") {
    Presentation p{{"a", "b"}, {{{{"a", 1}, {"b", 1}}, {{"b", 1}}}}};
    REQUIRE(torified_zero_generators(p) == std::vector<std::string>{"a"});
  }
  SECTION("free monoid has none") {
    Presentation p{{"a"}, {}};
    REQUIRE(torified_zero_generators(p).empty());
  }
  SECTION("a dies in <a | 2a = a>") {
    Presentation p{{"a"}, {{{{"a", 2}}, {{"a", 1}}}}};
    REQUIRE(torified_zero_generators(p) == std::vector<std::string>{"a"});
  }
}

TEST_CASE("sanitize reproduces the worked example", "[presentations]") {
  auto s = sanitize(worked_example());
  REQUIRE(s.presentation.generators ==
          std::vector<std::string>{"e0", "e1", "e2", "e3", "e1'", "e2'"});
  REQUIRE(s.bipartition.left == std::vector<std::string>{"e0", "e3", "e1'", "e2'"});
  REQUIRE(s.bipartition.right == std::vector<std::string>{"e1", "e2"});
  std::vector<Relation> expected{
      {{{"e0", 1}, {"e2'", 1}}, {{"e1", 2}}},
      {{{"e1'", 1}, {"e3", 1}}, {{"e2", 2}}},
      {{{"e0", 1}, {"e3", 1}}, {{"e1", 1}, {"e2", 1}}},
      {{{"e1'", 1}}, {{"e1", 1}}},
      {{{"e2'", 1}}, {{"e2", 1}}},
  };
  REQUIRE(s.presentation.relations == expected);
  REQUIRE(is_bipartite_for(s.presentation, s.bipartition));
}

TEST_CASE("sanitize leaves a free presentation alone", "[presentations]") {
  Presentation p{{"a"}, {}};
  auto s = sanitize(p);
  REQUIRE(s.presentation == p);
  REQUIRE(s.bipartition.left == std::vector<std::string>{"a"});
  REQUIRE(s.bipartition.right.empty());
}

TEST_CASE("sanitize drops the zero generator and splits the survivor", "[presentations]") {
  Presentation p{{"a", "b"}, {{{{"a", 1}, {"b", 1}}, {{"b", 1}}}}};
  auto s = sanitize(p);
  REQUIRE(s.presentation.generators == std::vector<std::string>{"b", "b'"});
  REQUIRE(s.presentation.relations ==
          std::vector<Relation>{{{{"b'", 1}}, {{"b", 1}}}});
  REQUIRE(s.bipartition.left == std::vector<std::string>{"b'"});
  REQUIRE(s.bipartition.right == std::vector<std::string>{"b"});
}

TEST_CASE("sanitize is idempotent on bipartite positive presentations", "[presentations]") {
  auto s = sanitize(worked_example());
  auto again = sanitize(s.presentation);
  REQUIRE(again.presentation == s.presentation);
}

TEST_CASE("sanitize preserves the torification", "[presentations][property]") {
  std::mt19937 rng(1123);
  int nontrivial = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Presentation p = testutil::random_presentation(rng);
    auto s = sanitize(p);
    REQUIRE(torified_zero_generators(s.presentation).empty());
    REQUIRE(is_bipartite_for(s.presentation, s.bipartition));
    ToricMonoid before = torify(p);
    ToricMonoid after = torify(s.presentation);
    REQUIRE(toric_equal(before, after));
    if (before.rank > 0) ++nontrivial;

    // the generic doubling agrees as well
    auto u = sanitize(p, true);
    REQUIRE(torified_zero_generators(u.presentation).empty());
    REQUIRE(is_bipartite_for(u.presentation, u.bipartition));
    REQUIRE(toric_equal(torify(u.presentation), before));
  }
  REQUIRE(nontrivial > 10);
}

TEST_CASE("torified-zero agrees with the congruence on desk examples", "[presentations][oracle]") {
  // the bounded congruence walk can certify that a generator is already
  // zero in N^G/R itself, the stronger notion
  Presentation p{{"a", "b"}, {{{{"a", 1}, {"b", 1}}, {{"b", 1}}}}};
  Word a{{"a", 1}}, zero{};
  REQUIRE(testutil::congruence_reachable(p, a, zero, 6));
  REQUIRE(torified_zero_generators(p) == std::vector<std::string>{"a"});

  Presentation q{{"a", "b"}, {{{{"a", 2}}, {{"a", 1}, {"b", 1}}}}};
  // here 2a = a + b forces a = b at the torified level but neither dies
  REQUIRE(torified_zero_generators(q).empty());
  REQUIRE(!testutil::congruence_reachable(q, a, zero, 6));
}

TEST_CASE("validate rejects malformed presentations", "[presentations]") {
  Presentation dup{{"a", "a"}, {}};
  REQUIRE_THROWS_AS(validate(dup), Error);
  Presentation unknown{{"a"}, {{{{"b", 1}}, {{"a", 1}}}}};
  REQUIRE_THROWS_AS(validate(unknown), Error);
}
