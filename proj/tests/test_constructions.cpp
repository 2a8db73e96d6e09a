#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_helpers.hpp"

using namespace tropmon;
using testutil::lattice_monoid;
using testutil::vec;

namespace {

Presentation worked_example() {
  return Presentation{{"e0", "e1", "e2", "e3"},
                      {{{{"e0", 1}, {"e2", 1}}, {{"e1", 2}}},
                       {{{"e1", 1}, {"e3", 1}}, {{"e2", 2}}},
                       {{{"e0", 1}, {"e3", 1}}, {{"e1", 1}, {"e2", 1}}}}};
}

}  // namespace

TEST_CASE("the worked example reproduces the published slope table", "[constructions]") {
  auto s = sanitize(worked_example());
  auto rep = construct_type(s.presentation, s.bipartition);

  REQUIRE(rep.type.n == 5);
  REQUIRE(rep.type.vertices.size() == 7);
  REQUIRE(rep.type.edges.size() == 6);
  REQUIRE(graph_genus(rep.type) == 0);

  std::map<std::string, Vec> slopes;
  for (std::size_t k = 0; k < rep.type.edges.size(); ++k)
    slopes[rep.edge_generators[k]] = rep.type.edges[k].slope;
  REQUIRE(slopes.at("e0") == vec({1, 0, 1, 0, 0}));
  REQUIRE(slopes.at("e3") == vec({0, 1, 1, 0, 0}));
  REQUIRE(slopes.at("e1'") == vec({0, 1, 0, 1, 0}));
  REQUIRE(slopes.at("e2'") == vec({1, 0, 0, 0, 1}));
  REQUIRE(slopes.at("e1") == vec({2, 0, 1, 1, 0}));
  REQUIRE(slopes.at("e2") == vec({0, 2, 1, 0, 1}));

  REQUIRE(presentations_agree(rep.presentation_echo, s.presentation));
  REQUIRE(witness_valid(rep.type, rep.witness));
  REQUIRE(toric_equal(rep.monoid, torify(s.presentation)));
  REQUIRE(toric_equal(rep.monoid, lattice_monoid({vec({1, 0}), vec({1, 3})})));

  // the junction carries the full orthant, the leaves sit over the origin
  REQUIRE(rep.type.vertex("v0").face == FaceSet{0, 1, 2, 3, 4});
  REQUIRE(rep.type.vertex("v1").face.empty());
  REQUIRE(rep.type.vertex("v2").face.empty());
}

TEST_CASE("construct_type validates its input", "[constructions]") {
  Presentation p{{"a", "b"}, {{{{"a", 1}}, {{"b", 1}}}}};
  SECTION("wrong bipartition") {
    REQUIRE_THROWS_AS(construct_type(p, {{"a", "b"}, {}}), NotBipartite);
  }
  SECTION("torified-zero generator") {
    Presentation zero{{"a", "b"}, {{{{"a", 1}, {"b", 1}}, {{"b", 1}}}}};
    REQUIRE_THROWS_AS(construct_type(zero, {{"a"}, {"b"}}), NotPositive);
  }
  SECTION("a vacuous relation breaks the junction face") {
    Presentation vac{{"a", "b"}, {{{{"a", 1}}, {{"b", 1}}}, {{}, {}}}};
    REQUIRE_THROWS_AS(construct_type(vac, {{"a"}, {"b"}}), NotSharp);
  }
}

TEST_CASE("two-generator identification gives a path with monoid N", "[constructions]") {
  Presentation p{{"a1", "a2"}, {{{{"a1", 1}}, {{"a2", 1}}}}};
  auto rep = construct_type(p, {{"a1"}, {"a2"}});
  REQUIRE(rep.type.edges.size() == 2);
  REQUIRE(rep.type.n == 1);
  REQUIRE(toric_equal(rep.monoid, free_monoid(1)));
  REQUIRE(presentations_agree(rep.presentation_echo, p));
}

TEST_CASE("triangle presentation goes through the full pipeline", "[constructions]") {
  Presentation tri{{"v1", "v2", "v3"}, {{{{"v1", 2}, {"v2", 1}}, {{"v3", 3}}}}};
  auto s = sanitize(tri);
  auto rep = construct_type(s.presentation, s.bipartition);
  REQUIRE(toric_equal(rep.monoid, torify(tri)));
  REQUIRE(toric_equal(rep.monoid, lattice_monoid({vec({1, 0}), vec({1, 3})})));
}

TEST_CASE("soundness sweep over random presentations", "[constructions][property]") {
  std::mt19937 rng(97);
  int done = 0;
  while (done < 25) {
    Presentation p = testutil::random_presentation(rng);
    ToricMonoid target = torify(p);
    if (target.rank == 0) continue;
    ++done;
    auto s = sanitize(p);
    auto rep = construct_type(s.presentation, s.bipartition);
    REQUIRE(presentations_agree(rep.presentation_echo, s.presentation));
    REQUIRE(witness_valid(rep.type, rep.witness));
    REQUIRE(toric_equal(rep.monoid, target));
    REQUIRE(graph_genus(rep.type) == 0);
  }
}

TEST_CASE("rank-2 realization", "[constructions]") {
  SECTION("(1,3) realizes the fan with slopes (2,1,3)") {
    auto rep = realize_rank2(1, 3);
    auto s = triangle_slopes(rep);
    REQUIRE(s == std::array<Int, 3>{2, 1, 3});
    REQUIRE(toric_equal(rep.monoid, lattice_monoid({vec({1, 0}), vec({1, 3})})));
    REQUIRE(rep.monoid.hilbert.size() == 4);
  }
  SECTION("(1,1) degenerates to N^2 through a zero slope") {
    auto rep = realize_rank2(1, 1);
    REQUIRE(triangle_slopes(rep) == std::array<Int, 3>{0, 1, 1});
    REQUIRE(toric_equal(rep.monoid, free_monoid(2)));
  }
  SECTION("(1,2) gives slopes (1,1,2)") {
    auto rep = realize_rank2(1, 2);
    REQUIRE(triangle_slopes(rep) == std::array<Int, 3>{1, 1, 2});
    REQUIRE(toric_equal(rep.monoid, lattice_monoid({vec({1, 0}), vec({1, 2})})));
  }
  SECTION("hilbert size over the (1,m) family is m+1") {
    for (long m = 1; m <= 6; ++m) {
      auto rep = realize_rank2(1, m);
      REQUIRE(rep.monoid.hilbert.size() == static_cast<std::size_t>(m + 1));
    }
  }
  SECTION("v3 can be overridden when it still spans") {
    auto rep = realize_rank2(2, 3, std::make_pair(Int(1), Int(1)));
    REQUIRE(toric_equal(rep.monoid, lattice_monoid({vec({1, 0}), vec({2, 3})})));
    auto interior = realize_rank2(1, 3, std::make_pair(Int(1), Int(2)));
    REQUIRE(toric_equal(interior.monoid, lattice_monoid({vec({1, 0}), vec({1, 3})})));
    // (2,0) lies in the cone but spans an index-3 sublattice with the rays
    REQUIRE_THROWS_AS(realize_rank2(1, 3, std::make_pair(Int(2), Int(0))), InvalidConeData);
    REQUIRE_THROWS_AS(realize_rank2(1, 3, std::make_pair(Int(-1), Int(0))), InvalidConeData);
  }
  SECTION("preconditions") {
    REQUIRE_THROWS_AS(realize_rank2(2, 4), InvalidConeData);
    REQUIRE_THROWS_AS(realize_rank2(3, 2), InvalidConeData);
    REQUIRE_THROWS_AS(realize_rank2(0, 1), InvalidConeData);
  }
}

TEST_CASE("affine gluing", "[constructions]") {
  SECTION("the worked example becomes a genus-1 type with the same monoid") {
    auto s = sanitize(worked_example());
    auto rep = construct_type(s.presentation, s.bipartition);
    TropicalType glued = affine_glue(rep);
    REQUIRE(glued.mode == TargetMode::affine);
    REQUIRE(glued.vertices.size() == 6);
    REQUIRE(glued.edges.size() == 6);
    REQUIRE(graph_genus(glued) == 1);
    REQUIRE(toric_equal(torify(affine_presentation(glued)), rep.monoid));
  }
  SECTION("the two-edge path closes into a 2-cycle") {
    Presentation p{{"a1", "a2"}, {{{{"a1", 1}}, {{"a2", 1}}}}};
    auto rep = construct_type(p, {{"a1"}, {"a2"}});
    TropicalType glued = affine_glue(rep);
    REQUIRE(glued.vertices.size() == 2);
    REQUIRE(glued.edges.size() == 2);
    REQUIRE(graph_genus(glued) == 1);
    REQUIRE(toric_equal(tropical_monoid(glued), free_monoid(1)));
  }
}
