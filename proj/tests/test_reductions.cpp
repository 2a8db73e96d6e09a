#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace tropmon;
using testutil::lattice_monoid;
using testutil::triangle_type;
using testutil::vec;

namespace {

std::vector<std::array<Int, 2>> heptagon() {
  return {{Int(0), Int(0)}, {Int(1), Int(0)},  {Int(2), Int(1)}, {Int(2), Int(2)},
          {Int(1), Int(3)}, {Int(0), Int(3)},  {Int(-1), Int(1)}};
}

}  // namespace

TEST_CASE("monogenize", "[reductions]") {
  SECTION("already monogenic types are untouched") {
    auto tri = triangle_type(2, 1, 3);
    REQUIRE(monogenize(tri) == tri);
  }
  SECTION("origin vertices are glued into one") {
    TropicalType two;
    two.n = 1;
    two.vertices = {{"a", 0, {}}, {"b", 0, {}}};
    two.edges = {{"a", "b", vec({0}), {}}};
    auto m = monogenize(two);
    REQUIRE(m.vertices.size() == 1);
    REQUIRE(is_monogenic(m));
    REQUIRE(toric_equal(tropical_monoid(m), tropical_monoid(two)));
  }
  SECTION("a stranded vertex receives a support edge") {
    TropicalType up;
    up.n = 1;
    up.vertices = {{"a", 0, {0}}, {"b", 0, {0}}};
    up.edges = {{"a", "b", vec({1}), {0}}};
    auto m = monogenize(up);
    REQUIRE(m.vertices.size() == 3);
    REQUIRE(m.edges.size() == 2);
    REQUIRE(is_monogenic(m));
    REQUIRE(toric_equal(tropical_monoid(m), tropical_monoid(up)));
    REQUIRE(is_representable(m).has_value() == is_representable(up).has_value());
  }
  SECTION("the double-edge panel gains one vertex and gets glued") {
    // a vertex chain with an up-down double edge, nothing over the origin
    TropicalType panel;
    panel.n = 1;
    panel.vertices = {{"a", 0, {0}}, {"b", 0, {0}}, {"c", 0, {0}}};
    panel.edges = {{"a", "b", vec({-1}), {0}},
                   {"b", "c", vec({2}), {0}},
                   {"b", "c", vec({-2}), {0}}};
    auto m = monogenize(panel);
    REQUIRE(is_monogenic(m));
    REQUIRE(toric_equal(tropical_monoid(m), tropical_monoid(panel)));
  }
}

TEST_CASE("monogenize preserves representability both ways", "[reductions][property]") {
  std::vector<TropicalType> samples;
  {
    TropicalType up;
    up.n = 1;
    up.vertices = {{"a", 0, {0}}, {"b", 0, {0}}};
    up.edges = {{"a", "b", vec({1}), {0}}};
    samples.push_back(up);
    TropicalType bad;
    bad.n = 1;
    bad.vertices = {{"a", 0, {0}}, {"b", 0, {0}}};
    bad.edges = {{"a", "b", vec({1}), {0}}, {"a", "b", vec({-1}), {0}}};
    samples.push_back(bad);
    samples.push_back(triangle_type(2, 1, 3));
  }
  for (const auto& t : samples) {
    auto m = monogenize(t);
    REQUIRE(is_representable(m).has_value() == is_representable(t).has_value());
  }
}

TEST_CASE("expansive reduction", "[reductions]") {
  SECTION("expansive input is unchanged") {
    auto tri = triangle_type(2, 1, 3);
    auto [red, k] = expansive_reduce(tri);
    REQUIRE(k == 0);
    REQUIRE(red == tri);
  }
  SECTION("a zero loop contributes one free factor") {
    auto tri = triangle_type(2, 1, 3);
    tri.edges.push_back({"v0", "v0", vec({0}), {}});
    auto [red, k] = expansive_reduce(tri);
    REQUIRE(k == 1);
    REQUIRE(red.edges.size() == 3);
    REQUIRE(toric_equal(tropical_monoid(tri),
                        direct_sum(tropical_monoid(red), free_monoid(1))));
  }
  SECTION("a zero bridge merges equal-face endpoints") {
    // two interior vertices tied at the same height
    TropicalType t;
    t.n = 1;
    t.vertices = {{"v0", 0, {}}, {"a", 0, {0}}, {"b", 0, {0}}};
    t.edges = {{"v0", "a", vec({1}), {0}},
               {"v0", "b", vec({1}), {0}},
               {"a", "b", vec({0}), {0}}};
    REQUIRE(is_monogenic(t));
    auto [red, k] = expansive_reduce(t);
    REQUIRE(k == 1);
    REQUIRE(red.vertices.size() == 2);
    REQUIRE(red.edges.size() == 2);
    REQUIRE(toric_equal(tropical_monoid(t),
                        direct_sum(tropical_monoid(red), free_monoid(1))));
  }
  SECTION("a zero bridge with mismatched faces is rejected") {
    TropicalType t;
    t.n = 1;
    t.vertices = {{"v0", 0, {}}, {"a", 0, {0}}};
    t.edges = {{"v0", "a", vec({0}), {0}}, {"v0", "a", vec({1}), {0}},
               {"v0", "a", vec({-1}), {0}}};
    REQUIRE(is_monogenic(t));
    REQUIRE_THROWS_AS(expansive_reduce(t), PreconditionFailed);
  }
  SECTION("non-monogenic input is rejected") {
    TropicalType two;
    two.n = 1;
    two.vertices = {{"a", 0, {}}, {"b", 0, {}}};
    two.edges = {{"a", "b", vec({0}), {}}};
    REQUIRE_THROWS_AS(expansive_reduce(two), NotMonogenic);
  }
}

TEST_CASE("rank formula", "[reductions]") {
  SECTION("triangle: rank 2 with 3 vertices") {
    auto [rank, nv] = check_rank_formula(triangle_type(2, 1, 3));
    REQUIRE(rank == 2);
    REQUIRE(nv == 3);
  }
  SECTION("single vertex: rank 0 with 1 vertex") {
    TropicalType pt;
    pt.n = 1;
    pt.vertices = {{"v0", 0, {}}};
    auto [rank, nv] = check_rank_formula(pt);
    REQUIRE(rank == 0);
    REQUIRE(nv == 1);
  }
  SECTION("theta graph: rank 1 with 2 vertices") {
    TropicalType theta;
    theta.n = 1;
    theta.vertices = {{"v0", 0, {}}, {"v1", 0, {0}}};
    theta.edges = {{"v0", "v1", vec({1}), {0}},
                   {"v0", "v1", vec({2}), {0}},
                   {"v0", "v1", vec({3}), {0}}};
    auto [rank, nv] = check_rank_formula(theta);
    REQUIRE(rank == 1);
    REQUIRE(nv == 2);
  }
  SECTION("hypotheses are enforced and named") {
    TropicalType bad;
    bad.n = 1;
    bad.vertices = {{"v0", 0, {}}, {"v1", 0, {0}}};
    bad.edges = {{"v0", "v1", vec({1}), {0}}, {"v0", "v1", vec({-1}), {0}}};
    try {
      check_rank_formula(bad);
      FAIL("expected PreconditionFailed");
    } catch (const PreconditionFailed& e) {
      REQUIRE(std::string(e.what()).find("representable") != std::string::npos);
    }
  }
}

TEST_CASE("unparalleled monoid", "[reductions]") {
  SECTION("no parallel edges: the pair generators mirror the lengths") {
    auto un = unparalleled_monoid(triangle_type(2, 1, 3));
    REQUIRE(minimal_generator_count(un) == 3);
    REQUIRE(toric_equal(to_toric(un), tropical_monoid(triangle_type(2, 1, 3))));
  }
  SECTION("a double edge collapses to one generator") {
    TropicalType dbl;
    dbl.n = 1;
    dbl.vertices = {{"v0", 0, {}}, {"v1", 0, {0}}};
    dbl.edges = {{"v0", "v1", vec({2}), {0}}, {"v0", "v1", vec({3}), {0}}};
    auto un = unparalleled_monoid(dbl);
    REQUIRE(minimal_generator_count(un) == 1);
    REQUIRE(toric_equal(to_toric(un), tropical_monoid(dbl)));
    // the merged generator accounts for both lengths: l0 = 3 l_pair, l1 = 2 l_pair
    REQUIRE(un.rank == 1);
  }
  SECTION("single vertex gives the empty image") {
    TropicalType pt;
    pt.n = 1;
    pt.vertices = {{"v0", 0, {}}};
    auto un = unparalleled_monoid(pt);
    REQUIRE(un.rank == 0);
    REQUIRE(minimal_generator_count(un) == 0);
  }
}

TEST_CASE("kgon obstruction certificates", "[reductions]") {
  SECTION("the heptagon is inaccessible") {
    auto c = kgon_obstruction(heptagon());
    REQUIRE(c.monoid_rank == 3);
    REQUIRE(c.extremal_ray_count == 7);
    REQUIRE(c.free_factor_count == 0);
    REQUIRE(c.forced_vertex_count == 4);
    REQUIRE(c.generator_bound == 6);
    REQUIRE(c.inaccessible);
  }
  SECTION("the unit square is inconclusive") {
    auto c = kgon_obstruction(
        {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}});
    REQUIRE(c.extremal_ray_count == 4);
    REQUIRE(!c.inaccessible);
  }
  SECTION("the smooth triangle is N^3") {
    auto c = kgon_obstruction({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}});
    REQUIRE(!c.inaccessible);
    REQUIRE(c.free_factor_count == 3);
    REQUIRE(toric_equal(c.monoid, free_monoid(3)));
  }
  SECTION("bad polygons are rejected") {
    REQUIRE_THROWS_AS(kgon_obstruction({{Int(0), Int(0)}, {Int(1), Int(0)}}), NotConvex);
    REQUIRE_THROWS_AS(kgon_obstruction({{Int(0), Int(0)},
                                        {Int(1), Int(0)},
                                        {Int(2), Int(0)},
                                        {Int(0), Int(1)}}),
                      NotConvex);
    REQUIRE_THROWS_AS(kgon_obstruction({{Int(0), Int(0)},
                                        {Int(1), Int(1)},
                                        {Int(1), Int(0)},
                                        {Int(0), Int(1)}}),
                      NotConvex);
  }
}

TEST_CASE("bounded search", "[reductions][search]") {
  SECTION("bounds are validated") {
    REQUIRE_THROWS_AS(enumerate_types(0, 1, 1), InvalidBounds);
    REQUIRE_THROWS_AS(enumerate_types(2, 0, 1), InvalidBounds);
  }
  SECTION("two vertices with unit slopes produce only free monoids") {
    auto s = enumerate_types(2, 1, 2);
    REQUIRE(s.representable > 0);
    for (const auto& e : s.entries) {
      auto [core, k] = free_factor_split(e.monoid);
      REQUIRE(core.rank == 0);
    }
  }
  SECTION("the fan monoid appears at three vertices with slope bound 3") {
    auto s = enumerate_types(3, 3, 1);
    bool found = false;
    for (const auto& e : s.entries)
      if (toric_equal(e.monoid, lattice_monoid({vec({1, 0}), vec({1, 3})}))) found = true;
    REQUIRE(found);
    REQUIRE(s.rank_violations == 0);
    REQUIRE(s.unit_violations == 0);
  }
  SECTION("catalog entries are internally consistent") {
    auto s = enumerate_types(3, 2, 2);
    REQUIRE(s.unique_monoids == s.entries.size());
    for (const auto& e : s.entries) {
      REQUIRE(validate(e.type).empty());
      REQUIRE(is_monogenic(e.type));
      REQUIRE(witness_valid(e.type, e.witness));
      REQUIRE(toric_equal(tropical_monoid(e.type), e.monoid));
    }
    for (std::size_t i = 0; i < s.entries.size(); ++i)
      for (std::size_t j = i + 1; j < s.entries.size(); ++j)
        REQUIRE(!toric_equal(s.entries[i].monoid, s.entries[j].monoid));
  }
  SECTION("sharded runs agree with the sequential one") {
    auto seq = enumerate_types(3, 2, 2, 1);
    auto par = enumerate_types(3, 2, 2, 3);
    REQUIRE(seq.candidates == par.candidates);
    REQUIRE(seq.representable == par.representable);
    REQUIRE(seq.unique_monoids == par.unique_monoids);
    REQUIRE(seq.entries.size() == par.entries.size());
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
      REQUIRE(seq.entries[i].type == par.entries[i].type);
      REQUIRE(toric_equal(seq.entries[i].monoid, par.entries[i].monoid));
    }
  }
}

TEST_CASE("parallel edges do not produce new monoids", "[reductions][search]") {
  // merging parallel edges rescales lengths by lcm factors, so a slightly
  // larger slope bound without parallels covers the same monoids
  auto single = enumerate_types(3, 4, 1);
  auto multi = enumerate_types(3, 2, 2);
  for (const auto& e : multi.entries) {
    bool seen = false;
    for (const auto& f : single.entries) seen |= toric_equal(e.monoid, f.monoid);
    REQUIRE(seen);
  }
}
