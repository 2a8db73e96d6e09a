#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"
#include "tropmon/json_io.hpp"

using namespace tropmon;
using testutil::triangle_type;
using testutil::vec;

TEST_CASE("presentation JSON round trip", "[json]") {
  Presentation p{{"e0", "e1", "e2", "e3"},
                 {{{{"e0", 1}, {"e2", 1}}, {{"e1", 2}}},
                  {{{"e1", 1}, {"e3", 1}}, {{"e2", 2}}}}};
  Json j = to_json(p);
  REQUIRE(presentation_from_json(j) == p);
  // byte determinism
  REQUIRE(j.dump() == to_json(presentation_from_json(j)).dump());
}

TEST_CASE("tropical type JSON round trip, both modes", "[json]") {
  TropicalType t = triangle_type(2, 1, 3);
  t.legs = {{"u1", 1, vec({1}), {0}}};
  REQUIRE(type_from_json(to_json(t)) == t);

  TropicalType affine;
  affine.n = 2;
  affine.mode = TargetMode::affine;
  affine.vertices = {{"a", 1, {}}, {"b", 0, {}}};
  affine.edges = {{"a", "b", vec({1, -1}), {}}, {"b", "a", vec({1, -1}), {}}};
  Json j = to_json(affine);
  REQUIRE(!j["vertices"][0].contains("face"));
  REQUIRE(type_from_json(j) == affine);
}

TEST_CASE("toric monoid JSON round trip", "[json]") {
  ToricMonoid m = torify({{"a", "b"}, {}});
  Json j = to_json(m);
  ToricMonoid back = toric_from_json(j);
  REQUIRE(back == m);
}

TEST_CASE("witnesses serialize as exact rational strings", "[json]") {
  DualWitness w{{"l0", Rat(1, 3)}, {"l1", Rat(7)}};
  Json j = to_json(w);
  REQUIRE(j["l0"] == "1/3");
  REQUIRE(j["l1"] == "7");
  REQUIRE(witness_from_json(j) == w);
}

TEST_CASE("construction report JSON round trip", "[json]") {
  Presentation p{{"a1", "a2"}, {{{{"a1", 1}}, {{"a2", 1}}}}};
  auto rep = construct_type(p, {{"a1"}, {"a2"}});
  Json j = to_json(rep);
  ConstructionReport back = report_from_json(j);
  REQUIRE(back.type == rep.type);
  REQUIRE(back.witness == rep.witness);
  REQUIRE(back.presentation_echo == rep.presentation_echo);
  REQUIRE(back.leaf1 == rep.leaf1);
  REQUIRE(back.leaf2 == rep.leaf2);
  // gluing works off the parsed report
  TropicalType glued = affine_glue(back);
  REQUIRE(graph_genus(glued) == 1);
}

TEST_CASE("huge integers survive the string fallback", "[json]") {
  Int big = 1;
  for (int i = 0; i < 30; ++i) big *= 1000003;
  Json j = int_to_json(big);
  REQUIRE(j.is_string());
  REQUIRE(int_from_json(j) == big);
  REQUIRE(int_from_json(int_to_json(Int(-42))) == -42);
}

TEST_CASE("parse errors are reported as such", "[json]") {
  REQUIRE_THROWS_AS(presentation_from_json(Json::object()), ParseError);
  REQUIRE_THROWS_AS(int_from_json(Json(1.5)), ParseError);
  Json bad_poly = Json::array({Json::array({0.5, 1})});
  REQUIRE_THROWS_AS(polygon_from_json(bad_poly), NotLattice);
}

TEST_CASE("catalog files accumulate runs keyed by bounds", "[json]") {
  auto path = std::filesystem::temp_directory_path() / "tropmon_test_catalog.json";
  std::filesystem::remove(path);
  search_types(2, 1, 1, path);
  search_types(2, 2, 1, path);
  Json j = load_json_file(path);
  REQUIRE(j["runs"].size() == 2);
  // re-running the same bounds replaces instead of appending
  search_types(2, 1, 1, path);
  j = load_json_file(path);
  REQUIRE(j["runs"].size() == 2);
  REQUIRE(j["runs"][0]["bounds"]["slope_bound"] == 1);
  REQUIRE(j["runs"][1]["bounds"]["slope_bound"] == 2);
  std::filesystem::remove(path);
}
