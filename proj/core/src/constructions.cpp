#include "tropmon/constructions.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <sstream>

namespace tropmon {

ConstructionReport construct_type(const Presentation& p, const Bipartition& b) {
  validate(p);
  if (!is_bipartite_for(p, b)) throw NotBipartite();
  {
    auto zero = torified_zero_generators(p);
    if (!zero.empty()) {
      std::ostringstream os;
      os << "torified-zero generators:";
      for (const auto& g : zero) os << " " << g;
      throw NotPositive(os.str());
    }
  }
  {
    // the torification must be sharp: a single functional strictly
    // positive on every generator
    IntMatrix eq = relation_matrix(p);
    std::set<std::size_t> strict;
    for (std::size_t j = 0; j < p.generators.size(); ++j) strict.insert(j);
    if (!strict_lp_feasible(eq, strict, {}).has_value())
      throw NotSharp("no functional is strictly positive on all generators");
  }

  const std::size_t n = p.relations.size();

  // slope of the edge labelled g: coordinate i is the coefficient of g in
  // relation i (taken from the side g lives on)
  auto slope_of = [&](const std::string& g, bool left) {
    Vec m(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
      const Word& w = left ? p.relations[i].lhs : p.relations[i].rhs;
      auto it = w.find(g);
      if (it != w.end()) m[i] = it->second;
    }
    return m;
  };

  ConstructionReport rep;
  TropicalType& t = rep.type;
  t.n = static_cast<int>(n);
  t.mode = TargetMode::orthant;

  auto build_path = [&](const std::vector<std::string>& gens, bool left,
                        const std::string& leaf_name, std::vector<FaceSet>& faces) {
    // vertices leaf, p?_1, ..., then v0 (created by the caller)
    std::string prev = leaf_name;
    FaceSet face;
    if (!gens.empty()) t.vertices.push_back({leaf_name, 0, {}});
    faces.push_back(face);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const bool last = j + 1 == gens.size();
      Vec m = slope_of(gens[j], left);
      FaceSet next = face;
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] > 0) next.insert(static_cast<int>(i));
      std::string cur =
          last ? "v0" : (left ? "p1_" : "p2_") + std::to_string(j + 1);
      if (!last) t.vertices.push_back({cur, 0, next});
      FaceSet edge_face = next;  // face union of endpoints = downstream face
      t.edges.push_back({prev, cur, std::move(m), std::move(edge_face)});
      rep.edge_generators.push_back(gens[j]);
      prev = cur;
      face = next;
      faces.push_back(face);
    }
  };

  std::vector<FaceSet> faces1, faces2;
  build_path(b.left, true, "v1", faces1);
  build_path(b.right, false, "v2", faces2);
  rep.leaf1 = b.left.empty() ? "v0" : "v1";
  rep.leaf2 = b.right.empty() ? "v0" : "v2";

  // consistency at the junction: both flows must reach all of R^n_+
  const FaceSet& end1 = faces1.back();
  const FaceSet& end2 = faces2.back();
  for (std::size_t i = 0; i < n; ++i) {
    if (!end1.count(static_cast<int>(i)))
      throw NotSharp("relation " + std::to_string(i) + " has no generator on the left side");
    if (!end2.count(static_cast<int>(i)))
      throw NotSharp("relation " + std::to_string(i) + " has no generator on the right side");
  }
  FaceSet full;
  for (std::size_t i = 0; i < n; ++i) full.insert(static_cast<int>(i));
  t.vertices.push_back({"v0", 0, full});
  // edges into v0 were created before v0 carried its face
  for (auto& e : t.edges)
    if (e.to == "v0") {
      FaceSet f = t.vertex(e.from).face;
      f.insert(full.begin(), full.end());
      e.face = std::move(f);
    }
  require_valid(t);

  // the continuity relations at v0, coordinate by coordinate, reproduce
  // the input presentation with edges named by their generators
  rep.presentation_echo.generators = b.left;
  rep.presentation_echo.generators.insert(rep.presentation_echo.generators.end(),
                                          b.right.begin(), b.right.end());
  for (std::size_t i = 0; i < n; ++i) {
    Relation r;
    for (std::size_t k = 0; k < t.edges.size(); ++k) {
      const Int& c = t.edges[k].slope[i];
      if (c == 0) continue;
      bool left = k < b.left.size();
      (left ? r.lhs : r.rhs)[rep.edge_generators[k]] = c;
    }
    rep.presentation_echo.relations.push_back(std::move(r));
  }

  auto w = is_representable(t);
  if (!w) throw Error("internal: constructed type is not representable");
  rep.witness = std::move(*w);
  rep.monoid = tropical_monoid(t);
  return rep;
}

ConstructionReport realize_rank2(const Int& k, const Int& m,
                                 std::optional<std::pair<Int, Int>> v3_override) {
  if (!(k > 0 && k <= m && gcd(k, m) == 1))
    throw InvalidConeData("need 0 < k <= m with gcd(k,m) = 1");
  Vec v1{Int(1), Int(0)}, v2{k, m};
  Vec v3{Int(1), Int(1)};
  if (v3_override) v3 = {v3_override->first, v3_override->second};
  if (!in_cone(v3, {v1, v2}))
    throw InvalidConeData("v3 must lie in cone(v1, v2)");
  {
    SpanLattice s = span_lattice(2, {v1, v2, v3});
    IntMatrix mm(2, 3);
    for (std::size_t i = 0; i < 2; ++i) {
      mm.at(i, 0) = v1[i];
      mm.at(i, 1) = v2[i];
      mm.at(i, 2) = v3[i];
    }
    SnfResult snf = smith_normal_form(mm);
    if (s.dim != 2 || snf.d.at(0, 0) != 1 || snf.d.at(1, 1) != 1)
      throw InvalidConeData("v1, v2, v3 must span Z^2");
  }

  // the kernel of [v1 v2 v3] is one relation m1 v1 + m2 v2 = m3 v3
  IntMatrix mm(2, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    mm.at(i, 0) = v1[i];
    mm.at(i, 1) = v2[i];
    mm.at(i, 2) = v3[i];
  }
  auto kern = kernel_basis(mm);
  assert(kern.size() == 1);
  Vec rel = primitive(kern[0]);
  if (rel[2] > 0) rel = negate(rel);  // v3 inside the cone forces the signs
  assert(rel[0] >= 0 && rel[1] >= 0 && rel[2] < 0);
  const Int m1 = rel[0], m2 = rel[1], m3 = -rel[2];

  ConstructionReport rep;
  TropicalType& t = rep.type;
  t.n = 1;
  t.mode = TargetMode::orthant;
  FaceSet f1 = m1 > 0 ? FaceSet{0} : FaceSet{};
  t.vertices = {{"v0", 0, {}}, {"u1", 0, f1}, {"u2", 0, {0}}};
  t.edges = {{"v0", "u1", {m1}, f1},
             {"u1", "u2", {m2}, {0}},
             {"v0", "u2", {m3}, {0}}};
  rep.edge_generators = {"l0", "l1", "l2"};
  rep.leaf1 = "u1";
  rep.leaf2 = "u2";
  require_valid(t);

  // the unique kernel relation, directly; for m1 = 0 the triangle is not
  // monogenic (two origin vertices) but the echo is still this relation
  rep.presentation_echo.generators = {"l0", "l1", "l2"};
  {
    Relation r;
    if (m1 > 0) r.lhs["l0"] = m1;
    if (m2 > 0) r.lhs["l1"] = m2;
    r.rhs["l2"] = m3;
    rep.presentation_echo.relations.push_back(std::move(r));
  }
  auto w = is_representable(t);
  if (!w) throw Error("internal: triangle type is not representable");
  rep.witness = std::move(*w);
  rep.monoid = tropical_monoid(t);
  return rep;
}

std::array<Int, 3> triangle_slopes(const ConstructionReport& r) {
  if (r.type.edges.size() != 3 || r.type.n != 1)
    throw PreconditionFailed("not a triangle report");
  return {r.type.edges[0].slope[0], r.type.edges[1].slope[0], r.type.edges[2].slope[0]};
}

TropicalType affine_glue(const ConstructionReport& r) {
  TropicalType t = r.type;
  const std::string& keep = r.leaf1;
  const std::string& gone = r.leaf2;
  if (keep != gone) {
    Int genus = 0;
    std::vector<TropVertex> vertices;
    for (const auto& v : t.vertices) {
      if (v.id == gone) {
        genus = v.genus;
        continue;
      }
      vertices.push_back(v);
    }
    t.vertices = std::move(vertices);
    for (auto& v : t.vertices)
      if (v.id == keep) v.genus += genus;
    for (auto& e : t.edges) {
      if (e.from == gone) e.from = keep;
      if (e.to == gone) e.to = keep;
    }
    for (auto& l : t.legs)
      if (l.at == gone) l.at = keep;
  }
  t.mode = TargetMode::affine;
  for (auto& v : t.vertices) v.face.clear();
  for (auto& e : t.edges) e.face.clear();
  for (auto& l : t.legs) l.face.clear();
  require_valid(t);
  return t;
}

}  // namespace tropmon
