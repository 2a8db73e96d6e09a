#include "tropmon/json_io.hpp"

#include <fstream>

namespace tropmon {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

std::string require_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_float()) throw ParseError("expected an integer, found a float");
  throw ParseError("expected an integer");
}

std::string rat_to_string(const Rat& q) { return q.str(); }

Rat rat_from_string(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw ParseError("not a rational: " + s);
  }
}

namespace {

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer vector");
  Vec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Json word_to_json(const Word& w) {
  Json o = Json::object();
  for (const auto& [g, c] : w) o[g] = int_to_json(c);
  return o;
}

Word word_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("relation side must be an object");
  Word w;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Int c = int_from_json(it.value());
    if (c < 0) throw ParseError("negative coefficient for " + it.key());
    if (c > 0) w[it.key()] = c;
  }
  return w;
}

Json face_to_json(const FaceSet& f) {
  Json a = Json::array();
  for (int i : f) a.push_back(i);
  return a;
}

FaceSet face_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("face must be an array of indices");
  FaceSet f;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("face indices must be integers");
    f.insert(x.get<int>());
  }
  return f;
}

}  // namespace

Json to_json(const Presentation& p) {
  Json j;
  j["generators"] = p.generators;
  Json rels = Json::array();
  for (const auto& r : p.relations) {
    Json rel;
    rel["lhs"] = word_to_json(r.lhs);
    rel["rhs"] = word_to_json(r.rhs);
    rels.push_back(std::move(rel));
  }
  j["relations"] = std::move(rels);
  return j;
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  for (const auto& g : field(j, "generators"))
    p.generators.push_back(require_string(g, "generator name"));
  for (const auto& r : field(j, "relations"))
    p.relations.push_back({word_from_json(field(r, "lhs")), word_from_json(field(r, "rhs"))});
  validate(p);
  return p;
}

Json to_json(const Bipartition& b) {
  Json j;
  j["left"] = b.left;
  j["right"] = b.right;
  return j;
}

Bipartition bipartition_from_json(const Json& j) {
  Bipartition b;
  for (const auto& g : field(j, "left")) b.left.push_back(require_string(g, "generator"));
  for (const auto& g : field(j, "right")) b.right.push_back(require_string(g, "generator"));
  return b;
}

Json to_json(const FpMonoidImage& m) {
  Json j;
  j["rank"] = m.rank;
  Json images = Json::array();
  for (const Vec& v : m.images) images.push_back(vec_to_json(v));
  j["images"] = std::move(images);
  if (!m.names.empty()) j["names"] = m.names;
  return j;
}

Json to_json(const ToricMonoid& m) {
  Json j;
  j["rank"] = m.rank;
  Json h = Json::array();
  for (const Vec& v : m.hilbert) h.push_back(vec_to_json(v));
  j["hilbert"] = std::move(h);
  Json gi = Json::object();
  for (const auto& [g, v] : m.generator_images) gi[g] = vec_to_json(v);
  j["generator_images"] = std::move(gi);
  return j;
}

ToricMonoid toric_from_json(const Json& j) {
  ToricMonoid m;
  m.rank = field(j, "rank").get<std::size_t>();
  for (const auto& v : field(j, "hilbert")) m.hilbert.push_back(vec_from_json(v));
  if (j.contains("generator_images"))
    for (auto it = j["generator_images"].begin(); it != j["generator_images"].end(); ++it)
      m.generator_images[it.key()] = vec_from_json(it.value());
  return m;
}

Json to_json(const TropicalType& t) {
  const bool orthant = t.mode == TargetMode::orthant;
  Json j;
  j["n"] = t.n;
  j["mode"] = orthant ? "orthant" : "affine";
  Json vs = Json::array();
  for (const auto& v : t.vertices) {
    Json o;
    o["id"] = v.id;
    o["genus"] = int_to_json(v.genus);
    if (orthant) o["face"] = face_to_json(v.face);
    vs.push_back(std::move(o));
  }
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const auto& e : t.edges) {
    Json o;
    o["from"] = e.from;
    o["to"] = e.to;
    o["slope"] = vec_to_json(e.slope);
    if (orthant) o["face"] = face_to_json(e.face);
    es.push_back(std::move(o));
  }
  j["edges"] = std::move(es);
  Json ls = Json::array();
  for (const auto& l : t.legs) {
    Json o;
    o["at"] = l.at;
    o["marking"] = l.marking;
    o["slope"] = vec_to_json(l.slope);
    if (orthant) o["face"] = face_to_json(l.face);
    ls.push_back(std::move(o));
  }
  j["legs"] = std::move(ls);
  return j;
}

TropicalType type_from_json(const Json& j) {
  TropicalType t;
  t.n = field(j, "n").get<int>();
  std::string mode = require_string(field(j, "mode"), "mode");
  if (mode == "orthant")
    t.mode = TargetMode::orthant;
  else if (mode == "affine")
    t.mode = TargetMode::affine;
  else
    throw ParseError("mode must be orthant or affine");
  const bool orthant = t.mode == TargetMode::orthant;
  for (const auto& v : field(j, "vertices")) {
    TropVertex tv;
    tv.id = require_string(field(v, "id"), "vertex id");
    if (v.contains("genus")) tv.genus = int_from_json(v["genus"]);
    if (orthant && v.contains("face")) tv.face = face_from_json(v["face"]);
    t.vertices.push_back(std::move(tv));
  }
  for (const auto& e : field(j, "edges")) {
    TropEdge te;
    te.from = require_string(field(e, "from"), "edge endpoint");
    te.to = require_string(field(e, "to"), "edge endpoint");
    te.slope = vec_from_json(field(e, "slope"));
    if (orthant && e.contains("face")) te.face = face_from_json(e["face"]);
    t.edges.push_back(std::move(te));
  }
  if (j.contains("legs"))
    for (const auto& l : j["legs"]) {
      TropLeg tl;
      tl.at = require_string(field(l, "at"), "leg vertex");
      if (l.contains("marking")) tl.marking = l["marking"].get<int>();
      tl.slope = vec_from_json(field(l, "slope"));
      if (orthant && l.contains("face")) tl.face = face_from_json(l["face"]);
      t.legs.push_back(std::move(tl));
    }
  return t;
}

Json to_json(const DualWitness& w) {
  Json j = Json::object();
  for (const auto& [g, q] : w) j[g] = rat_to_string(q);
  return j;
}

DualWitness witness_from_json(const Json& j) {
  DualWitness w;
  for (auto it = j.begin(); it != j.end(); ++it)
    w[it.key()] = rat_from_string(require_string(it.value(), "witness value"));
  return w;
}

Json to_json(const ConstructionReport& r) {
  Json j;
  j["type"] = to_json(r.type);
  j["witness"] = to_json(r.witness);
  j["echo_presentation"] = to_json(r.presentation_echo);
  j["monoid"] = to_json(r.monoid);
  j["leaves"] = Json::array({r.leaf1, r.leaf2});
  j["edge_generators"] = r.edge_generators;
  return j;
}

ConstructionReport report_from_json(const Json& j) {
  ConstructionReport r;
  r.type = type_from_json(field(j, "type"));
  r.witness = witness_from_json(field(j, "witness"));
  r.presentation_echo = presentation_from_json(field(j, "echo_presentation"));
  r.monoid = toric_from_json(field(j, "monoid"));
  const auto& leaves = field(j, "leaves");
  if (!leaves.is_array() || leaves.size() != 2) throw ParseError("leaves must name two vertices");
  r.leaf1 = require_string(leaves[0], "leaf");
  r.leaf2 = require_string(leaves[1], "leaf");
  if (j.contains("edge_generators"))
    for (const auto& g : j["edge_generators"])
      r.edge_generators.push_back(require_string(g, "edge generator"));
  return r;
}

Json to_json(const ObstructionCertificate& c) {
  Json j;
  j["monoid_rank"] = c.monoid_rank;
  j["extremal_ray_count"] = c.extremal_ray_count;
  j["free_factor_count"] = c.free_factor_count;
  j["forced_vertex_count"] = c.forced_vertex_count;
  j["generator_bound"] = c.generator_bound;
  j["verdict"] = c.inaccessible ? "inaccessible" : "inconclusive";
  j["monoid"] = to_json(c.monoid);
  return j;
}

std::vector<std::array<Int, 2>> polygon_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) arr = &field(j, "polygon");
  if (!arr->is_array()) throw ParseError("polygon must be an array of [x, y] pairs");
  std::vector<std::array<Int, 2>> out;
  for (const auto& p : *arr) {
    if (!p.is_array() || p.size() != 2) throw ParseError("polygon vertex must be [x, y]");
    if (p[0].is_number_float() || p[1].is_number_float())
      throw NotLattice("polygon vertices must be lattice points");
    out.push_back({int_from_json(p[0]), int_from_json(p[1])});
  }
  return out;
}

Json to_json(const SearchSummary& s, bool with_entries) {
  Json j;
  Json bounds;
  bounds["vertices"] = s.bounds.vertex_count;
  bounds["slope_bound"] = s.bounds.slope_bound;
  bounds["multiplicity_bound"] = s.bounds.multiplicity_bound;
  j["bounds"] = std::move(bounds);
  Json summary;
  summary["candidates"] = s.candidates;
  summary["valid_types"] = s.valid_types;
  summary["representable"] = s.representable;
  summary["unique_monoids"] = s.unique_monoids;
  summary["rank_violations"] = s.rank_violations;
  summary["unit_violations"] = s.unit_violations;
  summary["max_rays_no_free_factor"] = s.max_rays_no_free_factor;
  j["summary"] = std::move(summary);
  if (with_entries) {
    Json entries = Json::array();
    for (const auto& e : s.entries) {
      Json o;
      o["type"] = to_json(e.type);
      o["monoid"] = to_json(e.monoid);
      o["witness"] = to_json(e.witness);
      entries.push_back(std::move(o));
    }
    j["entries"] = std::move(entries);
  }
  return j;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_catalog_run(const std::filesystem::path& path, const SearchSummary& s) {
  Json catalog;
  catalog["runs"] = Json::array();
  if (std::filesystem::exists(path)) {
    try {
      Json existing = load_json_file(path);
      if (existing.contains("runs") && existing["runs"].is_array()) catalog = existing;
    } catch (const ParseError&) {
      // unreadable catalog: start over rather than fail the run
    }
  }
  Json run = to_json(s, true);
  bool replaced = false;
  for (auto& r : catalog["runs"])
    if (r.contains("bounds") && r["bounds"] == run["bounds"]) {
      r = run;
      replaced = true;
      break;
    }
  if (!replaced) catalog["runs"].push_back(std::move(run));
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << catalog.dump(2) << "\n";
}

}  // namespace tropmon
