#include "tropmon/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace tropmon {

bool is_monogenic(const TropicalType& t) { return monogenic(t); }

namespace {

std::string fresh_vertex_id(const TropicalType& t, const std::string& base) {
  std::set<std::string> taken;
  for (const auto& v : t.vertices) taken.insert(v.id);
  std::string name = base;
  while (taken.count(name)) name += "'";
  return name;
}

}  // namespace

TropicalType monogenize(const TropicalType& t) {
  require_valid(t);
  if (t.mode != TargetMode::orthant || t.n != 1)
    throw PreconditionFailed("monogenize needs orthant mode with n = 1");

  TropicalType out = t;

  // support vertices for interior vertices with no downward edge
  std::vector<std::string> needs_support;
  for (const auto& v : out.vertices) {
    if (v.face.empty()) continue;
    bool has_negative = false;
    for (const auto& e : out.edges) {
      if (e.from == v.id && e.slope[0] < 0) has_negative = true;
      if (e.to == v.id && e.slope[0] > 0) has_negative = true;
    }
    if (!has_negative) needs_support.push_back(v.id);
  }
  for (const auto& id : needs_support) {
    std::string support = fresh_vertex_id(out, id + "_s");
    out.vertices.push_back({support, 0, {}});
    out.edges.push_back({support, id, {Int(1)}, {0}});
  }

  // glue every origin vertex into the first one
  std::vector<std::string> origins;
  for (const auto& v : out.vertices)
    if (v.face.empty()) origins.push_back(v.id);
  if (origins.size() > 1) {
    const std::string& keep = origins.front();
    std::set<std::string> gone(origins.begin() + 1, origins.end());
    Int genus = 0;
    std::vector<TropVertex> vertices;
    for (const auto& v : out.vertices) {
      if (gone.count(v.id)) {
        genus += v.genus;
        continue;
      }
      vertices.push_back(v);
    }
    out.vertices = std::move(vertices);
    for (auto& v : out.vertices)
      if (v.id == keep) v.genus += genus;
    for (auto& e : out.edges) {
      if (gone.count(e.from)) e.from = keep;
      if (gone.count(e.to)) e.to = keep;
    }
    for (auto& l : out.legs)
      if (gone.count(l.at)) l.at = keep;
  }
  require_valid(out);
  return out;
}

std::pair<TropicalType, std::size_t> expansive_reduce(const TropicalType& t) {
  if (!is_monogenic(t)) throw NotMonogenic("expansive_reduce needs a monogenic type");

  TropicalType out = t;
  std::size_t contracted = 0;
  for (;;) {
    std::size_t k = out.edges.size();
    for (std::size_t i = 0; i < out.edges.size(); ++i)
      if (is_zero(out.edges[i].slope)) {
        k = i;
        break;
      }
    if (k == out.edges.size()) break;
    TropEdge e = out.edges[k];
    ++contracted;
    if (e.from == e.to) {  // a zero loop: delete, keep the genus honest
      out.edges.erase(out.edges.begin() + k);
      for (auto& v : out.vertices)
        if (v.id == e.from) v.genus += 1;
      continue;
    }
    const FaceSet& f1 = t.vertex(e.from).face;  // faces never change below
    const FaceSet& f2 = t.vertex(e.to).face;
    if (f1 != f2)
      throw PreconditionFailed("zero-slope edge joins vertices with different faces");
    std::size_t i_from = out.vertex_index(e.from), i_to = out.vertex_index(e.to);
    const std::string keep = out.vertices[std::min(i_from, i_to)].id;
    const std::string gone = out.vertices[std::max(i_from, i_to)].id;
    out.edges.erase(out.edges.begin() + k);
    Int genus = out.vertex(gone).genus;
    std::vector<TropVertex> vertices;
    for (const auto& v : out.vertices)
      if (v.id != gone) vertices.push_back(v);
    out.vertices = std::move(vertices);
    for (auto& v : out.vertices)
      if (v.id == keep) v.genus += genus;
    for (auto& e2 : out.edges) {
      if (e2.from == gone) e2.from = keep;
      if (e2.to == gone) e2.to = keep;
    }
    for (auto& l : out.legs)
      if (l.at == gone) l.at = keep;
  }
  require_valid(out);
  return {out, contracted};
}

namespace {

void require_rme(const TropicalType& t, const char* who) {
  std::vector<std::string> missing;
  if (!is_monogenic(t)) missing.push_back("monogenic");
  bool expansive = std::none_of(t.edges.begin(), t.edges.end(),
                                [](const TropEdge& e) { return is_zero(e.slope); });
  if (!expansive) missing.push_back("expansive");
  if (!is_representable(t)) missing.push_back("representable");
  if (missing.empty()) return;
  std::ostringstream os;
  os << who << " requires a representable monogenic expansive type; not:";
  for (const auto& m : missing) os << " " << m;
  throw PreconditionFailed(os.str());
}

}  // namespace

std::pair<std::size_t, std::size_t> check_rank_formula(const TropicalType& t) {
  require_rme(t, "check_rank_formula");
  ToricMonoid m = tropical_monoid(t);
  return {m.rank, t.vertices.size()};
}

FpMonoidImage unparalleled_monoid(const TropicalType& t) {
  require_rme(t, "unparalleled_monoid");

  Presentation p = monogenic_presentation(t);

  // one shared length generator per adjacent vertex pair, scaled by the
  // lcm of the absolute slopes of its parallel edges
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> pairs;
  std::vector<std::pair<std::string, std::string>> pair_order;
  for (std::size_t k = 0; k < t.edges.size(); ++k) {
    std::size_t a = t.vertex_index(t.edges[k].from), b = t.vertex_index(t.edges[k].to);
    auto key = std::make_pair(t.vertices[std::min(a, b)].id, t.vertices[std::max(a, b)].id);
    if (!pairs.count(key)) pair_order.push_back(key);
    pairs[key].push_back(k);
  }
  using boost::multiprecision::abs;
  for (const auto& key : pair_order) {
    const auto& edges = pairs.at(key);
    Int m = 1;
    for (std::size_t k : edges) m = lcm(m, Int(abs(t.edges[k].slope[0])));
    std::string gen = "l_" + key.first + "_" + key.second;
    p.generators.push_back(gen);
    for (std::size_t k : edges) {
      Relation r;
      r.lhs[gen] = m / abs(t.edges[k].slope[0]);
      r.rhs[edge_length_name(k)] = 1;
      p.relations.push_back(std::move(r));
    }
  }
  return integralize(p);
}

ObstructionCertificate kgon_obstruction(const std::vector<std::array<Int, 2>>& polygon) {
  const std::size_t k = polygon.size();
  if (k < 3) throw NotConvex("need at least 3 vertices");
  {
    std::set<std::pair<Int, Int>> distinct;
    for (const auto& p : polygon) distinct.insert({p[0], p[1]});
    if (distinct.size() != k) throw NotConvex("repeated vertex");
  }
  // strict convexity: consecutive edge cross products all of one sign
  Int orientation = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = polygon[i];
    const auto& b = polygon[(i + 1) % k];
    const auto& c = polygon[(i + 2) % k];
    Int cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
    if (cross == 0) throw NotConvex("three consecutive vertices are collinear");
    Int sign = cross > 0 ? 1 : -1;
    if (orientation == 0)
      orientation = sign;
    else if (orientation != sign)
      throw NotConvex("vertices are not in convex position");
  }

  std::vector<Vec> rays;
  for (const auto& p : polygon) rays.push_back(Vec{p[0], p[1], Int(1)});
  ConeRep cone = ConeRep::from_rays(3, rays);

  ObstructionCertificate cert;
  cert.monoid.rank = 3;
  cert.monoid.hilbert = hilbert_basis(cone);
  cert.monoid_rank = 3;
  cert.extremal_ray_count = extreme_rays(cone).size();
  cert.free_factor_count = free_factor_split(cert.monoid).second;
  cert.forced_vertex_count = cert.monoid_rank + 1;
  cert.generator_bound = cert.forced_vertex_count * (cert.forced_vertex_count - 1) / 2;
  cert.inaccessible =
      cert.free_factor_count == 0 && cert.extremal_ray_count > cert.generator_bound;
  return cert;
}

}  // namespace tropmon
