#include "tropmon/tropical_types.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

namespace tropmon {

const TropVertex& TropicalType::vertex(const std::string& id) const {
  return vertices[vertex_index(id)];
}

std::size_t TropicalType::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  throw Error("unknown vertex id: " + id);
}

namespace {

bool has_vertex(const TropicalType& t, const std::string& id) {
  return std::any_of(t.vertices.begin(), t.vertices.end(),
                     [&](const TropVertex& v) { return v.id == id; });
}

bool subset(const FaceSet& a, const FaceSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FaceSet slope_support(const Vec& m) {
  FaceSet s;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) s.insert(static_cast<int>(i));
  return s;
}

std::string face_str(const FaceSet& f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : f) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

std::vector<Violation> validate(const TropicalType& t) {
  std::vector<Violation> out;
  if (t.vertices.empty()) {
    out.push_back({ViolationKind::EmptyGraph, "a tropical type needs at least one vertex"});
    return out;
  }
  std::set<std::string> ids;
  for (const auto& v : t.vertices) {
    if (!ids.insert(v.id).second)
      out.push_back({ViolationKind::DuplicateId, "vertex " + v.id});
    if (v.genus < 0)
      out.push_back({ViolationKind::NegativeGenus, "vertex " + v.id});
  }

  bool refs_ok = true;
  for (const auto& e : t.edges)
    for (const std::string* id : {&e.from, &e.to})
      if (!ids.count(*id)) {
        out.push_back({ViolationKind::BadReference, "edge endpoint " + *id});
        refs_ok = false;
      }
  for (const auto& l : t.legs)
    if (!ids.count(l.at)) {
      out.push_back({ViolationKind::BadReference, "leg vertex " + l.at});
      refs_ok = false;
    }
  if (!refs_ok) return out;

  auto check_face = [&](const FaceSet& f, const std::string& what) {
    for (int i : f)
      if (i < 0 || i >= t.n) {
        out.push_back({ViolationKind::FaceOutOfRange, what + " face " + face_str(f)});
        return;
      }
  };

  const bool orthant = t.mode == TargetMode::orthant;
  if (orthant)
    for (const auto& v : t.vertices) check_face(v.face, "vertex " + v.id);
  else
    for (const auto& v : t.vertices)
      if (!v.face.empty())
        out.push_back({ViolationKind::AffineFace, "vertex " + v.id});

  for (std::size_t k = 0; k < t.edges.size(); ++k) {
    const auto& e = t.edges[k];
    const std::string what = "edge " + e.from + "-" + e.to;
    if (e.slope.size() != static_cast<std::size_t>(t.n)) {
      out.push_back({ViolationKind::SlopeDimension, what});
      continue;
    }
    if (!orthant) {
      if (!e.face.empty()) out.push_back({ViolationKind::AffineFace, what});
      continue;
    }
    check_face(e.face, what);
    if (!subset(slope_support(e.slope), e.face))
      out.push_back({ViolationKind::SlopeSupport,
                     what + " slope " + to_string(e.slope) + " outside " + face_str(e.face)});
    for (const std::string* id : {&e.from, &e.to})
      if (!subset(t.vertex(*id).face, e.face))
        out.push_back({ViolationKind::FaceMonotonicity,
                       what + " does not contain the face of vertex " + *id});
  }
  for (const auto& l : t.legs) {
    const std::string what = "leg at " + l.at;
    if (l.slope.size() != static_cast<std::size_t>(t.n)) {
      out.push_back({ViolationKind::SlopeDimension, what});
      continue;
    }
    if (!orthant) {
      if (!l.face.empty()) out.push_back({ViolationKind::AffineFace, what});
      continue;
    }
    check_face(l.face, what);
    if (!subset(slope_support(l.slope), l.face))
      out.push_back({ViolationKind::SlopeSupport, what});
    if (!subset(t.vertex(l.at).face, l.face))
      out.push_back({ViolationKind::FaceMonotonicity, what});
  }

  // connectivity
  std::vector<std::size_t> comp(t.vertices.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& e : t.edges) comp[find(t.vertex_index(e.from))] = find(t.vertex_index(e.to));
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < comp.size(); ++i) roots.insert(find(i));
  if (roots.size() > 1)
    out.push_back({ViolationKind::Disconnected,
                   "graph has " + std::to_string(roots.size()) + " components"});
  return out;
}

void require_valid(const TropicalType& t) {
  auto v = validate(t);
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid tropical type:";
  for (const auto& x : v) os << " [" << x.detail << "]";
  throw Error(os.str());
}

Vec multidegree(const TropicalType& t, const std::string& vertex_id) {
  Vec d(t.n, Int(0));
  for (const auto& e : t.edges) {
    if (e.from == vertex_id) d = add(d, e.slope);
    if (e.to == vertex_id) d = sub(d, e.slope);
  }
  for (const auto& l : t.legs)
    if (l.at == vertex_id) d = add(d, l.slope);
  return d;
}

std::size_t graph_genus(const TropicalType& t) {
  std::vector<std::size_t> comp(t.vertices.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& e : t.edges) comp[find(t.vertex_index(e.from))] = find(t.vertex_index(e.to));
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < comp.size(); ++i) roots.insert(find(i));
  return t.edges.size() + roots.size() - t.vertices.size();
}

std::string edge_length_name(std::size_t k) { return "l" + std::to_string(k); }

std::string vertex_coord_name(const std::string& vertex_id, int i) {
  return "f_" + vertex_id + "_" + std::to_string(i);
}

namespace {

// positive terms to the left, negated negative terms to the right
std::optional<Relation> rearranged(const std::map<std::string, Int>& combo) {
  Relation r;
  for (const auto& [g, c] : combo) {
    if (c > 0) r.lhs[g] = c;
    if (c < 0) r.rhs[g] = -c;
  }
  if (r.lhs.empty() && r.rhs.empty()) return std::nullopt;
  return r;
}

}  // namespace

Presentation orthant_presentation(const TropicalType& t) {
  require_valid(t);
  if (t.mode != TargetMode::orthant)
    throw PreconditionFailed("orthant_presentation needs orthant mode");

  Presentation p;
  for (std::size_t k = 0; k < t.edges.size(); ++k)
    p.generators.push_back(edge_length_name(k));
  for (const auto& v : t.vertices)
    for (int i : v.face) p.generators.push_back(vertex_coord_name(v.id, i));

  for (std::size_t k = 0; k < t.edges.size(); ++k) {
    const auto& e = t.edges[k];
    const FaceSet& iv1 = t.vertex(e.from).face;
    const FaceSet& iv2 = t.vertex(e.to).face;
    for (int i : e.face) {
      std::map<std::string, Int> combo;
      if (iv2.count(i)) combo[vertex_coord_name(e.to, i)] += 1;
      if (iv1.count(i)) combo[vertex_coord_name(e.from, i)] -= 1;
      const Int& m = e.slope[i];
      if (m != 0) combo[edge_length_name(k)] -= m;
      if (auto r = rearranged(combo)) p.relations.push_back(std::move(*r));
    }
  }
  return p;
}

namespace {

struct SpanningTree {
  std::vector<int> parent_edge;  // per vertex index, -1 at the root
  std::vector<bool> in_tree;     // per edge index
};

SpanningTree bfs_tree(const TropicalType& t, std::size_t root) {
  SpanningTree st;
  st.parent_edge.assign(t.vertices.size(), -1);
  st.in_tree.assign(t.edges.size(), false);
  std::vector<bool> seen(t.vertices.size(), false);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(t.vertices.size());
  for (std::size_t k = 0; k < t.edges.size(); ++k) {
    std::size_t a = t.vertex_index(t.edges[k].from);
    std::size_t b = t.vertex_index(t.edges[k].to);
    adj[a].emplace_back(k, b);
    if (a != b) adj[b].emplace_back(k, a);
  }
  std::queue<std::size_t> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (auto [k, w] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      st.in_tree[k] = true;
      st.parent_edge[w] = static_cast<int>(k);
      q.push(w);
    }
  }
  return st;
}

// signed edge multipliers expressing f(x) - f(root) along the tree path
std::map<std::size_t, Int> path_expression(const TropicalType& t, const SpanningTree& st,
                                           std::size_t x) {
  std::map<std::size_t, Int> expr;
  std::size_t cur = x;
  while (st.parent_edge[cur] >= 0) {
    std::size_t k = static_cast<std::size_t>(st.parent_edge[cur]);
    const auto& e = t.edges[k];
    std::size_t from = t.vertex_index(e.from), to = t.vertex_index(e.to);
    if (to == cur) {  // traversed parent -> cur along the stored direction
      expr[k] += 1;
      cur = from;
    } else {
      expr[k] -= 1;
      cur = to;
    }
  }
  return expr;
}

// one signed multiplier map per fundamental cycle of the spanning tree
std::vector<std::map<std::size_t, Int>> fundamental_cycles(const TropicalType& t,
                                                           std::size_t root) {
  SpanningTree st = bfs_tree(t, root);
  std::vector<std::map<std::size_t, Int>> cycles;
  for (std::size_t k = 0; k < t.edges.size(); ++k) {
    if (st.in_tree[k]) continue;
    std::size_t u = t.vertex_index(t.edges[k].from);
    std::size_t w = t.vertex_index(t.edges[k].to);
    // f(w) = f(u) + m_k l_k and both positions expand along tree paths
    std::map<std::size_t, Int> combo = path_expression(t, st, u);
    for (const auto& [e, c] : path_expression(t, st, w)) combo[e] -= c;
    combo[k] += 1;
    cycles.push_back(std::move(combo));
  }
  return cycles;
}

std::optional<std::size_t> unique_origin_vertex(const TropicalType& t) {
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < t.vertices.size(); ++i)
    if (t.vertices[i].face.empty()) {
      if (root) return std::nullopt;
      root = i;
    }
  return root;
}

}  // namespace

bool monogenic(const TropicalType& t) {
  require_valid(t);
  if (t.mode != TargetMode::orthant || t.n != 1)
    throw PreconditionFailed("monogenic types live over the orthant R_+");
  auto root = unique_origin_vertex(t);
  if (!root) return false;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (i == *root) continue;
    const std::string& id = t.vertices[i].id;
    bool ok = false;
    for (const auto& e : t.edges) {
      if (e.from == id && e.slope[0] < 0) ok = true;
      if (e.to == id && e.slope[0] > 0) ok = true;
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

Presentation monogenic_presentation(const TropicalType& t) {
  if (!monogenic(t)) throw NotMonogenic();
  std::size_t root = *unique_origin_vertex(t);

  Presentation p;
  for (std::size_t k = 0; k < t.edges.size(); ++k)
    p.generators.push_back(edge_length_name(k));
  for (const auto& cycle : fundamental_cycles(t, root)) {
    std::map<std::string, Int> combo;
    for (const auto& [k, sign] : cycle) {
      Int c = sign * t.edges[k].slope[0];
      if (c != 0) combo[edge_length_name(k)] += c;
    }
    if (auto r = rearranged(combo)) p.relations.push_back(std::move(*r));
  }
  return p;
}

Presentation affine_presentation(const TropicalType& t) {
  require_valid(t);
  if (t.mode != TargetMode::affine)
    throw PreconditionFailed("affine_presentation needs affine mode");

  Presentation p;
  for (std::size_t k = 0; k < t.edges.size(); ++k)
    p.generators.push_back(edge_length_name(k));
  for (const auto& cycle : fundamental_cycles(t, 0)) {
    for (int i = 0; i < t.n; ++i) {
      std::map<std::string, Int> combo;
      for (const auto& [k, sign] : cycle) {
        Int c = sign * t.edges[k].slope[i];
        if (c != 0) combo[edge_length_name(k)] += c;
      }
      if (auto r = rearranged(combo)) p.relations.push_back(std::move(*r));
    }
  }
  return p;
}

ToricMonoid tropical_monoid(const TropicalType& t) {
  return torify(t.mode == TargetMode::orthant ? orthant_presentation(t)
                                              : affine_presentation(t));
}

std::optional<DualWitness> is_representable(const TropicalType& t) {
  require_valid(t);
  if (t.mode != TargetMode::orthant)
    throw PreconditionFailed("representability is defined for orthant targets");

  // a leg moves f(v) + s*m into the relative interior of its face for all
  // s > 0, which constrains the slope alone
  for (const auto& l : t.legs) {
    const FaceSet& iv = t.vertex(l.at).face;
    for (int i : l.face) {
      const Int& m = l.slope[i];
      if (iv.count(i)) {
        if (m < 0) return std::nullopt;
      } else {
        if (m <= 0) return std::nullopt;
      }
    }
  }

  Presentation p = orthant_presentation(t);
  IntMatrix eq = relation_matrix(p);
  std::set<std::size_t> strict;
  for (std::size_t j = 0; j < p.generators.size(); ++j) strict.insert(j);
  auto u = strict_lp_feasible(eq, strict, {});
  if (!u) return std::nullopt;
  DualWitness w;
  for (std::size_t j = 0; j < p.generators.size(); ++j) w[p.generators[j]] = (*u)[j];
  return w;
}

bool witness_valid(const TropicalType& t, const DualWitness& w) {
  Presentation p = t.mode == TargetMode::orthant ? orthant_presentation(t)
                                                 : affine_presentation(t);
  for (const auto& g : p.generators) {
    auto it = w.find(g);
    if (it == w.end() || it->second <= 0) return false;
  }
  for (const auto& rel : p.relations) {
    Rat lhs = 0, rhs = 0;
    for (const auto& [g, c] : rel.lhs) lhs += Rat(c) * w.at(g);
    for (const auto& [g, c] : rel.rhs) rhs += Rat(c) * w.at(g);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace tropmon
