#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cassert>
#include <fstream>
#include <map>
#include <thread>

#include "tropmon/json_io.hpp"
#include "tropmon/reductions.hpp"

namespace tropmon {

namespace {

// slope multisets attachable to one vertex pair: the empty choice, then
// same-sign multisets of 1..mult slopes with |s| <= bound; root pairs only
// take the positive ones (negative root edges force a vertex to height <= 0
// and kill representability, so they are never catalogued)
struct PairOptions {
  std::vector<std::vector<int>> all;
  std::vector<std::size_t> flipped;  // index of the negated multiset
  std::size_t positive_count = 0;    // prefix usable for root pairs
};

void multisets_from(int bound, std::size_t size, int lo, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (int s = lo; s <= bound; ++s) {
    cur.push_back(s);
    multisets_from(bound, size, s, cur, out);
    cur.pop_back();
  }
}

PairOptions make_pair_options(std::size_t slope_bound, std::size_t mult_bound) {
  PairOptions o;
  o.all.push_back({});
  const int b = static_cast<int>(slope_bound);
  for (std::size_t size = 1; size <= mult_bound; ++size) {
    std::vector<int> cur;
    multisets_from(b, size, 1, cur, o.all);
  }
  o.positive_count = o.all.size();
  const std::size_t pos = o.all.size();
  for (std::size_t i = 1; i < pos; ++i) {
    std::vector<int> neg = o.all[i];
    for (int& s : neg) s = -s;
    std::sort(neg.begin(), neg.end());
    o.all.push_back(std::move(neg));
  }
  o.flipped.resize(o.all.size());
  o.flipped[0] = 0;
  for (std::size_t i = 1; i < pos; ++i) {
    o.flipped[i] = pos + i - 1;
    o.flipped[pos + i - 1] = i;
  }
  return o;
}

struct PairTable {
  std::size_t v;                                  // vertex count
  std::vector<std::pair<int, int>> pairs;         // (a,b) with a < b
  std::vector<std::vector<std::size_t>> pair_at;  // [a][b] -> pair index
};

PairTable make_pairs(std::size_t v) {
  PairTable t;
  t.v = v;
  t.pair_at.assign(v, std::vector<std::size_t>(v, 0));
  for (int a = 0; a < static_cast<int>(v); ++a)
    for (int b = a + 1; b < static_cast<int>(v); ++b) {
      t.pair_at[a][b] = t.pairs.size();
      t.pairs.emplace_back(a, b);
    }
  return t;
}

std::vector<std::vector<int>> nonroot_permutations(std::size_t v) {
  std::vector<int> ids;
  for (int i = 1; i < static_cast<int>(v); ++i) ids.push_back(i);
  std::vector<std::vector<int>> perms;
  std::sort(ids.begin(), ids.end());
  do {
    perms.push_back(ids);
  } while (std::next_permutation(ids.begin(), ids.end()));
  return perms;
}

// the monoid data shared by every type with the same integralised images
struct MonoidInfo {
  std::size_t rank = 0;
  bool pre_sharp = false;  // no units before sharpening
  std::size_t unique_id = 0;
};

// Hermite form under row operations of the column-sorted image matrix.
// Equal keys force unimodularly equivalent image tuples, so cache hits are
// sound; inequivalent coordinates of the same configuration may still miss.
std::vector<Vec> hermite_key(std::size_t rank, std::vector<Vec> images) {
  std::sort(images.begin(), images.end(), lex_less);
  const std::size_t k = images.size();
  // work on rows of the rank x k matrix
  std::vector<Vec> rows(rank, Vec(k, Int(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < rank; ++i) rows[i][j] = images[j][i];
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < rank; ++col) {
    // euclid down the column
    for (;;) {
      std::size_t p = rank;
      for (std::size_t i = r; i < rank; ++i)
        if (rows[i][col] != 0 &&
            (p == rank ||
             boost::multiprecision::abs(rows[i][col]) < boost::multiprecision::abs(rows[p][col])))
          p = i;
      if (p == rank) break;
      std::swap(rows[p], rows[r]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rank; ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[r][col];
        if (q != 0)
          for (std::size_t j = 0; j < k; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (std::size_t j = 0; j < k; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      // reduce entries above the pivot into [0, pivot)
      Int q = rows[i][col] / rows[r][col];
      if (rows[i][col] - q * rows[r][col] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = 0; j < k; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  return rows;
}

struct Shard {
  SearchSummary summary;
  std::vector<std::uint64_t> entry_order;  // enumeration index per entry
};

}  // namespace

SearchSummary enumerate_types(std::size_t vertex_count, std::size_t slope_bound,
                              std::size_t multiplicity_bound, unsigned jobs) {
  if (vertex_count < 1 || slope_bound < 1 || multiplicity_bound < 1)
    throw InvalidBounds("all search bounds must be at least 1");
  if (jobs < 1) jobs = 1;

  SearchSummary total;
  total.bounds = {vertex_count, slope_bound, multiplicity_bound};

  const std::size_t v = vertex_count;
  if (v == 1) {
    // the single-vertex type over the origin
    TropicalType t;
    t.n = 1;
    t.vertices = {{"v0", 0, {}}};
    total.candidates = 1;
    total.valid_types = 1;
    total.representable = 1;
    total.unique_monoids = 1;
    total.entries.push_back({t, tropical_monoid(t), *is_representable(t)});
    return total;
  }

  const PairTable table = make_pairs(v);
  const PairOptions options = make_pair_options(slope_bound, multiplicity_bound);
  const auto perms = nonroot_permutations(v);
  const std::size_t np = table.pairs.size();

  std::vector<std::size_t> limit(np);
  for (std::size_t i = 0; i < np; ++i)
    limit[i] = table.pairs[i].first == 0 ? options.positive_count : options.all.size();

  auto run_shard = [&](unsigned shard_id, Shard& out) {
    std::vector<std::size_t> choice(np, 0);
    std::vector<std::size_t> image(np);
    std::uint64_t index = 0;

    // two memo levels: by integralised image configuration, and behind it
    // by the extreme-ray configuration of cone(images). The saturation
    // only depends on the cone, so equal cone keys mean equal monoids.
    std::map<std::pair<std::size_t, std::vector<Vec>>, MonoidInfo> monoid_cache;
    std::map<std::pair<std::size_t, std::vector<Vec>>, std::size_t> cone_cache;
    std::vector<ToricMonoid> uniques;
    std::vector<std::size_t> unique_rays_no_free;

    for (;;) {
      ++index;
      const std::uint64_t enum_index = index;
      bool process = jobs == 1 || choice[0] % jobs == shard_id;
      if (process) {
        // canonical representative under relabelling of non-root vertices
        bool minimal = true;
        for (const auto& perm : perms) {
          for (std::size_t i = 0; i < np; ++i) {
            auto [a, b] = table.pairs[i];
            int pa = a == 0 ? 0 : perm[a - 1];
            int pb = perm[b - 1];
            bool flip = pa > pb;
            if (flip) std::swap(pa, pb);
            image[table.pair_at[pa][pb]] = flip ? options.flipped[choice[i]] : choice[i];
          }
          if (std::lexicographical_compare(image.begin(), image.end(), choice.begin(),
                                           choice.end())) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          ++out.summary.candidates;

          // connected?
          unsigned reached = 1;  // bitmask, root = bit 0
          for (;;) {
            unsigned next = reached;
            for (std::size_t i = 0; i < np; ++i) {
              if (options.all[choice[i]].empty()) continue;
              auto [a, b] = table.pairs[i];
              unsigned ma = 1u << a, mb = 1u << b;
              if (next & ma) next |= mb;
              if (next & mb) next |= ma;
            }
            if (next == reached) break;
            reached = next;
          }
          bool connected = reached == (1u << v) - 1;

          // condition (2): every non-root vertex has a negative outgoing
          // slope; edge (a,b) with s > 0 covers b, s < 0 covers a
          unsigned covered = 1;
          if (connected) {
            for (std::size_t i = 0; i < np; ++i) {
              const auto& slopes = options.all[choice[i]];
              if (slopes.empty()) continue;
              auto [a, b] = table.pairs[i];
              if (slopes[0] > 0) covered |= 1u << b;
              if (slopes[0] < 0) covered |= 1u << a;
            }
          }

          if (connected && covered == (1u << v) - 1) {
            ++out.summary.valid_types;

            // representability: positions must strictly increase along
            // the slope direction of every edge, so the arc digraph on
            // the non-root vertices must be acyclic
            bool rep = true;
            {
              std::vector<unsigned> arcs(v, 0);
              for (std::size_t i = 0; i < np; ++i) {
                const auto& slopes = options.all[choice[i]];
                if (slopes.empty()) continue;
                auto [a, b] = table.pairs[i];
                if (a == 0) continue;
                if (slopes[0] > 0)
                  arcs[a] |= 1u << b;
                else
                  arcs[b] |= 1u << a;
              }
              std::vector<int> state(v, 0);
              auto dfs = [&](auto&& self, std::size_t x) -> bool {
                state[x] = 1;
                for (std::size_t y = 1; y < v; ++y)
                  if (arcs[x] & (1u << y)) {
                    if (state[y] == 1) return false;
                    if (state[y] == 0 && !self(self, y)) return false;
                  }
                state[x] = 2;
                return true;
              };
              for (std::size_t x = 1; x < v && rep; ++x)
                if (state[x] == 0) rep = dfs(dfs, x);
            }

            if (rep) {
              ++out.summary.representable;
              // plain edge list (a, b, slope)
              struct E {
                int a, b, s;
              };
              std::vector<E> edges;
              for (std::size_t i = 0; i < np; ++i) {
                auto [a, b] = table.pairs[i];
                for (int s : options.all[choice[i]]) edges.push_back({a, b, s});
              }
              const std::size_t ne = edges.size();

              auto make_type = [&] {
                TropicalType t;
                t.n = 1;
                t.mode = TargetMode::orthant;
                t.vertices.push_back({"v0", 0, {}});
                for (std::size_t x = 1; x < v; ++x)
                  t.vertices.push_back({"v" + std::to_string(x), 0, {0}});
                for (const E& e : edges)
                  t.edges.push_back(
                      {t.vertices[e.a].id, t.vertices[e.b].id, {Int(e.s)}, {0}});
                return t;
              };

              // exact witness by longest-path layering of the arc digraph;
              // every edge then carries the positive length (p(b)-p(a))/s
              auto make_witness = [&] {
                std::vector<unsigned> arcs(v, 0);
                for (const E& e : edges)
                  if (e.s > 0)
                    arcs[e.a] |= 1u << e.b;
                  else
                    arcs[e.b] |= 1u << e.a;
                std::vector<long> pos(v, 0);
                std::vector<bool> done(v, false);
                done[0] = true;
                for (std::size_t round = 1; round < v; ++round)
                  for (std::size_t x = 1; x < v; ++x) {
                    if (done[x]) continue;
                    long best = 1;
                    bool ready = true;
                    for (std::size_t y = 0; y < v; ++y)
                      if (arcs[y] & (1u << x)) {
                        if (!done[y]) {
                          ready = false;
                          break;
                        }
                        best = std::max(best, pos[y] + 1);
                      }
                    if (ready) {
                      pos[x] = best;
                      done[x] = true;
                    }
                  }
                DualWitness witness;
                for (std::size_t k = 0; k < ne; ++k)
                  witness[edge_length_name(k)] =
                      Rat(pos[edges[k].b] - pos[edges[k].a]) / Rat(edges[k].s);
                for (std::size_t x = 1; x < v; ++x)
                  witness[vertex_coord_name("v" + std::to_string(x), 0)] = Rat(pos[x]);
                return witness;
              };

              // fundamental-cycle relation matrix, columns indexed by edges,
              // mirroring the monogenic presentation of the type exactly
              std::vector<Vec> cycle_rows;
              {
                std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(v);
                for (std::size_t k = 0; k < ne; ++k) {
                  adj[edges[k].a].emplace_back(k, edges[k].b);
                  if (edges[k].a != edges[k].b) adj[edges[k].b].emplace_back(k, edges[k].a);
                }
                std::vector<int> parent_edge(v, -1);
                std::vector<bool> seen(v, false), in_tree(ne, false);
                std::vector<std::size_t> queue{0};
                seen[0] = true;
                for (std::size_t head = 0; head < queue.size(); ++head) {
                  std::size_t x = queue[head];
                  for (auto [k, w] : adj[x]) {
                    if (seen[w]) continue;
                    seen[w] = true;
                    in_tree[k] = true;
                    parent_edge[w] = static_cast<int>(k);
                    queue.push_back(w);
                  }
                }
                std::vector<long> expr(ne);
                auto add_path = [&](std::size_t x, long sign) {
                  std::size_t cur = x;
                  while (parent_edge[cur] >= 0) {
                    std::size_t k = static_cast<std::size_t>(parent_edge[cur]);
                    if (static_cast<std::size_t>(edges[k].b) == cur) {
                      expr[k] += sign;
                      cur = edges[k].a;
                    } else {
                      expr[k] -= sign;
                      cur = edges[k].b;
                    }
                  }
                };
                for (std::size_t k = 0; k < ne; ++k) {
                  if (in_tree[k]) continue;
                  std::fill(expr.begin(), expr.end(), 0L);
                  add_path(edges[k].a, 1);
                  add_path(edges[k].b, -1);
                  expr[k] += 1;
                  Vec row(ne, Int(0));
                  bool nonzero = false;
                  for (std::size_t e = 0; e < ne; ++e) {
                    long c = expr[e] * edges[e].s;
                    if (c != 0) nonzero = true;
                    row[e] = Int(c);
                  }
                  if (nonzero) cycle_rows.push_back(std::move(row));
                }
              }
              SaturatedQuotient quot = saturated_quotient(ne, cycle_rows);
              FpMonoidImage raw;
              raw.rank = quot.quotient_rank;
              for (std::size_t j = 0; j < ne; ++j) raw.images.push_back(quot.projection.col(j));

              // the layering and the direct matrix mirror the public ops;
              // spot check both on a deterministic sample
              if (out.summary.representable % 97 == 1) {
                TropicalType t = make_type();
                auto lp = is_representable(t);
                if (!lp || !witness_valid(t, make_witness()))
                  throw Error("internal: representability filter disagrees with the LP");
                FpMonoidImage ref = integralize(monogenic_presentation(t));
                if (ref.rank != raw.rank || ref.images != raw.images)
                  throw Error("internal: direct cycle matrix disagrees with integralize");
              }

              auto key = std::make_pair(raw.rank, hermite_key(raw.rank, raw.images));

              auto it = monoid_cache.find(key);
              if (it == monoid_cache.end()) {
                MonoidInfo info;
                info.rank = raw.rank;
                std::vector<Vec> prim;
                for (const Vec& im : raw.images)
                  if (!is_zero(im)) prim.push_back(primitive(im));
                auto grading = try_positive_grading(raw.rank, prim);
                info.pre_sharp = grading.has_value();
                if (grading) {
                  auto ext = extreme_rays_graded(raw.rank, prim, *grading);
                  auto cone_key = std::make_pair(raw.rank, hermite_key(raw.rank, ext));
                  auto cit = cone_cache.find(cone_key);
                  if (cit == cone_cache.end()) {
                    ToricMonoid monoid;
                    monoid.rank = raw.rank;
                    monoid.hilbert = hilbert_basis(ConeRep::from_rays(raw.rank, ext));
                    std::size_t uid = uniques.size();
                    for (std::size_t uidx = 0; uidx < uniques.size(); ++uidx)
                      if (toric_equal(monoid, uniques[uidx])) {
                        uid = uidx;
                        break;
                      }
                    if (uid == uniques.size()) {
                      uniques.push_back(monoid);
                      std::size_t rays = ext.size();
                      std::size_t free_count = free_factor_split(monoid).second;
                      unique_rays_no_free.push_back(free_count == 0 ? rays : 0);
                      out.summary.entries.push_back({make_type(), std::move(monoid), make_witness()});
                      out.entry_order.push_back(enum_index);
                    }
                    cit = cone_cache.emplace(std::move(cone_key), uid).first;
                  }
                  info.unique_id = cit->second;
                } else {
                  // units before sharpening: fall back to the full pipeline
                  ToricMonoid monoid;
                  FpMonoidImage sharp = sharpen(raw);
                  monoid.rank = sharp.rank;
                  monoid.hilbert = hilbert_basis(ConeRep::from_rays(sharp.rank, sharp.images));
                  std::size_t uid = uniques.size();
                  for (std::size_t uidx = 0; uidx < uniques.size(); ++uidx)
                    if (toric_equal(monoid, uniques[uidx])) {
                      uid = uidx;
                      break;
                    }
                  if (uid == uniques.size()) {
                    uniques.push_back(monoid);
                    std::size_t rays =
                        extreme_rays_of_pointed(monoid.rank, monoid.hilbert).size();
                    std::size_t free_count = free_factor_split(monoid).second;
                    unique_rays_no_free.push_back(free_count == 0 ? rays : 0);
                    out.summary.entries.push_back({make_type(), std::move(monoid), make_witness()});
                    out.entry_order.push_back(enum_index);
                  }
                  info.unique_id = uid;
                }
                it = monoid_cache.emplace(std::move(key), std::move(info)).first;
              }
              const MonoidInfo& info = it->second;

              if (info.rank != v - 1) ++out.summary.rank_violations;
              if (!info.pre_sharp) ++out.summary.unit_violations;
              out.summary.max_rays_no_free_factor = std::max(
                  out.summary.max_rays_no_free_factor, unique_rays_no_free[info.unique_id]);
            }
          }
        }
      }

      // next choice vector, lexicographic
      std::size_t pos = np;
      while (pos > 0) {
        --pos;
        if (++choice[pos] < limit[pos]) break;
        choice[pos] = 0;
        if (pos == 0) { if (getenv("TROPMON_DEBUG_CACHE")) fprintf(stderr, "cache_keys=%zu uniques=%zu\n", monoid_cache.size(), uniques.size()); return; }
      }
    }
  };

  std::vector<Shard> shards(jobs);
  // TEMP instrumentation
  if (jobs == 1) {
    run_shard(0, shards[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] { run_shard(j, shards[j]); });
    for (auto& w : workers) w.join();
  }

  // merge in global enumeration order; catalog dedup runs once more across
  // shard-local uniques
  std::vector<std::pair<std::uint64_t, const CatalogEntry*>> merged;
  for (const auto& s : shards) {
    total.candidates += s.summary.candidates;
    total.valid_types += s.summary.valid_types;
    total.representable += s.summary.representable;
    total.rank_violations += s.summary.rank_violations;
    total.unit_violations += s.summary.unit_violations;
    total.max_rays_no_free_factor =
        std::max(total.max_rays_no_free_factor, s.summary.max_rays_no_free_factor);
    for (std::size_t i = 0; i < s.summary.entries.size(); ++i)
      merged.emplace_back(s.entry_order[i], &s.summary.entries[i]);
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [idx, entry] : merged) {
    bool fresh = true;
    for (const auto& have : total.entries)
      if (toric_equal(entry->monoid, have.monoid)) {
        fresh = false;
        break;
      }
    if (fresh) total.entries.push_back(*entry);
  }
  total.unique_monoids = total.entries.size();
  return total;
}

SearchSummary search_types(std::size_t vertex_count, std::size_t slope_bound,
                           std::size_t multiplicity_bound,
                           const std::filesystem::path& catalog_path, unsigned jobs) {
  SearchSummary summary = enumerate_types(vertex_count, slope_bound, multiplicity_bound, jobs);
  write_catalog_run(catalog_path, summary);
  return summary;
}

}  // namespace tropmon
