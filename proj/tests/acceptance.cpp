// Acceptance suite: one machine-checked criterion per section, one
// PASS/FAIL line each, nonzero exit if anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "test_helpers.hpp"

using namespace tropmon;
using testutil::lattice_monoid;
using testutil::vec;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::ostream&)>& body) {
  std::ostringstream detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  double elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count() /
      1000.0;
  bool in_budget = elapsed < budget_seconds;
  if (!ok || !in_budget) ++failures;
  std::printf("[%s] criterion %d: %s (%.2fs / %.0fs)%s%s\n",
              ok && in_budget ? "PASS" : "FAIL", number, name.c_str(), elapsed, budget_seconds,
              detail.str().empty() ? "" : " -- ", detail.str().c_str());
  std::fflush(stdout);
}

Presentation worked_example() {
  return Presentation{{"e0", "e1", "e2", "e3"},
                      {{{{"e0", 1}, {"e2", 1}}, {{"e1", 2}}},
                       {{{"e1", 1}, {"e3", 1}}, {{"e2", 2}}},
                       {{{"e0", 1}, {"e3", 1}}, {{"e1", 1}, {"e2", 1}}}}};
}

struct SweepResult {
  std::vector<ConstructionReport> reports;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string detail;
};

// criterion 2 corpus: random presentations with sharp nonzero torification
SweepResult run_soundness_sweep(std::size_t count) {
  SweepResult r;
  std::mt19937 rng(20260809);
  while (r.checked < count) {
    Presentation p = testutil::random_presentation(rng, 5, 4, 3);
    ToricMonoid target = torify(p);
    if (target.rank == 0) continue;
    ++r.checked;
    auto s = sanitize(p);
    auto rep = construct_type(s.presentation, s.bipartition);
    bool ok = presentations_agree(rep.presentation_echo, s.presentation) &&
              witness_valid(rep.type, rep.witness) && toric_equal(rep.monoid, target) &&
              graph_genus(rep.type) == 0;
    if (!ok) {
      ++r.failures;
      if (r.detail.empty()) r.detail = "first failure at sample " + std::to_string(r.checked);
    }
    r.reports.push_back(std::move(rep));
  }
  return r;
}

}  // namespace

int main() {
  SweepResult sweep;          // shared by criteria 2 and 9
  SearchSummary full_search;  // V=4 enumeration shared by criteria 4, 6, 7
  std::vector<SearchSummary> small_searches;

  criterion(1, "worked example pipeline", 1.0, [&](std::ostream& why) {
    Presentation input = worked_example();
    ToricMonoid direct = torify(input);
    if (direct.rank != 2 || direct.hilbert.size() != 4) {
      why << "torification is not the rank-2 four-generator monoid";
      return false;
    }
    ToricMonoid fan = lattice_monoid({vec({1, 0}), vec({1, 3})});
    if (!toric_equal(direct, fan)) {
      why << "torification differs from the fan monoid";
      return false;
    }
    auto s = sanitize(input);
    if (s.presentation.generators !=
            std::vector<std::string>{"e0", "e1", "e2", "e3", "e1'", "e2'"} ||
        s.presentation.relations !=
            std::vector<Relation>{{{{"e0", 1}, {"e2'", 1}}, {{"e1", 2}}},
                                  {{{"e1'", 1}, {"e3", 1}}, {{"e2", 2}}},
                                  {{{"e0", 1}, {"e3", 1}}, {{"e1", 1}, {"e2", 1}}},
                                  {{{"e1'", 1}}, {{"e1", 1}}},
                                  {{{"e2'", 1}}, {{"e2", 1}}}} ||
        s.bipartition.left != std::vector<std::string>{"e0", "e3", "e1'", "e2'"} ||
        s.bipartition.right != std::vector<std::string>{"e1", "e2"}) {
      why << "sanitize differs from the published presentation";
      return false;
    }
    auto rep = construct_type(s.presentation, s.bipartition);
    std::map<std::string, Vec> slopes;
    for (std::size_t k = 0; k < rep.type.edges.size(); ++k)
      slopes[rep.edge_generators[k]] = rep.type.edges[k].slope;
    const std::map<std::string, Vec> expected{
        {"e0", vec({1, 0, 1, 0, 0})},  {"e3", vec({0, 1, 1, 0, 0})},
        {"e1'", vec({0, 1, 0, 1, 0})}, {"e2'", vec({1, 0, 0, 0, 1})},
        {"e1", vec({2, 0, 1, 1, 0})},  {"e2", vec({0, 2, 1, 0, 1})}};
    if (slopes != expected) {
      why << "slope table differs from the published figure";
      return false;
    }
    if (!witness_valid(rep.type, rep.witness)) {
      why << "witness fails";
      return false;
    }
    return true;
  });

  criterion(2, "soundness sweep over 500 random presentations", 120.0, [&](std::ostream& why) {
    sweep = run_soundness_sweep(500);
    why << sweep.checked << " presentations, " << sweep.failures << " failures";
    if (!sweep.detail.empty()) why << " (" << sweep.detail << ")";
    return sweep.failures == 0;
  });

  criterion(3, "rank-2 realization for all coprime (k,m), m <= 8", 10.0, [&](std::ostream& why) {
    std::size_t pairs = 0;
    for (long m = 1; m <= 8; ++m)
      for (long k = 1; k <= m; ++k) {
        if (gcd(Int(k), Int(m)) != 1) continue;
        ++pairs;
        auto rep = realize_rank2(k, m);
        ToricMonoid expected = lattice_monoid({vec({1, 0}), vec({k, m})});
        if (!toric_equal(rep.monoid, expected)) {
          why << "(" << k << "," << m << ") realizes the wrong monoid";
          return false;
        }
        if (k == 1 && m == 3 &&
            triangle_slopes(rep) != std::array<Int, 3>{2, 1, 3}) {
          why << "(1,3) slope triple is not (2,1,3)";
          return false;
        }
        if (!witness_valid(rep.type, rep.witness)) {
          why << "(" << k << "," << m << ") witness fails";
          return false;
        }
      }
    why << pairs << " coprime pairs";
    return true;
  });

  criterion(4, "rank formula and trivial units over the full enumeration", 300.0,
            [&](std::ostream& why) {
              std::uint64_t rank_violations = 0, unit_violations = 0, total = 0;
              for (std::size_t v = 1; v <= 4; ++v) {
                SearchSummary s = enumerate_types(v, 3, 2);
                rank_violations += s.rank_violations;
                unit_violations += s.unit_violations;
                total += s.representable;
                if (v == 4)
                  full_search = std::move(s);
                else
                  small_searches.push_back(std::move(s));
              }
              why << total << " representable types, " << rank_violations
                  << " rank violations, " << unit_violations << " unit violations";
              return rank_violations == 0 && unit_violations == 0;
            });

  criterion(5, "expansive splitting over the zero-slope corpus", 120.0, [&](std::ostream& why) {
    std::size_t checked = 0, bad = 0;
    auto check = [&](const TropicalType& t) {
      if (!is_monogenic(t)) return;  // augmentation must keep monogenicity
      ++checked;
      auto [reduced, zero_edges] = expansive_reduce(t);
      ToricMonoid split = direct_sum(tropical_monoid(reduced), free_monoid(zero_edges));
      if (!toric_equal(tropical_monoid(t), split)) ++bad;
    };
    for (const auto& s : small_searches)
      for (const auto& e : s.entries) {
        TropicalType with_loop = e.type;
        with_loop.edges.push_back({"v0", "v0", vec({0}), {}});
        check(with_loop);
        if (e.type.vertices.size() >= 2) {
          TropicalType nonroot_loop = e.type;
          nonroot_loop.edges.push_back({"v1", "v1", vec({0}), {0}});
          check(nonroot_loop);
        }
        if (e.type.vertices.size() >= 3) {
          TropicalType bridge = e.type;
          bridge.edges.push_back({"v1", "v2", vec({0}), {0}});
          check(bridge);
          bridge.edges.push_back({"v0", "v0", vec({0}), {}});
          check(bridge);
        }
      }
    why << checked << " augmented types, " << bad << " violations";
    return checked > 0 && bad == 0;
  });

  criterion(6, "unparalleled generator bounds over the catalog", 120.0, [&](std::ostream& why) {
    std::size_t checked = 0, bad = 0;
    auto check = [&](const CatalogEntry& e) {
      ++checked;
      FpMonoidImage un = unparalleled_monoid(e.type);
      std::size_t nv = e.type.vertices.size();
      std::size_t bound = nv * (nv - 1) / 2;
      bool ok = minimal_generator_count(un) <= bound &&
                toric_equal(to_toric(un), e.monoid);
      // the extremal rays force generators: count them both ways
      ConeRep c;
      c.rank = e.monoid.rank;
      c.rays = e.monoid.hilbert;
      ok = ok && extreme_rays(c).size() <= minimal_generator_count(un);
      if (!ok) ++bad;
    };
    for (const auto& s : small_searches)
      for (const auto& e : s.entries)
        if (e.type.vertices.size() >= 2) check(e);
    for (const auto& e : full_search.entries) check(e);
    why << checked << " catalog types, " << bad << " violations";
    return checked > 0 && bad == 0;
  });

  criterion(7, "seven-gon certificate and search corroboration", 300.0, [&](std::ostream& why) {
    auto hept = kgon_obstruction({{Int(0), Int(0)},
                                  {Int(1), Int(0)},
                                  {Int(2), Int(1)},
                                  {Int(2), Int(2)},
                                  {Int(1), Int(3)},
                                  {Int(0), Int(3)},
                                  {Int(-1), Int(1)}});
    if (!(hept.inaccessible && hept.extremal_ray_count == 7 && hept.generator_bound == 6 &&
          hept.free_factor_count == 0)) {
      why << "heptagon certificate is wrong";
      return false;
    }
    auto square = kgon_obstruction(
        {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}});
    auto hexagon = kgon_obstruction({{Int(0), Int(0)},
                                     {Int(1), Int(0)},
                                     {Int(2), Int(1)},
                                     {Int(2), Int(2)},
                                     {Int(1), Int(2)},
                                     {Int(0), Int(1)}});
    if (square.inaccessible || hexagon.inaccessible) {
      why << "square or hexagon wrongly inaccessible";
      return false;
    }
    if (full_search.bounds.vertex_count != 4) {
      why << "V=4 enumeration unavailable";
      return false;
    }
    why << "max extremal rays without free factors at V=4: "
        << full_search.max_rays_no_free_factor;
    return full_search.max_rays_no_free_factor < 7;
  });

  criterion(8, "kernel oracles", 60.0, [&](std::ostream& why) {
    std::mt19937 rng(318);
    // hilbert bases against exhaustive lattice enumeration
    std::uniform_int_distribution<std::size_t> rank_d(1, 3), nrays_d(1, 5);
    std::uniform_int_distribution<int> coeff_d(1, 4);
    const long box = 10;
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t rank = rank_d(rng);
      auto rays = testutil::random_pointed_cone(rng, rank, nrays_d(rng), coeff_d(rng));
      auto basis = hilbert_basis(ConeRep::from_rays(rank, rays));
      if (basis.empty()) continue;
      auto grading = try_positive_grading(rank, basis);
      if (!grading) {
        why << "no grading for a pointed cone";
        return false;
      }
      auto points = testutil::brute_cone_points(rays, box);
      Int max_deg = 0;
      for (const Vec& p : points) max_deg = std::max(max_deg, dot(*grading, p));
      auto closure = testutil::brute_combination_closure(basis, *grading, max_deg);
      for (const Vec& p : points)
        if (!closure.count(p)) {
          why << "hilbert basis misses " << to_string(p) << " at trial " << trial;
          return false;
        }
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (j != i) others.push_back(basis[j]);
        Int deg = dot(*grading, basis[i]);
        if (testutil::brute_combination_closure(others, *grading, deg).count(basis[i])) {
          why << "hilbert basis is redundant at trial " << trial;
          return false;
        }
      }
    }
    // smith normal form identities
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix m(dim(rng), dim(rng));
      for (auto& x : m.entries) x = Int(entry(rng));
      SnfResult s = smith_normal_form(m);
      using boost::multiprecision::abs;
      if (mul(mul(s.u, m), s.v) != s.d || abs(det(s.u)) != 1 || abs(det(s.v)) != 1) {
        why << "snf identity fails at trial " << trial;
        return false;
      }
      const std::size_t diag = std::min(m.rows, m.cols);
      for (std::size_t i = 0; i + 1 < diag; ++i)
        if (s.d.at(i, i) != 0 && s.d.at(i + 1, i + 1) % s.d.at(i, i) != 0) {
          why << "divisibility chain fails at trial " << trial;
          return false;
        }
    }
    why << "50 cones, 100 matrices";
    return true;
  });

  criterion(9, "affine gluing over the soundness corpus", 180.0, [&](std::ostream& why) {
    if (sweep.reports.empty()) {
      why << "criterion 2 corpus unavailable";
      return false;
    }
    std::size_t bad = 0, trees = 0;
    for (const auto& rep : sweep.reports) {
      TropicalType glued = affine_glue(rep);
      if (graph_genus(glued) != 1 ||
          !toric_equal(torify(affine_presentation(glued)), rep.monoid))
        ++bad;
    }
    // trees in affine targets always give free monoids
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> nverts(1, 6), slope(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
      TropicalType t;
      t.n = 2;
      t.mode = TargetMode::affine;
      int nv = nverts(rng);
      for (int i = 0; i < nv; ++i) t.vertices.push_back({"t" + std::to_string(i), 0, {}});
      for (int i = 1; i < nv; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        t.edges.push_back({t.vertices[parent(rng)].id, t.vertices[i].id,
                           {Int(slope(rng)), Int(slope(rng))}, {}});
      }
      ++trees;
      if (!toric_equal(tropical_monoid(t), free_monoid(t.edges.size()))) ++bad;
    }
    why << sweep.reports.size() << " glued types, " << trees << " trees, " << bad
        << " violations";
    return bad == 0;
  });

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criterion(s) failed\n", failures);
  return 1;
}
