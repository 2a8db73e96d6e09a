#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "tropmon/exact_linalg.hpp"

namespace tropmon {

namespace {

// primitive, nonzero, first occurrence kept
std::vector<Vec> normalize_rays(const std::vector<Vec>& rays) {
  std::vector<Vec> out;
  std::set<Vec> seen;
  for (const Vec& r : rays) {
    if (is_zero(r)) continue;
    Vec p = primitive(r);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

Int rat_floor(const Rat& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  Int f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return f;
}

}  // namespace

bool in_cone_with_lineality(const Vec& x, const std::vector<Vec>& lineality,
                            const std::vector<Vec>& rays) {
  // feasible: sum mu_j l_j + sum lambda_i r_i - t x = 0 with lambda >= 0, t >= 1
  const std::size_t r = x.size();
  const std::size_t nl = lineality.size(), nr = rays.size();
  IntMatrix eq(r, nl + nr + 1);
  for (std::size_t j = 0; j < nl; ++j)
    for (std::size_t i = 0; i < r; ++i) eq.at(i, j) = lineality[j][i];
  for (std::size_t j = 0; j < nr; ++j)
    for (std::size_t i = 0; i < r; ++i) eq.at(i, nl + j) = rays[j][i];
  for (std::size_t i = 0; i < r; ++i) eq.at(i, nl + nr) = -x[i];
  std::set<std::size_t> strict{nl + nr}, nonneg;
  for (std::size_t j = 0; j < nr; ++j) nonneg.insert(nl + j);
  return strict_lp_feasible(eq, strict, nonneg).has_value();
}

bool in_cone(const Vec& x, const std::vector<Vec>& rays) {
  return in_cone_with_lineality(x, {}, rays);
}

bool is_pointed(const std::vector<Vec>& rays0) {
  auto rays = normalize_rays(rays0);
  if (rays.empty()) return true;
  const std::size_t r = rays[0].size();
  // a line exists iff a nontrivial non-negative circuit does:
  // sum lambda_i r_i = 0 with sum lambda_i = t >= 1
  IntMatrix eq(r + 1, rays.size() + 1);
  for (std::size_t j = 0; j < rays.size(); ++j) {
    for (std::size_t i = 0; i < r; ++i) eq.at(i, j) = rays[j][i];
    eq.at(r, j) = 1;
  }
  eq.at(r, rays.size()) = -1;
  std::set<std::size_t> strict{rays.size()}, nonneg;
  for (std::size_t j = 0; j < rays.size(); ++j) nonneg.insert(j);
  return !strict_lp_feasible(eq, strict, nonneg).has_value();
}

GeneratorForm dual_generators(std::size_t rank, const std::vector<Vec>& gens0) {
  auto gens = normalize_rays(gens0);
  GeneratorForm cur;
  for (std::size_t i = 0; i < rank; ++i) {
    Vec e(rank, Int(0));
    e[i] = 1;
    cur.lineality.push_back(std::move(e));
  }
  for (const Vec& a : gens) {
    // intersect with the halfspace {y : y·a >= 0}
    std::size_t cut = cur.lineality.size();
    for (std::size_t i = 0; i < cur.lineality.size(); ++i)
      if (dot(cur.lineality[i], a) != 0) {
        cut = i;
        break;
      }
    if (cut < cur.lineality.size()) {
      Vec b = cur.lineality[cut];
      if (dot(b, a) < 0) b = negate(b);
      const Int ba = dot(b, a);
      GeneratorForm next;
      for (std::size_t i = 0; i < cur.lineality.size(); ++i) {
        if (i == cut) continue;
        const Vec& l = cur.lineality[i];
        next.lineality.push_back(primitive(sub(scale(ba, l), scale(dot(l, a), b))));
      }
      for (const Vec& r : cur.rays)
        next.rays.push_back(primitive(sub(scale(ba, r), scale(dot(r, a), b))));
      next.rays.push_back(b);
      cur = std::move(next);
    } else {
      std::vector<Vec> pos, zero, neg;
      std::vector<Int> val;
      for (const Vec& r : cur.rays) {
        Int d = dot(r, a);
        if (d > 0)
          pos.push_back(r);
        else if (d < 0)
          neg.push_back(r);
        else
          zero.push_back(r);
      }
      std::vector<Vec> cand = pos;
      cand.insert(cand.end(), zero.begin(), zero.end());
      for (const Vec& p : pos)
        for (const Vec& n : neg)
          cand.push_back(primitive(sub(scale(dot(p, a), n), scale(dot(n, a), p))));
      cur.rays = normalize_rays(cand);
    }
    // keep the ray list irredundant so it stays small across steps
    std::vector<bool> dropped(cur.rays.size(), false);
    for (std::size_t i = 0; i < cur.rays.size(); ++i) {
      std::vector<Vec> others;
      for (std::size_t j = 0; j < cur.rays.size(); ++j)
        if (j != i && !dropped[j]) others.push_back(cur.rays[j]);
      if (in_cone_with_lineality(cur.rays[i], cur.lineality, others)) dropped[i] = true;
    }
    std::vector<Vec> kept;
    for (std::size_t i = 0; i < cur.rays.size(); ++i)
      if (!dropped[i]) kept.push_back(cur.rays[i]);
    cur.rays = std::move(kept);
  }
  return cur;
}

ConeRep ConeRep::from_rays(std::size_t rank, std::vector<Vec> rays) {
  for (const Vec& r : rays)
    if (r.size() != rank) throw InvalidConeData("ray has wrong dimension");
  ConeRep c;
  c.rank = rank;
  c.rays = normalize_rays(rays);
  return c;
}

ConeRep ConeRep::from_inequalities(std::size_t rank, std::vector<Vec> ineqs) {
  for (const Vec& a : ineqs)
    if (a.size() != rank) throw InvalidConeData("inequality has wrong dimension");
  ConeRep c;
  c.rank = rank;
  c.inequalities = normalize_rays(ineqs);
  GeneratorForm g = dual_generators(rank, *c.inequalities);
  std::vector<Vec> rays = g.rays;
  for (const Vec& l : g.lineality) {
    rays.push_back(l);
    rays.push_back(negate(l));
  }
  c.rays = normalize_rays(rays);
  return c;
}

std::vector<Vec> ConeRep::generators() const { return rays; }

bool cone_forms_agree(const ConeRep& c) {
  if (!c.inequalities) return true;
  for (const Vec& r : c.rays)
    for (const Vec& a : *c.inequalities)
      if (dot(a, r) < 0) return false;
  ConeRep from_ineq = ConeRep::from_inequalities(c.rank, *c.inequalities);
  for (const Vec& g : from_ineq.rays)
    if (!in_cone(g, c.rays)) return false;
  return true;
}

std::vector<Vec> extreme_rays(const ConeRep& c) {
  auto rays = normalize_rays(c.generators());
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (!in_cone(rays[i], others)) out.push_back(rays[i]);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::optional<Vec> try_positive_grading(std::size_t rank, const std::vector<Vec>& rays) {
  IntMatrix sys(rays.size(), rank + rays.size());
  std::set<std::size_t> strictset, nonnegset;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = 0; j < rank; ++j) sys.at(i, j) = rays[i][j];
    sys.at(i, rank + i) = -1;
    strictset.insert(rank + i);
  }
  auto u = strict_lp_feasible(sys, strictset, nonnegset);
  if (!u) return std::nullopt;
  Vec grading(rank, Int(0));
  Int denom_lcm = 1;
  for (std::size_t j = 0; j < rank; ++j)
    denom_lcm = lcm(denom_lcm, Int(boost::multiprecision::denominator((*u)[j])));
  for (std::size_t j = 0; j < rank; ++j)
    grading[j] = boost::multiprecision::numerator((*u)[j] * Rat(denom_lcm));
  return grading;
}

namespace {

Vec positive_grading(std::size_t d, const std::vector<Vec>& rays) {
  auto g = try_positive_grading(d, rays);
  assert(g.has_value());
  return *g;
}

// extreme rays of a full-dimensional pointed cone in cyclic boundary order
// (d = 2: the two angular extremes, d = 3: projective hull order)
std::vector<Vec> hull_extremes_ordered(std::size_t d, const std::vector<Vec>& rays,
                                       const Vec& grading) {
  if (d == 1) return {rays[0]};
  if (d == 2) {
    std::size_t lo = 0, hi = 0;
    auto cross = [&](const Vec& u, const Vec& v) { return u[0] * v[1] - u[1] * v[0]; };
    for (std::size_t i = 1; i < rays.size(); ++i) {
      if (cross(rays[i], rays[lo]) > 0) lo = i;
      if (cross(rays[hi], rays[i]) > 0) hi = i;
    }
    if (lo == hi) return {rays[lo]};
    return {rays[lo], rays[hi]};
  }
  assert(d == 3);
  std::size_t k = 0;
  while (grading[k] == 0) ++k;
  std::vector<std::pair<std::array<Rat, 2>, std::size_t>> pts;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    Rat h(dot(grading, rays[i]));
    std::array<Rat, 2> q;
    std::size_t slot = 0;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != k) q[slot++] = Rat(rays[i][j]) / h;
    pts.emplace_back(q, i);
  }
  std::sort(pts.begin(), pts.end());
  auto turn = [](const std::array<Rat, 2>& a, const std::array<Rat, 2>& b,
                 const std::array<Rat, 2>& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  std::vector<std::size_t> hull;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t base = hull.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::size_t idx = pass == 0 ? i : pts.size() - 1 - i;
      while (hull.size() >= base + 2 &&
             turn(pts[hull[hull.size() - 2]].first, pts[hull.back()].first,
                  pts[idx].first) <= 0)
        hull.pop_back();
      hull.push_back(idx);
    }
    hull.pop_back();
  }
  std::vector<Vec> out;
  for (std::size_t h : hull) out.push_back(rays[pts[h].second]);
  return out;
}

}  // namespace

std::vector<Vec> extreme_rays_graded(std::size_t rank, const std::vector<Vec>& rays0,
                                     const Vec& grading) {
  auto rays = normalize_rays(rays0);
  if (rays.empty()) return {};
  if (rank <= 3) {
    auto out = hull_extremes_ordered(rank, rays, grading);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }
  ConeRep c;
  c.rank = rank;
  c.rays = rays;
  return extreme_rays(c);
}

std::vector<Vec> extreme_rays_of_pointed(std::size_t rank, const std::vector<Vec>& rays0) {
  auto rays = normalize_rays(rays0);
  if (rays.empty()) return {};
  SpanLattice span = span_lattice(rank, rays);
  const std::size_t d = span.dim;
  if (d > 3) {
    ConeRep c;
    c.rank = rank;
    c.rays = rays;
    return extreme_rays(c);
  }
  std::vector<Vec> coords;
  for (const Vec& g : rays) coords.push_back(span.coords(g));
  Vec grading = d == 3 ? positive_grading(3, coords) : Vec{};
  std::vector<Vec> out;
  for (const Vec& y : hull_extremes_ordered(d, coords, grading)) out.push_back(span.lift(y));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

namespace {

std::size_t rank_of(const std::vector<Vec>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  IntMatrix m(dim, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = vs[j][i];
  SnfResult s = smith_normal_form(m);
  std::size_t r = 0;
  const std::size_t diag = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i < diag; ++i)
    if (s.d.at(i, i) != 0) ++r;
  return r;
}

// incremental placing triangulation of a pointed full-dimensional cone
// given by its extreme rays; returns simplices as index sets
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<Vec>& rays) {
  const std::size_t d = rays[0].size();
  // reorder so the first d rays are linearly independent
  std::vector<std::size_t> order;
  std::vector<Vec> picked;
  std::vector<bool> used(rays.size(), false);
  for (std::size_t i = 0; i < rays.size() && picked.size() < d; ++i) {
    picked.push_back(rays[i]);
    if (rank_of(picked, d) == picked.size()) {
      order.push_back(i);
      used[i] = true;
    } else {
      picked.pop_back();
    }
  }
  assert(picked.size() == d);
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!used[i]) order.push_back(i);

  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> first(order.begin(), order.begin() + d);
  std::sort(first.begin(), first.end());
  simplices.push_back(first);

  auto facet_normal = [&](const std::vector<std::size_t>& facet) {
    IntMatrix m(facet.size(), d);
    for (std::size_t i = 0; i < facet.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) m.at(i, j) = rays[facet[i]][j];
    auto kern = kernel_basis(m);
    assert(kern.size() == 1);
    return primitive(kern[0]);
  };

  for (std::size_t oi = d; oi < order.size(); ++oi) {
    const std::size_t q = order[oi];
    const Vec& x = rays[q];
    // boundary facets = (d-1)-faces incident to exactly one simplex
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> facets;
    for (std::size_t s = 0; s < simplices.size(); ++s)
      for (std::size_t drop = 0; drop < d; ++drop) {
        std::vector<std::size_t> f = simplices[s];
        f.erase(f.begin() + drop);
        facets[f].push_back(s);
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [f, incident] : facets) {
      if (incident.size() != 1) continue;
      Vec n = facet_normal(f);
      // opposite vertex of the unique incident simplex fixes the inner side
      const auto& simp = simplices[incident[0]];
      Vec opp;
      for (std::size_t v : simp)
        if (std::find(f.begin(), f.end(), v) == f.end()) opp = rays[v];
      Int sv = dot(n, opp);
      assert(sv != 0);
      Int sx = dot(n, x);
      if (sx == 0 || (sx > 0) == (sv > 0)) continue;  // not visible
      std::vector<std::size_t> ns = f;
      ns.push_back(q);
      std::sort(ns.begin(), ns.end());
      added.push_back(std::move(ns));
    }
    assert(!added.empty());
    for (auto& s : added) simplices.push_back(std::move(s));
  }
  return simplices;
}

// lattice points of { sum t_i v_i : 0 <= t_i < 1 } for independent columns v
std::vector<Vec> parallelepiped_points(const std::vector<Vec>& simplex) {
  const std::size_t d = simplex.size();
  IntMatrix v(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) v.at(i, j) = simplex[j][i];
  SnfResult s = smith_normal_form(v);
  IntMatrix uinv = inverse_unimodular(s.u);

  std::vector<Int> divisors(d);
  Int count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    divisors[i] = s.d.at(i, i);
    assert(divisors[i] > 0);
    count *= divisors[i];
  }
  std::vector<Vec> points;
  Vec c(d, Int(0));
  for (Int idx = 0; idx < count; ++idx) {
    Vec y = mul(uinv, c);
    auto t = solve_rational(simplex, y);
    assert(t.has_value());
    Vec x = y;
    for (std::size_t j = 0; j < d; ++j) {
      Int f = rat_floor((*t)[j]);
      if (f != 0) x = sub(x, scale(f, simplex[j]));
    }
    points.push_back(std::move(x));
    for (std::size_t i = 0; i < d; ++i) {  // mixed-radix increment
      c[i] += 1;
      if (c[i] < divisors[i]) break;
      c[i] = 0;
    }
  }
  return points;
}

struct SimplexMembership {
  std::vector<std::vector<QVec>> inverses;  // per simplex, rows of V^{-1}

  explicit SimplexMembership(const std::vector<Vec>& rays,
                             const std::vector<std::vector<std::size_t>>& simplices) {
    for (const auto& s : simplices) {
      const std::size_t d = s.size();
      std::vector<QVec> a(d, QVec(2 * d, Rat(0)));
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) a[i][j] = Rat(rays[s[j]][i]);
      for (std::size_t i = 0; i < d; ++i) a[i][d + i] = 1;
      for (std::size_t col = 0; col < d; ++col) {
        std::size_t p = col;
        while (a[p][col] == 0) ++p;
        std::swap(a[p], a[col]);
        Rat inv = a[col][col];
        for (std::size_t j = 0; j < 2 * d; ++j) a[col][j] /= inv;
        for (std::size_t i = 0; i < d; ++i) {
          if (i == col || a[i][col] == 0) continue;
          Rat f = a[i][col];
          for (std::size_t j = 0; j < 2 * d; ++j) a[i][j] -= f * a[col][j];
        }
      }
      std::vector<QVec> vinv(d, QVec(d));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) vinv[i][j] = a[i][d + j];
      inverses.push_back(std::move(vinv));
    }
  }

  bool contains(const Vec& x) const {
    for (const auto& vinv : inverses) {
      bool ok = true;
      for (const QVec& row : vinv) {
        Rat s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * Rat(x[j]);
        if (s < 0) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<Vec> hilbert_basis(const ConeRep& c) {
  auto gens = normalize_rays(c.generators());
  if (gens.empty()) return {};
  if (!is_pointed(gens)) throw ConeNotPointed();

  SpanLattice span = span_lattice(c.rank, gens);
  const std::size_t d = span.dim;
  std::vector<Vec> coords;
  for (const Vec& g : gens) coords.push_back(span.coords(g));

  std::vector<Vec> basis_coords;

  if (d == 1) {
    ConeRep cc;
    cc.rank = d;
    cc.rays = coords;
    basis_coords = extreme_rays(cc);  // single primitive generator
  } else {
    std::vector<Vec> ext;
    std::vector<std::vector<std::size_t>> simplices;
    Vec grading;

    if (d == 2) {
      // the two angular extremes; pointedness makes the cross-product
      // comparison a total order
      ext = hull_extremes_ordered(2, coords, {});
      simplices = {{0, 1}};
      // sum of the two inward edge normals grades the cone positively
      Vec na{-ext[0][1], ext[0][0]}, nb{ext[1][1], -ext[1][0]};
      if (dot(na, ext[1]) < 0) na = negate(na);
      if (dot(nb, ext[0]) < 0) nb = negate(nb);
      grading = add(na, nb);
      assert(dot(grading, ext[0]) > 0 && dot(grading, ext[1]) > 0);
    } else if (d == 3) {
      // hull vertices in boundary order fan-triangulate the cone
      grading = positive_grading(d, coords);
      ext = hull_extremes_ordered(3, coords, grading);
      for (std::size_t i = 1; i + 1 < ext.size(); ++i)
        simplices.push_back({0, i, i + 1});
    } else {
      ConeRep cc;
      cc.rank = d;
      cc.rays = coords;
      ext = extreme_rays(cc);
      if (ext.size() == d) {
        std::vector<std::size_t> all(d);
        for (std::size_t i = 0; i < d; ++i) all[i] = i;
        simplices = {all};
      } else {
        simplices = placing_triangulation(ext);
      }
      grading = positive_grading(d, ext);
    }

    SimplexMembership membership(ext, simplices);

    std::set<Vec> cand_set(ext.begin(), ext.end());
    for (const auto& s : simplices) {
      std::vector<Vec> cols;
      for (std::size_t i : s) cols.push_back(ext[i]);
      for (Vec& p : parallelepiped_points(cols))
        if (!is_zero(p)) cand_set.insert(std::move(p));
    }

    std::vector<std::pair<Int, Vec>> cands;
    for (const Vec& v : cand_set) cands.emplace_back(dot(grading, v), v);
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return lex_less(a.second, b.second);
    });

    // accept candidates in grading order; a candidate is reducible exactly
    // when it is an N-combination of strictly lower-grade accepted elements
    std::vector<std::pair<Int, Vec>> accepted;
    for (const auto& [deg, v] : cands) {
      std::vector<const Vec*> lower;
      std::vector<Int> lower_deg;
      for (const auto& [hd, h] : accepted)
        if (hd < deg) {
          lower.push_back(&h);
          lower_deg.push_back(hd);
        }
      std::map<Vec, bool> memo;
      auto reducible = [&](auto&& self, const Vec& t, const Int& tdeg) -> bool {
        if (is_zero(t)) return true;
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        bool r = false;
        for (std::size_t i = 0; i < lower.size() && !r; ++i) {
          if (lower_deg[i] > tdeg) continue;
          Vec rest = sub(t, *lower[i]);
          if (!membership.contains(rest)) continue;
          r = self(self, rest, tdeg - lower_deg[i]);
        }
        memo[t] = r;
        return r;
      };
      if (!reducible(reducible, v, deg)) accepted.emplace_back(deg, v);
    }
    for (auto& [deg, v] : accepted) basis_coords.push_back(std::move(v));
  }

  std::vector<Vec> out;
  for (const Vec& y : basis_coords) out.push_back(span.lift(y));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool n_combination_exists(const Vec& target, const std::vector<Vec>& gens0) {
  if (is_zero(target)) return true;
  std::vector<Vec> gens;
  std::set<Vec> seen;
  for (const Vec& g : gens0)
    if (!is_zero(g) && seen.insert(g).second) gens.push_back(g);
  if (gens.empty()) return false;

  const std::size_t r = target.size();
  // strictly positive grading certifies pointedness and bounds the search
  IntMatrix sys(gens.size(), r + gens.size());
  std::set<std::size_t> strictset, nonnegset;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < r; ++j) sys.at(i, j) = gens[i][j];
    sys.at(i, r + i) = -1;
    strictset.insert(r + i);
  }
  auto u = strict_lp_feasible(sys, strictset, nonnegset);
  if (!u) throw ConeNotPointed("n_combination_exists requires a pointed cone");
  Vec grading(r, Int(0));
  Int denom_lcm = 1;
  for (std::size_t j = 0; j < r; ++j)
    denom_lcm = lcm(denom_lcm, Int(boost::multiprecision::denominator((*u)[j])));
  for (std::size_t j = 0; j < r; ++j)
    grading[j] = boost::multiprecision::numerator((*u)[j] * Rat(denom_lcm));

  if (!in_cone(target, gens)) return false;

  std::vector<Int> deg(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) deg[i] = dot(grading, gens[i]);

  std::map<Vec, bool> memo;
  auto dfs = [&](auto&& self, const Vec& t, const Int& tdeg) -> bool {
    if (is_zero(t)) return true;
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (std::size_t i = 0; i < gens.size() && !ok; ++i) {
      if (deg[i] > tdeg) continue;
      ok = self(self, sub(t, gens[i]), tdeg - deg[i]);
    }
    memo[t] = ok;
    return ok;
  };
  return dfs(dfs, target, dot(grading, target));
}

}  // namespace tropmon
