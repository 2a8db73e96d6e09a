#include "tropmon/torification.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace tropmon {

FpMonoidImage integralize(const Presentation& p) {
  validate(p);
  IntMatrix rel = relation_matrix(p);
  std::vector<Vec> rel_vectors;
  for (std::size_t i = 0; i < rel.rows; ++i) rel_vectors.push_back(rel.row(i));
  SaturatedQuotient q = saturated_quotient(p.generators.size(), rel_vectors);

  FpMonoidImage out;
  out.rank = q.quotient_rank;
  out.names = p.generators;
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    Vec e(p.generators.size(), Int(0));
    e[j] = 1;
    out.images.push_back(q.quotient(e));
  }
  return out;
}

namespace {

// generators of cone(images) lying in its lineality space; they span it
std::vector<Vec> lineality_images(const FpMonoidImage& m) {
  std::vector<Vec> units;
  for (const Vec& v : m.images) {
    if (is_zero(v)) continue;
    if (in_cone(negate(v), m.images)) units.push_back(v);
  }
  return units;
}

}  // namespace

// units exist iff cone(images) contains a line: the lineality space of the
// cone is spanned by the generator images lying in it
bool is_sharp(const FpMonoidImage& m) { return is_pointed(m.images); }

FpMonoidImage sharpen(const FpMonoidImage& m) {
  if (is_sharp(m)) return m;
  auto units = lineality_images(m);
  assert(!units.empty());
  SaturatedQuotient q = saturated_quotient(m.rank, units);
  FpMonoidImage out;
  out.rank = q.quotient_rank;
  out.names = m.names;
  for (const Vec& v : m.images) out.images.push_back(q.quotient(v));
  return out;
}

FpMonoidImage saturate(const FpMonoidImage& m) {
  FpMonoidImage sharp = sharpen(m);
  FpMonoidImage out;
  out.rank = sharp.rank;
  out.images = hilbert_basis(ConeRep::from_rays(sharp.rank, sharp.images));
  return out;
}

ToricMonoid torify(const Presentation& p) {
  FpMonoidImage sharp = sharpen(integralize(p));
  ToricMonoid out;
  out.rank = sharp.rank;
  out.hilbert = hilbert_basis(ConeRep::from_rays(sharp.rank, sharp.images));
  for (std::size_t j = 0; j < sharp.names.size(); ++j)
    out.generator_images[sharp.names[j]] = sharp.images[j];
  return out;
}

ToricMonoid to_toric(const FpMonoidImage& m) {
  FpMonoidImage sat = saturate(m);
  ToricMonoid out;
  out.rank = sat.rank;
  out.hilbert = sat.images;
  return out;
}

namespace {

std::vector<bool> extreme_flags(std::size_t rank, const std::vector<Vec>& hilbert) {
  std::set<Vec> ext;
  for (Vec& r : extreme_rays_of_pointed(rank, hilbert)) ext.insert(std::move(r));
  std::vector<bool> flags;
  for (const Vec& h : hilbert) flags.push_back(ext.count(primitive(h)) > 0);
  return flags;
}

std::size_t rational_rank(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  const std::size_t n = vs[0].size();
  std::vector<QVec> rows;
  for (const Vec& v : vs) {
    QVec r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = Rat(v[i]);
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// backtracking search for a unimodular T with T(h_i) = assigned targets,
// extended to a bijection of the bases
bool iso_search(std::size_t rank, const std::vector<Vec>& h1, const std::vector<Vec>& h2,
                const std::vector<bool>& x1, const std::vector<bool>& x2) {
  // pivot tuple: first `rank` linearly independent elements of h1
  std::vector<std::size_t> pivot;
  std::vector<Vec> picked;
  for (std::size_t i = 0; i < h1.size() && picked.size() < rank; ++i) {
    picked.push_back(h1[i]);
    if (rational_rank(picked) == picked.size())
      pivot.push_back(i);
    else
      picked.pop_back();
  }
  assert(pivot.size() == rank);

  std::set<Vec> set2(h2.begin(), h2.end());
  std::vector<std::size_t> assign(rank);
  std::vector<bool> taken(h2.size(), false);

  auto try_map = [&]() -> bool {
    std::vector<Vec> from, to;
    for (std::size_t i = 0; i < rank; ++i) {
      from.push_back(h1[pivot[i]]);
      to.push_back(h2[assign[i]]);
    }
    // T = to_matrix * from_matrix^{-1}, must be integral with |det| = 1
    IntMatrix t(rank, rank);
    for (std::size_t col = 0; col < rank; ++col) {
      Vec e(rank, Int(0));
      e[col] = 1;
      auto y = solve_rational(from, e);
      if (!y) return false;
      for (std::size_t i = 0; i < rank; ++i) {
        Rat s = 0;
        for (std::size_t k = 0; k < rank; ++k) s += (*y)[k] * Rat(to[k][i]);
        if (boost::multiprecision::denominator(s) != 1) return false;
        t.at(i, col) = boost::multiprecision::numerator(s);
      }
    }
    using boost::multiprecision::abs;
    if (abs(det(t)) != 1) return false;
    std::set<Vec> image;
    for (const Vec& h : h1) image.insert(mul(t, h));
    return image == set2;
  };

  auto rec = [&](auto&& self, std::size_t depth, std::vector<Vec>& partial) -> bool {
    if (depth == rank) return try_map();
    for (std::size_t j = 0; j < h2.size(); ++j) {
      if (taken[j] || x2[j] != x1[pivot[depth]]) continue;
      partial.push_back(h2[j]);
      if (rational_rank(partial) == partial.size()) {
        taken[j] = true;
        assign[depth] = j;
        if (self(self, depth + 1, partial)) return true;
        taken[j] = false;
      }
      partial.pop_back();
    }
    return false;
  };
  std::vector<Vec> partial;
  return rec(rec, 0, partial);
}

}  // namespace

bool toric_equal(const ToricMonoid& a, const ToricMonoid& b) {
  if (a.rank != b.rank || a.hilbert.size() != b.hilbert.size()) return false;
  if (a.rank == 0) return true;
  if (a.hilbert == b.hilbert) return true;

  // in higher rank, stripping free factors first keeps the search small
  if (a.rank > 3) {
    auto [ca, ka] = free_factor_split(a);
    auto [cb, kb] = free_factor_split(b);
    if (ka != kb) return false;
    if (ka > 0) return toric_equal(ca, cb);
  }

  auto xa = extreme_flags(a.rank, a.hilbert);
  auto xb = extreme_flags(b.rank, b.hilbert);
  if (std::count(xa.begin(), xa.end(), true) != std::count(xb.begin(), xb.end(), true))
    return false;
  return iso_search(a.rank, a.hilbert, b.hilbert, xa, xb);
}

bool lattice_tuple_equivalent(std::size_t rank_a, const std::vector<Vec>& a,
                              std::size_t rank_b, const std::vector<Vec>& b) {
  if (rank_a != rank_b || a.size() != b.size()) return false;
  if (rank_a == 0) return true;
  std::vector<std::size_t> pivot;
  std::vector<Vec> picked;
  for (std::size_t i = 0; i < a.size() && picked.size() < rank_a; ++i) {
    picked.push_back(a[i]);
    if (rational_rank(picked) == picked.size())
      pivot.push_back(i);
    else
      picked.pop_back();
  }
  if (picked.size() < rank_a) return false;  // rational span too small
  IntMatrix t(rank_a, rank_a);
  for (std::size_t col = 0; col < rank_a; ++col) {
    Vec e(rank_a, Int(0));
    e[col] = 1;
    auto y = solve_rational(picked, e);
    if (!y) return false;
    for (std::size_t i = 0; i < rank_a; ++i) {
      Rat s = 0;
      for (std::size_t k = 0; k < rank_a; ++k) s += (*y)[k] * Rat(b[pivot[k]][i]);
      if (boost::multiprecision::denominator(s) != 1) return false;
      t.at(i, col) = boost::multiprecision::numerator(s);
    }
  }
  using boost::multiprecision::abs;
  if (abs(det(t)) != 1) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mul(t, a[i]) != b[i]) return false;
  return true;
}

namespace {

// integer covector that is 1 on h and 0 on the other basis elements, if one
// exists; non-negativity on the cone is automatic
std::optional<Vec> split_covector(std::size_t rank, const std::vector<Vec>& hilbert,
                                  std::size_t idx) {
  std::vector<Vec> others;
  for (std::size_t i = 0; i < hilbert.size(); ++i)
    if (i != idx) others.push_back(hilbert[i]);
  IntMatrix m = IntMatrix::from_rows(others, rank);
  auto kern = kernel_basis(m);  // lattice of covectors vanishing on others
  if (kern.empty()) return std::nullopt;
  // want phi in the kernel lattice with phi·h = 1: solvable iff the gcd of
  // the pairings is 1; build phi by the extended-gcd accumulation
  Vec phi(rank, Int(0));
  Int g = 0;
  for (const Vec& k : kern) {
    Int v = dot(k, hilbert[idx]);
    if (v == 0) continue;
    if (g == 0) {
      g = v;
      phi = k;
      continue;
    }
    Int old_g = g;
    Int x, y;
    // g = x*old_g + y*v via extended euclid
    {
      Int a = old_g, b = v, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
      while (b != 0) {
        Int q = a / b, r = a % b;
        a = b;
        b = r;
        Int nx = x0 - q * x1, ny = y0 - q * y1;
        x0 = x1;
        x1 = nx;
        y0 = y1;
        y1 = ny;
      }
      g = a;
      x = x0;
      y = y0;
    }
    Vec next(rank, Int(0));
    for (std::size_t i = 0; i < rank; ++i) next[i] = x * phi[i] + y * k[i];
    phi = next;
  }
  if (g == 1 || g == -1) {
    if (g == -1) phi = negate(phi);
    return phi;
  }
  return std::nullopt;
}

}  // namespace

std::pair<ToricMonoid, std::size_t> free_factor_split(const ToricMonoid& p) {
  ToricMonoid cur = p;
  cur.generator_images.clear();
  std::size_t count = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < cur.hilbert.size(); ++i) {
      auto phi = split_covector(cur.rank, cur.hilbert, i);
      if (!phi) continue;
      // remaining basis lives in the sublattice {phi = 0}
      IntMatrix pm(1, cur.rank);
      for (std::size_t j = 0; j < cur.rank; ++j) pm.at(0, j) = (*phi)[j];
      auto sub_basis = kernel_basis(pm);
      ToricMonoid next;
      next.rank = cur.rank - 1;
      for (std::size_t j = 0; j < cur.hilbert.size(); ++j) {
        if (j == i) continue;
        auto y = solve_rational(sub_basis, cur.hilbert[j]);
        assert(y.has_value());
        Vec coords(next.rank);
        for (std::size_t k = 0; k < next.rank; ++k) {
          assert(boost::multiprecision::denominator((*y)[k]) == 1);
          coords[k] = boost::multiprecision::numerator((*y)[k]);
        }
        next.hilbert.push_back(std::move(coords));
      }
      std::sort(next.hilbert.begin(), next.hilbert.end(), lex_less);
      cur = std::move(next);
      ++count;
      progress = true;
      break;
    }
  }
  return {cur, count};
}

ToricMonoid direct_sum(const ToricMonoid& a, const ToricMonoid& b) {
  ToricMonoid out;
  out.rank = a.rank + b.rank;
  for (const Vec& h : a.hilbert) {
    Vec v(out.rank, Int(0));
    std::copy(h.begin(), h.end(), v.begin());
    out.hilbert.push_back(std::move(v));
  }
  for (const Vec& h : b.hilbert) {
    Vec v(out.rank, Int(0));
    std::copy(h.begin(), h.end(), v.begin() + a.rank);
    out.hilbert.push_back(std::move(v));
  }
  std::sort(out.hilbert.begin(), out.hilbert.end(), lex_less);
  return out;
}

ToricMonoid free_monoid(std::size_t k) {
  ToricMonoid out;
  out.rank = k;
  for (std::size_t i = 0; i < k; ++i) {
    Vec e(k, Int(0));
    e[i] = 1;
    out.hilbert.push_back(std::move(e));
  }
  std::sort(out.hilbert.begin(), out.hilbert.end(), lex_less);
  return out;
}

std::size_t minimal_generator_count(const ToricMonoid& p) { return p.hilbert.size(); }

std::size_t minimal_generator_count(const FpMonoidImage& m) {
  if (!is_sharp(m)) throw NotSharp();
  std::set<Vec> distinct;
  for (const Vec& v : m.images)
    if (!is_zero(v)) distinct.insert(v);
  std::size_t count = 0;
  for (const Vec& v : distinct) {
    std::vector<Vec> others;
    for (const Vec& w : distinct)
      if (w != v) others.push_back(w);
    if (!n_combination_exists(v, others)) ++count;
  }
  return count;
}

}  // namespace tropmon
