#include "tropmon/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tropmon {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int content(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

Vec primitive(Vec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec negate(Vec v) {
  for (Int& x : v) x = -x;
  return v;
}

Vec scale(const Int& c, Vec v) {
  for (Int& x : v) x *= c;
  return v;
}

Int dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rs, std::size_t ncols) {
  IntMatrix m(rs.size(), ncols);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    assert(rs[i].size() == ncols);
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rs[i][j];
  }
  return m;
}

Vec IntMatrix::row(std::size_t i) const {
  Vec r(cols);
  for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

Vec IntMatrix::col(std::size_t j) const {
  Vec c(rows);
  for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols == b.rows);
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec mul(const IntMatrix& a, const Vec& x) {
  assert(a.cols == x.size());
  Vec y(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < a.cols; ++j) s += a.at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Int det(const IntMatrix& m) {
  assert(m.rows == m.cols);
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;  // Bareiss fraction-free elimination
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult res{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  };
  // row_dst += c * row_src, col_dst += c * col_src; mirrored on u resp. v
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < d.cols; ++j) d.at(dst, j) += c * d.at(src, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(dst, j) += c * u.at(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < d.rows; ++i) d.at(i, dst) += c * d.at(i, src);
    for (std::size_t i = 0; i < v.rows; ++i) v.at(i, dst) += c * v.at(i, src);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < d.cols; ++j) d.at(i, j) = -d.at(i, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(i, j) = -u.at(i, j);
  };

  using boost::multiprecision::abs;
  const std::size_t steps = std::min(d.rows, d.cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool submatrix_zero = false;
    for (;;) {
      std::size_t pi = d.rows, pj = d.cols;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j)
          if (d.at(i, j) != 0 &&
              (pi == d.rows || abs(d.at(i, j)) < abs(d.at(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == d.rows) {
        submatrix_zero = true;
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        if (q != 0) add_row(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) add_col(j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide every entry of the trailing submatrix,
      // which makes the divisibility chain automatic
      bool fixed = false;
      for (std::size_t i = t + 1; i < d.rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols && !fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_row(t, i, 1);
            fixed = true;
          }
      if (fixed) continue;

      if (d.at(t, t) < 0) negate_row(t);
      break;
    }
    if (submatrix_zero) break;
  }
  return res;
}

std::vector<Vec> kernel_basis(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m);
  std::vector<Vec> basis;
  const std::size_t diag = std::min(m.rows, m.cols);
  for (std::size_t j = 0; j < m.cols; ++j)
    if (j >= diag || s.d.at(j, j) == 0) basis.push_back(s.v.col(j));
  return basis;
}

Vec SaturatedQuotient::quotient(const Vec& x) const {
  assert(x.size() == ambient_rank);
  return mul(projection, x);
}

SaturatedQuotient saturated_quotient(std::size_t rank, const std::vector<Vec>& vectors) {
  SaturatedQuotient q;
  q.ambient_rank = rank;
  if (vectors.empty()) {
    q.quotient_rank = rank;
    q.projection = IntMatrix::identity(rank);
    return q;
  }
  // columns span the sublattice; in u-coordinates its saturation is the
  // span of the first s unit vectors, so the quotient is the last rank-s
  // coordinates of u*x
  IntMatrix m(rank, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    assert(vectors[j].size() == rank);
    for (std::size_t i = 0; i < rank; ++i) m.at(i, j) = vectors[j][i];
  }
  SnfResult s = smith_normal_form(m);
  std::size_t nonzero = 0;
  const std::size_t diag = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i < diag; ++i)
    if (s.d.at(i, i) != 0) ++nonzero;
  q.quotient_rank = rank - nonzero;
  q.projection = IntMatrix(q.quotient_rank, rank);
  for (std::size_t i = 0; i < q.quotient_rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) q.projection.at(i, j) = s.u.at(nonzero + i, j);
  return q;
}

std::optional<QVec> solve_rational(const std::vector<Vec>& basis, const Vec& x) {
  const std::size_t k = basis.size();
  const std::size_t r = x.size();
  // augmented [B | x] with rational elimination, free variables set to 0
  std::vector<QVec> a(r, QVec(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    assert(basis[j].size() == r);
    for (std::size_t i = 0; i < r; ++i) a[i][j] = Rat(basis[j][i]);
  }
  for (std::size_t i = 0; i < r; ++i) a[i][k] = Rat(x[i]);

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < r; ++col) {
    std::size_t p = row;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[row]);
    Rat inv = a[row][col];
    for (std::size_t j = col; j <= k; ++j) a[row][j] /= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (a[i][k] != 0) return std::nullopt;
  QVec y(k, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = a[i][k];
  return y;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  assert(m.rows == m.cols);
  const std::size_t n = m.rows;
  std::vector<QVec> a(n, QVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    assert(p < n);
    std::swap(a[p], a[col]);
    Rat inv = a[col][col];
    for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& q = a[i][n + j];
      assert(boost::multiprecision::denominator(q) == 1);
      r.at(i, j) = boost::multiprecision::numerator(q);
    }
  return r;
}

Vec SpanLattice::lift(const Vec& y) const {
  assert(y.size() == dim);
  Vec x(ambient_rank, Int(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < ambient_rank; ++j) x[j] += y[i] * basis[i][j];
  return x;
}

SpanLattice span_lattice(std::size_t rank, const std::vector<Vec>& vectors) {
  SpanLattice s;
  s.ambient_rank = rank;
  if (vectors.empty()) {
    s.dim = 0;
    s.coord_map = IntMatrix(0, rank);
    return s;
  }
  IntMatrix m(rank, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) m.at(i, j) = vectors[j][i];
  SnfResult snf = smith_normal_form(m);
  std::size_t nonzero = 0;
  const std::size_t diag = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i < diag; ++i)
    if (snf.d.at(i, i) != 0) ++nonzero;
  s.dim = nonzero;
  // x in the saturated span iff (u·x)_i = 0 for i >= dim; then
  // coords(x) = first dim entries of u·x and basis = first dim cols of u^{-1}
  IntMatrix uinv = inverse_unimodular(snf.u);
  for (std::size_t j = 0; j < s.dim; ++j) s.basis.push_back(uinv.col(j));
  s.coord_map = IntMatrix(s.dim, rank);
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) s.coord_map.at(i, j) = snf.u.at(i, j);
  return s;
}

namespace {

// Phase-1 simplex with Bland's rule: x >= 0 with rows·x = rhs, or nothing.
std::optional<QVec> nonneg_solve(std::vector<QVec> rows, QVec rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  if (m == 0) return QVec(n, Rat(0));

  for (std::size_t i = 0; i < m; ++i)
    if (rhs[i] < 0) {
      for (Rat& c : rows[i]) c = -c;
      rhs[i] = -rhs[i];
    }

  // tableau columns: n structural + m artificial + rhs; objective row
  // minimises the artificial sum
  const std::size_t width = n + m + 1;
  std::vector<QVec> t(m + 1, QVec(width, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = rows[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = rhs[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    t[m][j] = s;
  }
  {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t[i][width - 1];
    t[m][width - 1] = s;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: entering = lowest-index column with positive reduced cost
    std::size_t enter = width - 1;
    for (std::size_t j = 0; j < n + m; ++j)
      if (t[m][j] > 0) {
        enter = j;
        break;
      }
    if (enter == width - 1) break;

    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave]))  {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase 1

    Rat piv = t[leave][enter];
    for (std::size_t j = 0; j < width; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (t[m][width - 1] != 0) return std::nullopt;
  QVec x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace

std::optional<QVec> strict_lp_feasible(const IntMatrix& eq,
                                       const std::set<std::size_t>& strict,
                                       const std::set<std::size_t>& nonneg) {
  const std::size_t n = eq.cols;
  const std::size_t m = eq.rows;

  // substitution: u_j = 1 + s_j (strict), u_j = s_j (nonneg),
  // u_j = p_j - q_j (free); all slack variables >= 0
  enum class Kind { Strict, Nonneg, Free };
  std::vector<Kind> kind(n, Kind::Free);
  for (std::size_t j : nonneg)
    if (j < n) kind[j] = Kind::Nonneg;
  for (std::size_t j : strict)
    if (j < n) kind[j] = Kind::Strict;

  std::vector<std::size_t> col_of(n);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    col_of[j] = ncols;
    ncols += kind[j] == Kind::Free ? 2 : 1;
  }

  std::vector<QVec> rows(m, QVec(ncols, Rat(0)));
  QVec rhs(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Int& c = eq.at(i, j);
      if (c == 0) continue;
      rows[i][col_of[j]] = Rat(c);
      if (kind[j] == Kind::Free) rows[i][col_of[j] + 1] = Rat(-c);
      if (kind[j] == Kind::Strict) rhs[i] -= Rat(c);
    }
  }

  auto sol = nonneg_solve(std::move(rows), std::move(rhs));
  if (!sol) return std::nullopt;
  QVec u(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    switch (kind[j]) {
      case Kind::Strict: u[j] = Rat(1) + (*sol)[col_of[j]]; break;
      case Kind::Nonneg: u[j] = (*sol)[col_of[j]]; break;
      case Kind::Free: u[j] = (*sol)[col_of[j]] - (*sol)[col_of[j] + 1]; break;
    }
  }
  return u;
}

}  // namespace tropmon
