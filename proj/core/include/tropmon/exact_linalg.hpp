#ifndef TROPMON_EXACT_LINALG_HPP
#define TROPMON_EXACT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "tropmon/errors.hpp"
#include "tropmon/numeric.hpp"

namespace tropmon {

/// Dense matrix of arbitrary-precision integers, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rs, std::size_t ncols);

  Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  IntMatrix transposed() const;
  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
Vec mul(const IntMatrix& a, const Vec& x);

/// Exact determinant (fraction-free elimination); matrix must be square.
Int det(const IntMatrix& m);

/// Smith normal form: u * m * v = d with u, v unimodular and d diagonal
/// with non-negative entries satisfying d1 | d2 | ...
struct SnfResult {
  IntMatrix u, d, v;
};
SnfResult smith_normal_form(const IntMatrix& m);

/// Basis of the integer kernel {x : m x = 0}, as columns.
std::vector<Vec> kernel_basis(const IntMatrix& m);

/// Basis of the saturation (span_Q(vectors) ∩ Z^rank) of the span of the
/// given vectors, together with the induced quotient map. The quotient
/// lattice Z^rank / saturation is torsion-free of rank `quotient_rank`;
/// `quotient(x)` are its coordinates.
struct SaturatedQuotient {
  std::size_t ambient_rank = 0;
  std::size_t quotient_rank = 0;
  IntMatrix projection;  // quotient_rank x ambient_rank
  Vec quotient(const Vec& x) const;
};
SaturatedQuotient saturated_quotient(std::size_t rank, const std::vector<Vec>& vectors);

/// Solve b y = x exactly over Q for the column span of b (columns = basis).
/// Returns nothing if x is not in the rational span.
std::optional<QVec> solve_rational(const std::vector<Vec>& basis, const Vec& x);

/// Basis of the saturated span (span_Q(vectors) ∩ Z^rank) with the exact
/// coordinate map: for x in the saturated span, x = Σ coords(x)_i basis_i.
struct SpanLattice {
  std::size_t ambient_rank = 0;
  std::size_t dim = 0;
  std::vector<Vec> basis;
  IntMatrix coord_map;  // dim x ambient_rank
  Vec coords(const Vec& x) const { return mul(coord_map, x); }
  Vec lift(const Vec& y) const;
};
SpanLattice span_lattice(std::size_t rank, const std::vector<Vec>& vectors);

/// Inverse of a matrix with determinant ±1; exact.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Exact feasibility: find u with eq·u = 0, u_i >= 1 for i in strict,
/// u_i >= 0 for i in nonneg, u_i free otherwise. Strictness via the >= 1
/// normalisation is equivalent to > 0 because the solution set is a cone.
/// Infeasibility is a value, not an error.
std::optional<QVec> strict_lp_feasible(const IntMatrix& eq,
                                       const std::set<std::size_t>& strict,
                                       const std::set<std::size_t>& nonneg);

/// Rational polyhedral cone, by ray generators and/or integer inequalities
/// (covectors a with the cone inside {a >= 0}). Stored rays are primitive.
struct ConeRep {
  std::size_t rank = 0;
  std::vector<Vec> rays;
  std::optional<std::vector<Vec>> inequalities;

  static ConeRep from_rays(std::size_t rank, std::vector<Vec> rays);
  static ConeRep from_inequalities(std::size_t rank, std::vector<Vec> ineqs);

  /// Ray generators, converting from the inequality form if necessary.
  std::vector<Vec> generators() const;
};

/// Exact membership x ∈ cone(rays), by rational feasibility.
bool in_cone(const Vec& x, const std::vector<Vec>& rays);

/// Exact membership x ∈ span(lineality) + cone(rays).
bool in_cone_with_lineality(const Vec& x, const std::vector<Vec>& lineality,
                            const std::vector<Vec>& rays);

/// True iff cone(rays) contains no line.
bool is_pointed(const std::vector<Vec>& rays);

/// Generators of the dual cone {y : y·g >= 0 for all g}, split into a
/// lineality basis and pointed rays (double description).
struct GeneratorForm {
  std::vector<Vec> lineality;
  std::vector<Vec> rays;
};
GeneratorForm dual_generators(std::size_t rank, const std::vector<Vec>& gens);

/// Primitive generators of the extremal rays, sorted lexicographically.
/// Empty for the zero cone.
std::vector<Vec> extreme_rays(const ConeRep& c);

/// Same result for cones already known to be pointed, with projective-hull
/// fast paths up to dimension 3.
std::vector<Vec> extreme_rays_of_pointed(std::size_t rank, const std::vector<Vec>& rays);

/// Integer functional strictly positive on every ray, or nothing when the
/// cone is not pointed (rays must be nonzero).
std::optional<Vec> try_positive_grading(std::size_t rank, const std::vector<Vec>& rays);

/// Extreme rays of a full-dimensional pointed cone with a known positive
/// grading; hull-based up to dimension 3.
std::vector<Vec> extreme_rays_graded(std::size_t rank, const std::vector<Vec>& rays,
                                     const Vec& grading);

/// The minimal generating set of cone(c) ∩ Z^rank, in lexicographic order.
/// Throws ConeNotPointed when the cone has a nonzero lineality space.
std::vector<Vec> hilbert_basis(const ConeRep& c);

/// Is target a non-negative integer combination of gens? All vectors must
/// lie in a pointed cone, which makes the search complete.
bool n_combination_exists(const Vec& target, const std::vector<Vec>& gens);

/// Mutual containment test for the two descriptions held by a ConeRep.
bool cone_forms_agree(const ConeRep& c);

}  // namespace tropmon

#endif
