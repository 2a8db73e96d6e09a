#ifndef TROPMON_TROPICAL_TYPES_HPP
#define TROPMON_TROPICAL_TYPES_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropmon/presentations.hpp"
#include "tropmon/torification.hpp"

namespace tropmon {

enum class TargetMode { orthant, affine };

/// Face of R^n_+, as a 0-indexed subset of the coordinates.
using FaceSet = std::set<int>;

struct TropVertex {
  std::string id;
  Int genus = 0;
  FaceSet face;
  bool operator==(const TropVertex&) const = default;
};

/// The stored slope belongs to the from->to orientation; the reverse slope
/// is derived, which makes antisymmetry structural.
struct TropEdge {
  std::string from, to;
  Vec slope;
  FaceSet face;
  bool operator==(const TropEdge&) const = default;
};

struct TropLeg {
  std::string at;
  int marking = 0;  // stored but carries no downstream semantics
  Vec slope;
  FaceSet face;
  bool operator==(const TropLeg&) const = default;
};

/// Decorated graph of a tropical map to R^n_+ (orthant mode) or to R^n
/// (affine mode, no face data).
struct TropicalType {
  int n = 0;
  TargetMode mode = TargetMode::orthant;
  std::vector<TropVertex> vertices;
  std::vector<TropEdge> edges;
  std::vector<TropLeg> legs;
  bool operator==(const TropicalType&) const = default;

  const TropVertex& vertex(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const;
};

enum class ViolationKind {
  BadReference,
  DuplicateId,
  EmptyGraph,
  Disconnected,
  NegativeGenus,
  FaceOutOfRange,
  SlopeDimension,
  SlopeSupport,
  FaceMonotonicity,
  AffineFace,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// All structural and face/slope invariants; empty result means valid.
/// Multidegrees are derived from slopes, so balancing cannot be violated
/// by stored data; same for slope antisymmetry.
std::vector<Violation> validate(const TropicalType& t);

void require_valid(const TropicalType& t);

/// Multidegree d_v: sum of slopes over edges and legs oriented away from v.
Vec multidegree(const TropicalType& t, const std::string& vertex_id);

/// b_1 of the underlying graph.
std::size_t graph_genus(const TropicalType& t);

/// Edge-length generator name for edge k, and vertex-position generator
/// name for coordinate i at a vertex.
std::string edge_length_name(std::size_t k);
std::string vertex_coord_name(const std::string& vertex_id, int i);

/// Generators l_e for every edge and f(v)_i for i in I(v); one relation per
/// (edge, i in I(e)): f(v2)_i = f(v1)_i + m_i l_e, rearranged to
/// non-negative coefficients, with f(v)_i read as 0 when i is not in I(v).
/// Legs contribute nothing. Orthant mode only.
Presentation orthant_presentation(const TropicalType& t);

/// Tropical monoid P_tau: torification of the orthant (resp. affine)
/// presentation.
ToricMonoid tropical_monoid(const TropicalType& t);

/// Exact rational values for the presentation generators, certifying
/// representability.
using DualWitness = std::map<std::string, Rat>;

/// Strict LP over the presentation relations, strict on every generator;
/// legs additionally need slope_i > 0 for i in I(l) \ I(v) and slope_i >= 0
/// for i in I(v). Returns the witness, or nothing.
std::optional<DualWitness> is_representable(const TropicalType& t);

/// Does the witness satisfy every relation exactly, strictly positively?
bool witness_valid(const TropicalType& t, const DualWitness& w);

/// Edge lengths only, one relation per fundamental cycle of a spanning
/// tree. Requires a monogenic type with target R_+.
Presentation monogenic_presentation(const TropicalType& t);

/// Edge lengths only, n relations per fundamental cycle. Affine mode.
/// Trees yield the free presentation.
Presentation affine_presentation(const TropicalType& t);

/// Exactly one vertex over the origin face, and every other vertex has an
/// outgoing edge of negative slope. Target R_+, orthant mode.
bool monogenic(const TropicalType& t);

}  // namespace tropmon

#endif
