#ifndef TROPMON_REDUCTIONS_HPP
#define TROPMON_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <filesystem>

#include "tropmon/constructions.hpp"
#include "tropmon/tropical_types.hpp"

namespace tropmon {

/// Exactly one vertex over the origin, every other vertex with an outgoing
/// edge of negative slope. Target R_+, orthant mode.
bool is_monogenic(const TropicalType& t);

/// Give every all-outward-non-negative vertex over R_+ a fresh support
/// vertex over the origin via a slope-1 edge, then glue all origin
/// vertices into one. The tropical monoid is unchanged.
TropicalType monogenize(const TropicalType& t);

/// Contract all zero-slope edges (loops are deleted, bridges merge their
/// endpoints). Returns the reduced type and the number of contracted
/// edges; the monoid of the input splits off one free factor per
/// contracted edge. Rejects zero-slope bridges between vertices with
/// different faces, which cannot occur in representable types.
std::pair<TropicalType, std::size_t> expansive_reduce(const TropicalType& t);

/// Rank of the tropical monoid and the vertex count; the contract under
/// test is rank = |V| - 1. Requires representable + monogenic + expansive
/// (PreconditionFailed lists what is violated).
std::pair<std::size_t, std::size_t> check_rank_formula(const TropicalType& t);

/// Merge parallel edges through lcm-scaled common length generators and
/// integralise (no saturation, no sharpening). Requires representable +
/// monogenic + expansive.
FpMonoidImage unparalleled_monoid(const TropicalType& t);

/// Numeric record of the k-gon obstruction: a monoid is out of reach of
/// rank-1 targets when it has no free factor and more extremal rays than
/// C(rank+1, 2).
struct ObstructionCertificate {
  std::size_t monoid_rank = 0;
  std::size_t extremal_ray_count = 0;
  std::size_t free_factor_count = 0;
  std::size_t forced_vertex_count = 0;  // rank + 1
  std::size_t generator_bound = 0;      // C(forced_vertex_count, 2)
  bool inaccessible = false;
  ToricMonoid monoid;
};

/// Certificate for the cone over polygon x {1}. The polygon is given by
/// its lattice vertices in cyclic order; throws NotConvex / NotLattice.
ObstructionCertificate kgon_obstruction(const std::vector<std::array<Int, 2>>& polygon);

struct SearchBounds {
  std::size_t vertex_count = 0;
  std::size_t slope_bound = 0;
  std::size_t multiplicity_bound = 0;
  bool operator==(const SearchBounds&) const = default;
};

struct CatalogEntry {
  TropicalType type;
  ToricMonoid monoid;
  DualWitness witness;
};

struct SearchSummary {
  SearchBounds bounds;
  std::uint64_t candidates = 0;       // canonical graph candidates examined
  std::uint64_t valid_types = 0;      // connected monogenic expansive types
  std::uint64_t representable = 0;
  std::uint64_t unique_monoids = 0;
  std::uint64_t rank_violations = 0;  // rank != |V| - 1
  std::uint64_t unit_violations = 0;  // pre-sharpened monoid had units
  // largest extremal ray count among monoids without free factors
  std::size_t max_rays_no_free_factor = 0;
  std::vector<CatalogEntry> entries;
};

/// Enumerate representable monogenic expansive types over R_+ with the
/// given vertex count, |slope| bound and parallel-edge bound, deduplicate
/// the monoids by toric_equal, and persist the catalog (append-or-replace
/// keyed by bounds). jobs > 1 shards the enumeration deterministically.
SearchSummary search_types(std::size_t vertex_count, std::size_t slope_bound,
                           std::size_t multiplicity_bound,
                           const std::filesystem::path& catalog_path,
                           unsigned jobs = 1);

/// The enumeration behind search_types without persistence.
SearchSummary enumerate_types(std::size_t vertex_count, std::size_t slope_bound,
                              std::size_t multiplicity_bound, unsigned jobs = 1);

}  // namespace tropmon

#endif
