#ifndef TROPMON_CONSTRUCTIONS_HPP
#define TROPMON_CONSTRUCTIONS_HPP

#include "tropmon/tropical_types.hpp"

namespace tropmon {

/// Everything the universality construction produces: the type, a
/// representability witness, the continuity relations read back off the
/// type (which must reproduce the input presentation), and the tropical
/// monoid. leaf1/leaf2 name the two path endpoints, for the affine gluing.
struct ConstructionReport {
  TropicalType type;
  DualWitness witness;
  Presentation presentation_echo;
  ToricMonoid monoid;
  std::string leaf1, leaf2;
  std::vector<std::string> edge_generators;  // edge index -> input generator
};

/// Build the two-path tropical type of a bipartite positive presentation:
/// target rank = number of relations, slope of the edge of generator g in
/// coordinate i = coefficient of g in relation i, faces by flowing along
/// the two paths, the junction vertex landing on all of R^n_+.
/// Throws NotBipartite / NotPositive / NotSharp.
ConstructionReport construct_type(const Presentation& p, const Bipartition& b);

/// Triangle type over R_+ realizing the lattice monoid of
/// cone((1,0),(k,m)): v1=(1,0), v2=(k,m), v3 spanning Z^2 with them
/// ((1,1) unless overridden), slopes from the unique non-negative kernel
/// relation m1 v1 + m2 v2 = m3 v3.
ConstructionReport realize_rank2(const Int& k, const Int& m,
                                 std::optional<std::pair<Int, Int>> v3_override = std::nullopt);

/// Slope triple (m1, m2, m3) of a triangle report.
std::array<Int, 3> triangle_slopes(const ConstructionReport& r);

/// Glue the two leaf vertices, drop all faces, switch to the affine target.
TropicalType affine_glue(const ConstructionReport& r);

}  // namespace tropmon

#endif
