#ifndef TROPMON_TORIFICATION_HPP
#define TROPMON_TORIFICATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropmon/presentations.hpp"

namespace tropmon {

/// Image of a finitely presented monoid in a lattice Z^rank. The images
/// span the lattice as a group; the monoid they generate need not be
/// saturated or sharp.
struct FpMonoidImage {
  std::size_t rank = 0;
  std::vector<Vec> images;
  std::vector<std::string> names;  // parallel to images, may be empty
  bool operator==(const FpMonoidImage&) const = default;
};

/// Sharp saturated affine monoid: the lattice points of a strictly convex
/// full-dimensional rational cone, held by its Hilbert basis (sorted
/// lexicographically). generator_images records where the generators of an
/// originating presentation land, possibly at 0.
struct ToricMonoid {
  std::size_t rank = 0;
  std::vector<Vec> hilbert;
  std::map<std::string, Vec> generator_images;
  bool operator==(const ToricMonoid&) const = default;
};

/// Step 1 of torification: integralise and remove torsion, i.e. map N^G
/// into the torsion-free part of the groupification Z^G / sat(relations).
FpMonoidImage integralize(const Presentation& p);

/// Units of the monoid generated by the images are exactly the lattice
/// points of the lineality space of cone(images).
bool is_sharp(const FpMonoidImage& m);

/// Quotient by the units (lineality of cone(images)); the result is sharp
/// with the same saturation. Names are preserved.
FpMonoidImage sharpen(const FpMonoidImage& m);

/// Steps 2+3 of torification: sharpen, then replace the generator images
/// by the Hilbert basis of cone(images). The result is saturated and sharp.
FpMonoidImage saturate(const FpMonoidImage& m);

/// Full torification of N^G/R: integralise, sharpen, saturate.
ToricMonoid torify(const Presentation& p);

/// Wrap a sharpened-and-saturated image as a ToricMonoid (no generator map).
ToricMonoid to_toric(const FpMonoidImage& m);

/// Is there a unimodular lattice isomorphism matching the Hilbert bases
/// as sets?
bool toric_equal(const ToricMonoid& a, const ToricMonoid& b);

/// Are the two tuples of lattice vectors related by a unimodular map,
/// entry by entry?
bool lattice_tuple_equivalent(std::size_t rank_a, const std::vector<Vec>& a,
                              std::size_t rank_b, const std::vector<Vec>& b);

/// Maximal splitting P ≅ P' ⊕ N^k: a Hilbert basis element h splits off
/// exactly when an integer covector is 1 on h, 0 on the rest of the basis,
/// and non-negative on the cone.
std::pair<ToricMonoid, std::size_t> free_factor_split(const ToricMonoid& p);

ToricMonoid direct_sum(const ToricMonoid& a, const ToricMonoid& b);
ToricMonoid free_monoid(std::size_t k);

/// For a sharp saturated monoid this is |hilbert|.
std::size_t minimal_generator_count(const ToricMonoid& p);

/// Count of irreducible generators among the images; requires the monoid
/// to be sharp (throws NotSharp otherwise).
std::size_t minimal_generator_count(const FpMonoidImage& m);

}  // namespace tropmon

#endif
