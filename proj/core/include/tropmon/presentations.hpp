#ifndef TROPMON_PRESENTATIONS_HPP
#define TROPMON_PRESENTATIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "tropmon/exact_linalg.hpp"

namespace tropmon {

/// Formal sum of generators with non-negative integer coefficients.
/// Zero coefficients are never stored.
using Word = std::map<std::string, Int>;

struct Relation {
  Word lhs, rhs;
  bool operator==(const Relation&) const = default;
};

/// Finitely presented commutative monoid N^G / R.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  bool operator==(const Presentation&) const = default;
};

struct Bipartition {
  std::vector<std::string> left, right;
  bool operator==(const Bipartition&) const = default;
};

/// Structural checks: known generator names, coefficients > 0 as stored.
void validate(const Presentation& p);

/// Relation matrix with rows lhs - rhs, columns in generator order.
IntMatrix relation_matrix(const Presentation& p);

/// Generators whose image in the torification of N^G/R is zero. A
/// generator g is nonzero there exactly when some u >= 0 with
/// u·lhs = u·rhs for every relation has u(g) > 0.
std::vector<std::string> torified_zero_generators(const Presentation& p);

struct SanitizeResult {
  Presentation presentation;
  Bipartition bipartition;
};

/// Produce a bipartite and positive presentation of the same torification.
/// Default: drop torified-zero generators, then duplicate only generators
/// occurring on both relation sides (minimal doubling). With
/// uniform_doubling the duplicate is introduced for every generator first,
/// then zero generators are dropped.
SanitizeResult sanitize(const Presentation& p, bool uniform_doubling = false);

/// Does b partition the generators with every relation split as
/// (word in left) = (word in right)?
bool is_bipartite_for(const Presentation& p, const Bipartition& b);

/// Same generator set and identical relation list; generator order is
/// immaterial.
bool presentations_agree(const Presentation& a, const Presentation& b);

}  // namespace tropmon

#endif
