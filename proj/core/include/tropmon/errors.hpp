#ifndef TROPMON_ERRORS_HPP
#define TROPMON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropmon {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Domain preconditions. Verdicts (infeasible, not representable,
// inaccessible) are values, never exceptions.
struct ConeNotPointed : Error {
  explicit ConeNotPointed(const std::string& what = "cone has a nonzero lineality space") : Error(what) {}
};
struct NotSharp : Error {
  explicit NotSharp(const std::string& what = "monoid has nontrivial units") : Error(what) {}
};
struct NotBipartite : Error {
  explicit NotBipartite(const std::string& what = "presentation is not bipartite") : Error(what) {}
};
struct NotPositive : Error {
  explicit NotPositive(const std::string& what = "presentation has torified-zero generators") : Error(what) {}
};
struct NotMonogenic : Error {
  explicit NotMonogenic(const std::string& what = "tropical type is not monogenic") : Error(what) {}
};
struct PreconditionFailed : Error {
  explicit PreconditionFailed(const std::string& what) : Error(what) {}
};
struct InvalidConeData : Error {
  explicit InvalidConeData(const std::string& what) : Error(what) {}
};
struct InvalidBounds : Error {
  explicit InvalidBounds(const std::string& what) : Error(what) {}
};
struct NotConvex : Error {
  explicit NotConvex(const std::string& what) : Error(what) {}
};
struct NotLattice : Error {
  explicit NotLattice(const std::string& what) : Error(what) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace tropmon

#endif
