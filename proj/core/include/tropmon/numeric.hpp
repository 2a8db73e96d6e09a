#ifndef TROPMON_NUMERIC_HPP
#define TROPMON_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace tropmon {

// All arithmetic in the library is exact. There is no floating point and
// hence no overflow or rounding semantics anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Vec = std::vector<Int>;   // lattice vector
using QVec = std::vector<Rat>;  // rational vector, denominators positive

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// gcd of all entries; 0 for the zero vector (or empty vector)
Int content(const Vec& v);

// v divided by its content; the zero vector stays zero
Vec primitive(Vec v);

bool is_zero(const Vec& v);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec negate(Vec v);
Vec scale(const Int& c, Vec v);
Int dot(const Vec& a, const Vec& b);

// lexicographic comparison, used as the canonical order on vector lists
bool lex_less(const Vec& a, const Vec& b);

std::string to_string(const Vec& v);

}  // namespace tropmon

#endif
