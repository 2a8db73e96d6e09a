#ifndef TROPMON_TOOLS_GOLDEN_HPP
#define TROPMON_TOOLS_GOLDEN_HPP

#include <sstream>
#include <string>

#include "tropmon/json_io.hpp"

namespace golden {

using namespace tropmon;

inline std::string word_str(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : w) {
    if (!first) os << " + ";
    if (c != 1) os << c << "*";
    os << g;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

inline Presentation worked_example_presentation() {
  return Presentation{{"e0", "e1", "e2", "e3"},
                      {{{{"e0", 1}, {"e2", 1}}, {{"e1", 2}}},
                       {{{"e1", 1}, {"e3", 1}}, {{"e2", 2}}},
                       {{{"e0", 1}, {"e3", 1}}, {{"e1", 1}, {"e2", 1}}}}};
}

inline std::string repro_main_construction() {
  std::ostringstream os;
  os << "== main construction ==\n";
  auto s = sanitize(worked_example_presentation());
  os << "sanitized generators:";
  for (const auto& g : s.presentation.generators) os << " " << g;
  os << "\nleft:";
  for (const auto& g : s.bipartition.left) os << " " << g;
  os << "\nright:";
  for (const auto& g : s.bipartition.right) os << " " << g;
  os << "\nrelations:\n";
  for (const auto& r : s.presentation.relations)
    os << "  " << word_str(r.lhs) << " = " << word_str(r.rhs) << "\n";
  auto rep = construct_type(s.presentation, s.bipartition);
  os << "target rank: " << rep.type.n << "\n";
  os << "slopes:\n";
  for (std::size_t k = 0; k < rep.type.edges.size(); ++k)
    os << "  " << rep.edge_generators[k] << " " << to_string(rep.type.edges[k].slope) << "\n";
  os << "monoid: rank " << rep.monoid.rank << ", hilbert basis";
  for (const Vec& h : rep.monoid.hilbert) os << " " << to_string(h);
  os << "\nrepresentable: " << (witness_valid(rep.type, rep.witness) ? "yes" : "no") << "\n";
  os << "echo matches input: "
     << (presentations_agree(rep.presentation_echo, s.presentation) ? "yes" : "no") << "\n";
  os << "graph genus: " << graph_genus(rep.type) << "\n";
  return os.str();
}

inline std::string repro_2dcone() {
  std::ostringstream os;
  os << "== rank-2 cone (k,m) = (1,3) ==\n";
  auto rep = realize_rank2(1, 3);
  auto slopes = triangle_slopes(rep);
  os << "slopes: (" << slopes[0] << ", " << slopes[1] << ", " << slopes[2] << ")\n";
  os << "monoid: rank " << rep.monoid.rank << ", hilbert basis";
  for (const Vec& h : rep.monoid.hilbert) os << " " << to_string(h);
  os << "\nhilbert basis size: " << rep.monoid.hilbert.size() << "\n";
  ToricMonoid expected{2, hilbert_basis(ConeRep::from_rays(2, {{Int(1), Int(0)}, {Int(1), Int(3)}})), {}};
  os << "matches cone((1,0),(1,3)) lattice monoid: "
     << (toric_equal(rep.monoid, expected) ? "yes" : "no") << "\n";
  return os.str();
}

inline std::string repro_rank_formula_sweep() {
  std::ostringstream os;
  os << "== rank formula sweep ==\n";
  std::uint64_t violations = 0;
  auto line = [&](std::size_t v, std::size_t b, std::size_t m) {
    SearchSummary s = enumerate_types(v, b, m);
    violations += s.rank_violations + s.unit_violations;
    os << "V=" << v << " B=" << b << " M=" << m << ": candidates=" << s.candidates
       << " valid=" << s.valid_types << " representable=" << s.representable
       << " unique=" << s.unique_monoids << " rank_violations=" << s.rank_violations
       << " unit_violations=" << s.unit_violations << "\n";
  };
  line(1, 3, 2);
  line(2, 3, 2);
  line(3, 3, 2);
  line(4, 2, 1);
  os << "violations: " << violations << "\n";
  return os.str();
}

inline std::string repro_seven_gon() {
  std::ostringstream os;
  os << "== seven-gon obstruction ==\n";
  auto describe = [&](const char* name, const std::vector<std::array<Int, 2>>& poly) {
    auto c = kgon_obstruction(poly);
    os << name << ": rays=" << c.extremal_ray_count << " free_factors=" << c.free_factor_count
       << " bound=" << c.generator_bound
       << " verdict=" << (c.inaccessible ? "inaccessible" : "inconclusive") << "\n";
  };
  describe("heptagon", {{Int(0), Int(0)},
                        {Int(1), Int(0)},
                        {Int(2), Int(1)},
                        {Int(2), Int(2)},
                        {Int(1), Int(3)},
                        {Int(0), Int(3)},
                        {Int(-1), Int(1)}});
  describe("square", {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}});
  describe("hexagon", {{Int(0), Int(0)},
                       {Int(1), Int(0)},
                       {Int(2), Int(1)},
                       {Int(2), Int(2)},
                       {Int(1), Int(2)},
                       {Int(0), Int(1)}});
  return os.str();
}

inline std::string run_repro(const std::string& id) {
  if (id == "example-main-construction") return repro_main_construction();
  if (id == "example-2dcone") return repro_2dcone();
  if (id == "rank-formula-sweep") return repro_rank_formula_sweep();
  if (id == "seven-gon") return repro_seven_gon();
  throw ParseError("unknown repro id: " + id);
}

// checked-in golden reports; the worked-example values come from the
// figures and tables the construction is meant to reproduce
inline const std::string* expected_report(const std::string& id) {
  static const std::string main_construction =
      "== main construction ==\n"
      "sanitized generators: e0 e1 e2 e3 e1' e2'\n"
      "left: e0 e3 e1' e2'\n"
      "right: e1 e2\n"
      "relations:\n"
      "  e0 + e2' = 2*e1\n"
      "  e1' + e3 = 2*e2\n"
      "  e0 + e3 = e1 + e2\n"
      "  e1' = e1\n"
      "  e2' = e2\n"
      "target rank: 5\n"
      "slopes:\n"
      "  e0 (1,0,1,0,0)\n"
      "  e3 (0,1,1,0,0)\n"
      "  e1' (0,1,0,1,0)\n"
      "  e2' (1,0,0,0,1)\n"
      "  e1 (2,0,1,1,0)\n"
      "  e2 (0,2,1,0,1)\n"
      "monoid: rank 2, hilbert basis (1,0) (1,1) (1,2) (1,3)\n"
      "representable: yes\n"
      "echo matches input: yes\n"
      "graph genus: 0\n";
  static const std::string cone2d =
      "== rank-2 cone (k,m) = (1,3) ==\n"
      "slopes: (2, 1, 3)\n"
      "monoid: rank 2, hilbert basis (1,0) (1,1) (1,2) (1,3)\n"
      "hilbert basis size: 4\n"
      "matches cone((1,0),(1,3)) lattice monoid: yes\n";
  static const std::string sweep =
      "== rank formula sweep ==\n"
      "V=1 B=3 M=2: candidates=1 valid=1 representable=1 unique=1 rank_violations=0 unit_violations=0\n"
      "V=2 B=3 M=2: candidates=10 valid=9 representable=9 unique=1 rank_violations=0 unit_violations=0\n"
      "V=3 B=3 M=2: candidates=955 valid=855 representable=855 unique=5 rank_violations=0 unit_violations=0\n"
      "V=4 B=2 M=1: candidates=590 valid=388 representable=316 unique=9 rank_violations=0 unit_violations=0\n"
      "violations: 0\n";
  static const std::string seven =
      "== seven-gon obstruction ==\n"
      "heptagon: rays=7 free_factors=0 bound=6 verdict=inaccessible\n"
      "square: rays=4 free_factors=0 bound=6 verdict=inconclusive\n"
      "hexagon: rays=6 free_factors=0 bound=6 verdict=inconclusive\n";
  if (id == "example-main-construction") return &main_construction;
  if (id == "example-2dcone") return &cone2d;
  if (id == "rank-formula-sweep") return &sweep;
  if (id == "seven-gon") return &seven;
  return nullptr;
}

}  // namespace golden

#endif
