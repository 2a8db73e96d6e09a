#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropmon/json_io.hpp"
#include "golden.hpp"

namespace {

using namespace tropmon;

// 0: success / positive verdict, 1: negative domain verdict,
// 2: input or precondition error
constexpr int kOk = 0;
constexpr int kVerdict = 1;
constexpr int kInputError = 2;

struct Output {
  std::string out_path;
  bool pretty = false;

  void emit(const Json& j, const std::string& pretty_text) const {
    const std::string body = pretty ? pretty_text : j.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(out_path);
      if (!f) throw Error("cannot write " + out_path);
      f << body;
    }
  }
};

std::string describe(const ToricMonoid& m) {
  std::ostringstream os;
  os << "toric monoid of rank " << m.rank << ", Hilbert basis (" << m.hilbert.size()
     << " elements):\n";
  for (const Vec& h : m.hilbert) os << "  " << to_string(h) << "\n";
  if (!m.generator_images.empty()) {
    os << "generator images:\n";
    for (const auto& [g, v] : m.generator_images) os << "  " << g << " -> " << to_string(v) << "\n";
  }
  return os.str();
}

std::string describe(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : p.generators) os << " " << g;
  os << "\nrelations (" << p.relations.size() << "):\n";
  for (const auto& r : p.relations) {
    os << "  ";
    bool first = true;
    for (const auto& [g, c] : r.lhs) {
      if (!first) os << " + ";
      if (c != 1) os << c << "*";
      os << g;
      first = false;
    }
    if (first) os << "0";
    os << " = ";
    first = true;
    for (const auto& [g, c] : r.rhs) {
      if (!first) os << " + ";
      if (c != 1) os << c << "*";
      os << g;
      first = false;
    }
    if (first) os << "0";
    os << "\n";
  }
  return os.str();
}

std::string describe(const TropicalType& t) {
  std::ostringstream os;
  os << "tropical type, target " << (t.mode == TargetMode::orthant ? "R^n_+" : "R^n")
     << " with n = " << t.n << "\n";
  os << "vertices (" << t.vertices.size() << "):\n";
  for (const auto& v : t.vertices) {
    os << "  " << v.id << " genus " << v.genus;
    if (t.mode == TargetMode::orthant) {
      os << " face {";
      bool first = true;
      for (int i : v.face) {
        if (!first) os << ",";
        os << i;
        first = false;
      }
      os << "}";
    }
    os << "\n";
  }
  os << "edges (" << t.edges.size() << "):\n";
  for (const auto& e : t.edges)
    os << "  " << e.from << " -> " << e.to << "  slope " << to_string(e.slope) << "\n";
  if (!t.legs.empty()) {
    os << "legs (" << t.legs.size() << "):\n";
    for (const auto& l : t.legs)
      os << "  at " << l.at << " marking " << l.marking << " slope " << to_string(l.slope) << "\n";
  }
  return os.str();
}

std::string construction_trace(const ConstructionReport& r) {
  std::ostringstream os;
  os << "construction to R^" << r.type.n << "_+ (one coordinate per relation)\n";
  os << "edge slopes:\n";
  for (std::size_t k = 0; k < r.type.edges.size(); ++k) {
    os << "  " << (k < r.edge_generators.size() ? r.edge_generators[k] : edge_length_name(k))
       << " : " << r.type.edges[k].from << " -> " << r.type.edges[k].to << "  "
       << to_string(r.type.edges[k].slope) << "\n";
  }
  os << "junction continuity relations:\n" << describe(r.presentation_echo);
  os << describe(r.monoid);
  os << "representability witness:\n";
  for (const auto& [g, q] : r.witness) os << "  " << g << " = " << rat_to_string(q) << "\n";
  return os.str();
}

Presentation load_presentation(const std::string& path) {
  return presentation_from_json(load_json_file(path));
}

TropicalType load_type(const std::string& path) {
  TropicalType t = type_from_json(load_json_file(path));
  require_valid(t);
  return t;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact computations with toric monoids and tropical types"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--pretty", out.pretty, "human-readable output instead of JSON");
  app.add_option("--out", out.out_path, "write output to a file instead of stdout");

  std::string in_path;
  Int opt_k = 1, opt_m = 1;
  std::string opt_v3;
  std::size_t s_vertices = 3, s_slope = 2, s_mult = 1;
  unsigned s_jobs = 1;
  std::string s_out;
  std::string repro_id;
  bool uniform = false;

  auto* torify_cmd = app.add_subcommand("torify", "torification of a presentation");
  torify_cmd->add_option("input", in_path, "presentation JSON")->required();

  auto* sanitize_cmd =
      app.add_subcommand("sanitize", "bipartite positive presentation of the same monoid");
  sanitize_cmd->add_option("input", in_path, "presentation JSON")->required();
  sanitize_cmd->add_flag("--uniform", uniform, "duplicate every generator, as in the generic construction");

  auto* construct_cmd =
      app.add_subcommand("construct", "tropical type realizing a presentation's monoid");
  construct_cmd->add_option("input", in_path, "presentation JSON, or sanitize output")->required();

  auto* monoid_cmd = app.add_subcommand("type-monoid", "tropical monoid of a tropical type");
  monoid_cmd->add_option("input", in_path, "tropical type JSON")->required();

  auto* rep_cmd = app.add_subcommand("representable", "representability witness, if any");
  rep_cmd->add_option("input", in_path, "tropical type JSON")->required();

  auto* mono_cmd = app.add_subcommand("monogenize", "equivalent monogenic type");
  mono_cmd->add_option("input", in_path, "tropical type JSON")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "contract zero-slope edges");
  reduce_cmd->add_option("input", in_path, "monogenic tropical type JSON")->required();

  auto* rank_cmd = app.add_subcommand("rank-check", "monoid rank versus vertex count");
  rank_cmd->add_option("input", in_path, "tropical type JSON")->required();

  auto* unpar_cmd = app.add_subcommand("unparalleled", "merge parallel edges, integralise");
  unpar_cmd->add_option("input", in_path, "tropical type JSON")->required();

  auto* r2_cmd = app.add_subcommand("realize2d", "triangle type for the cone((1,0),(k,m)) monoid");
  r2_cmd->add_option("--k", opt_k, "first coordinate of the second ray")->required();
  r2_cmd->add_option("--m", opt_m, "second coordinate of the second ray")->required();
  r2_cmd->add_option("--v3", opt_v3, "override the interior vector, as 'a,b'");

  auto* obstruct_cmd = app.add_subcommand("obstruct", "k-gon inaccessibility certificate");
  obstruct_cmd->add_option("input", in_path, "polygon JSON: [[x,y],...]")->required();

  auto* glue_cmd = app.add_subcommand("glue-affine", "genus-1 affine type from a construction");
  glue_cmd->add_option("input", in_path, "construct output JSON")->required();

  auto* search_cmd = app.add_subcommand("search", "bounded search over tropical types");
  search_cmd->add_option("--vertices", s_vertices, "vertex count")->required();
  search_cmd->add_option("--slope-bound", s_slope, "max |slope|")->required();
  search_cmd->add_option("--multiplicity-bound", s_mult, "max parallel edges per pair")->required();
  search_cmd->add_option("--catalog", s_out, "catalog file (default $TROPMON_CATALOG or catalog.json)");
  search_cmd->add_option("--jobs", s_jobs, "deterministic enumeration shards");

  auto* repro_cmd = app.add_subcommand("repro", "reproduce a worked example against golden output");
  repro_cmd->add_option("id", repro_id, "example-main-construction | example-2dcone | rank-formula-sweep | seven-gon")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (torify_cmd->parsed()) {
    ToricMonoid m = torify(load_presentation(in_path));
    out.emit(to_json(m), describe(m));
    return kOk;
  }

  if (sanitize_cmd->parsed()) {
    auto s = sanitize(load_presentation(in_path), uniform);
    Json j;
    j["presentation"] = to_json(s.presentation);
    j["bipartition"] = to_json(s.bipartition);
    std::ostringstream os;
    os << describe(s.presentation);
    os << "left:";
    for (const auto& g : s.bipartition.left) os << " " << g;
    os << "\nright:";
    for (const auto& g : s.bipartition.right) os << " " << g;
    os << "\n";
    out.emit(j, os.str());
    return kOk;
  }

  if (construct_cmd->parsed()) {
    Json j = load_json_file(in_path);
    Presentation p;
    Bipartition b;
    if (j.contains("presentation") && j.contains("bipartition")) {
      p = presentation_from_json(j["presentation"]);
      b = bipartition_from_json(j["bipartition"]);
    } else {
      auto s = sanitize(presentation_from_json(j));
      p = std::move(s.presentation);
      b = std::move(s.bipartition);
    }
    ConstructionReport r = construct_type(p, b);
    out.emit(to_json(r), construction_trace(r));
    return kOk;
  }

  if (monoid_cmd->parsed()) {
    ToricMonoid m = tropical_monoid(load_type(in_path));
    out.emit(to_json(m), describe(m));
    return kOk;
  }

  if (rep_cmd->parsed()) {
    auto w = is_representable(load_type(in_path));
    Json j;
    j["representable"] = w.has_value();
    if (w) j["witness"] = to_json(*w);
    std::ostringstream os;
    if (w) {
      os << "representable; witness:\n";
      for (const auto& [g, q] : *w) os << "  " << g << " = " << rat_to_string(q) << "\n";
    } else {
      os << "not representable\n";
    }
    out.emit(j, os.str());
    return w ? kOk : kVerdict;
  }

  if (mono_cmd->parsed()) {
    TropicalType t = monogenize(load_type(in_path));
    out.emit(to_json(t), describe(t));
    return kOk;
  }

  if (reduce_cmd->parsed()) {
    auto [t, zero_edges] = expansive_reduce(load_type(in_path));
    Json j;
    j["type"] = to_json(t);
    j["zero_edge_count"] = zero_edges;
    std::ostringstream os;
    os << "contracted " << zero_edges << " zero-slope edge(s)\n" << describe(t);
    out.emit(j, os.str());
    return kOk;
  }

  if (rank_cmd->parsed()) {
    auto [rank, vertices] = check_rank_formula(load_type(in_path));
    Json j;
    j["rank"] = rank;
    j["vertices"] = vertices;
    j["satisfied"] = rank == vertices - 1;
    std::ostringstream os;
    os << "rank " << rank << ", vertices " << vertices << ", rank == vertices - 1: "
       << (rank == vertices - 1 ? "yes" : "NO") << "\n";
    out.emit(j, os.str());
    return kOk;
  }

  if (unpar_cmd->parsed()) {
    TropicalType t = load_type(in_path);
    FpMonoidImage m = unparalleled_monoid(t);
    std::size_t count = minimal_generator_count(m);
    std::size_t nv = t.vertices.size();
    std::size_t bound = nv * (nv - 1) / 2;
    Json j;
    j["monoid"] = to_json(m);
    j["minimal_generators"] = count;
    j["bound"] = bound;
    j["within_bound"] = count <= bound;
    std::ostringstream os;
    os << "unparalleled monoid of rank " << m.rank << ", minimal generators " << count
       << " <= C(" << nv << ",2) = " << bound << "\n";
    for (std::size_t i = 0; i < m.images.size(); ++i)
      os << "  " << (i < m.names.size() ? m.names[i] : std::to_string(i)) << " -> "
         << to_string(m.images[i]) << "\n";
    out.emit(j, os.str());
    return kOk;
  }

  if (r2_cmd->parsed()) {
    std::optional<std::pair<Int, Int>> v3;
    if (!opt_v3.empty()) {
      auto comma = opt_v3.find(',');
      if (comma == std::string::npos) throw ParseError("--v3 expects 'a,b'");
      v3 = {Int(opt_v3.substr(0, comma)), Int(opt_v3.substr(comma + 1))};
    }
    ConstructionReport r = realize_rank2(opt_k, opt_m, v3);
    auto slopes = triangle_slopes(r);
    Json j = to_json(r);
    j["slopes"] = Json::array({int_to_json(slopes[0]), int_to_json(slopes[1]), int_to_json(slopes[2])});
    std::ostringstream os;
    os << "triangle slopes (m1, m2, m3) = (" << slopes[0] << ", " << slopes[1] << ", "
       << slopes[2] << ")\n"
       << construction_trace(r);
    out.emit(j, os.str());
    return kOk;
  }

  if (obstruct_cmd->parsed()) {
    auto polygon = polygon_from_json(load_json_file(in_path));
    ObstructionCertificate c = kgon_obstruction(polygon);
    std::ostringstream os;
    os << "rank " << c.monoid_rank << " monoid, " << c.extremal_ray_count << " extremal rays, "
       << c.free_factor_count << " free factor(s)\n"
       << "a rank-1 tropical type would force " << c.forced_vertex_count
       << " vertices and at most " << c.generator_bound << " unparalleled generators\n"
       << "verdict: " << (c.inaccessible ? "inaccessible" : "inconclusive") << "\n";
    out.emit(to_json(c), os.str());
    return c.inaccessible ? kVerdict : kOk;
  }

  if (glue_cmd->parsed()) {
    ConstructionReport r = report_from_json(load_json_file(in_path));
    TropicalType t = affine_glue(r);
    out.emit(to_json(t), describe(t));
    return kOk;
  }

  if (search_cmd->parsed()) {
    std::filesystem::path catalog = s_out;
    if (catalog.empty()) {
      const char* env = std::getenv("TROPMON_CATALOG");
      catalog = env ? env : "catalog.json";
    }
    SearchSummary s = search_types(s_vertices, s_slope, s_mult, catalog, s_jobs);
    Json j = to_json(s, false);
    j["catalog"] = catalog.string();
    std::ostringstream os;
    os << "examined " << s.candidates << " canonical candidates, " << s.valid_types
       << " monogenic expansive types, " << s.representable << " representable, "
       << s.unique_monoids << " distinct monoids\n"
       << "rank violations: " << s.rank_violations << ", unit violations: " << s.unit_violations
       << "\ncatalog: " << catalog.string() << "\n";
    out.emit(j, os.str());
    return kOk;
  }

  if (repro_cmd->parsed()) {
    std::string report = golden::run_repro(repro_id);
    const std::string* expected = golden::expected_report(repro_id);
    if (!expected) throw ParseError("unknown repro id: " + repro_id);
    std::cout << report;
    if (report != *expected) {
      std::cerr << "MISMATCH against the golden report:\n--- expected ---\n"
                << *expected << "--- actual ---\n"
                << report;
      return kVerdict;
    }
    std::cout << "matches the golden report\n";
    return kOk;
  }

  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
