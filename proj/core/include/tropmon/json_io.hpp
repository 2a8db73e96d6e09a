#ifndef TROPMON_JSON_IO_HPP
#define TROPMON_JSON_IO_HPP

#include <filesystem>

#include <json.hpp>

#include "tropmon/constructions.hpp"
#include "tropmon/reductions.hpp"

namespace tropmon {

/// Key order is preserved so serialisation is byte-deterministic.
using Json = nlohmann::ordered_json;

Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

/// Rationals travel as strings ("p/q", or "p" when integral) so no reader
/// is tempted to round them.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json to_json(const Bipartition& b);
Bipartition bipartition_from_json(const Json& j);

Json to_json(const FpMonoidImage& m);

Json to_json(const ToricMonoid& m);
ToricMonoid toric_from_json(const Json& j);

Json to_json(const TropicalType& t);
TropicalType type_from_json(const Json& j);

Json to_json(const DualWitness& w);
DualWitness witness_from_json(const Json& j);

Json to_json(const ConstructionReport& r);
ConstructionReport report_from_json(const Json& j);

Json to_json(const ObstructionCertificate& c);

std::vector<std::array<Int, 2>> polygon_from_json(const Json& j);

Json to_json(const SearchSummary& s, bool with_entries = true);

/// Append the run to the catalog file, replacing any earlier run with the
/// same bounds. Single writer, whole-file rewrite.
void write_catalog_run(const std::filesystem::path& path, const SearchSummary& s);

Json load_json_file(const std::filesystem::path& path);

}  // namespace tropmon

#endif
