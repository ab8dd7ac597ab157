#pragma once

#include "untwist/alexander.hpp"
#include "untwist/bounds.hpp"
#include "untwist/kirby.hpp"
#include "untwist/seifert.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace untwist::io {

/// Keys keep insertion order so output is stable.
/// Integers outside int64 are held as binary values containing their decimal
/// text; parse_json and dump_json translate them losslessly.
using Json = nlohmann::ordered_json;

/// Throws MalformedJson with line and column.
Json parse_json(std::string_view text);
/// indent < 0 gives a single line.
std::string dump_json(const Json& value, int indent = -1);

Json to_json(const Integer& n);
/// `where` names the field in error messages. Throws SchemaViolation.
Integer integer_from_json(const Json& value, const std::string& where);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& value, const std::string& where);

/// {"name": ..., "matrix": [[...]]}. Validation failures are rethrown as
/// SchemaViolation with the validation error as cause.
SeifertMatrix parse_seifert_file(std::string_view bytes);
std::string write_seifert_file(const SeifertMatrix& v);

std::string field_element_string(const Rational& q);
Json to_json(const LaurentPoly<PrimeField>& p);
Json to_json(const LaurentPoly<RationalField>& p);
LaurentPoly<PrimeField> prime_poly_from_json(const Json& value, const PrimeField& field);
LaurentPoly<RationalField> rational_poly_from_json(const Json& value);

Json to_json(const AnyAlexanderModule& module);
Json to_json(const BoundsReport& report);

Json to_json(const SurgeryPresentation& p);
SurgeryPresentation presentation_from_json(const Json& value);
Json to_json(const KirbyMove& move);
KirbyMove move_from_json(const Json& value, const std::string& where);

/// Move script: {"initial": {"matrix", "n", "k"}, "moves": [...]}.
struct MoveScript {
  SurgeryPresentation initial;
  std::vector<KirbyMove> moves;
};
MoveScript parse_move_script(std::string_view bytes);

/// {"initial": ..., "steps": [{"move": ..., "matrix": ...}]}
Json to_json(const MoveTrace& trace);
/// Reads a serialized trace and verifies it by replay.
MoveTrace parse_trace(std::string_view bytes);

Json to_json(const UnknottingTrace& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace untwist::io

namespace untwist {

struct CatalogEntry {
  std::string name;
  SeifertMatrix matrix;
  std::string notes;
};

/// Bundled knots; every entry is validated on load.
const std::vector<CatalogEntry>& catalog();
std::vector<CatalogEntry> parse_catalog(std::string_view bytes);
/// Throws UnknownCatalogEntry.
const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace untwist
