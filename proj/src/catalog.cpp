#include "untwist/error.hpp"
#include "untwist/json_io.hpp"

namespace untwist {

namespace detail {
extern const char* const kCatalogJson;
}

std::vector<CatalogEntry> parse_catalog(std::string_view bytes) {
  const io::Json doc = io::parse_json(bytes);
  if (!doc.is_object() || !doc.contains("knots") || !doc["knots"].is_array())
    throw Error(ErrorCode::SchemaViolation, "catalog: expected {\"knots\": [...]}");
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < doc["knots"].size(); ++i) {
    const io::Json& k = doc["knots"][i];
    const std::string where = "knots[" + std::to_string(i) + "]";
    if (!k.is_object() || !k.contains("name") || !k["name"].is_string())
      throw Error(ErrorCode::SchemaViolation, where + ": missing name");
    const std::string name = k["name"].get<std::string>();
    const std::string notes = k.contains("notes") && k["notes"].is_string() ? k["notes"].get<std::string>() : "";
    io::Json file = io::Json::object();
    file["name"] = name;
    file["matrix"] = k.contains("matrix") ? k["matrix"] : io::Json();
    out.push_back({name, io::parse_seifert_file(io::dump_json(file)), notes});
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(detail::kCatalogJson);
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorCode::UnknownCatalogEntry, "no catalog entry named '" + std::string(name) + "'");
}

}  // namespace untwist
