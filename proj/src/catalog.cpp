#include "equistrata/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>

namespace equistrata {

GroupPtr CatalogEntry::build(const Limits& limits) const {
  if (names.empty()) return make_group(group_spec, limits);
  return make_group(group_spec, names, limits);
}

std::string CatalogEntry::label() const {
  return "g" + std::to_string(genus) + " case " + std::to_string(case_label);
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("EQUISTRATA_CATALOG"); env && *env) return env;
#ifdef EQUISTRATA_DATA_DIR
  return std::string(EQUISTRATA_DATA_DIR) + "/catalog.json";
#else
  return "data/catalog.json";
#endif
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("catalog " + path + ": " + e.what());
  }
  std::vector<CatalogEntry> out;
  try {
    for (const auto& j : doc.at("entries")) {
      CatalogEntry e;
      e.genus = j.at("genus").get<int>();
      e.case_label = j.at("case").get<int>();
      e.signature = Signature::parse(j.at("signature").get<std::string>());
      e.group_spec = j.at("group").get<std::string>();
      e.names = j.value("names", std::vector<std::string>{});
      auto id = j.at("id").get<std::vector<int>>();
      if (id.size() != 2) throw ParseError("id must be a pair");
      e.id = {id[0], id[1]};
      if (j.contains("reference")) e.reference = j.at("reference").get<std::string>();
      e.classes = j.value("classes", std::vector<std::vector<std::string>>{});
      e.relations = j.value("relations", std::vector<std::string>{});
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("catalog " + path + ": " + e.what());
  }
  return out;
}

std::vector<CatalogEntry> catalog_for_genus(const std::vector<CatalogEntry>& all, int genus) {
  std::vector<CatalogEntry> out;
  for (const auto& e : all)
    if (e.genus == genus) out.push_back(e);
  return out;
}

}  // namespace equistrata
