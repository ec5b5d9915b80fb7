#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equistrata/group.hpp"
#include "equistrata/signature.hpp"

namespace equistrata {

struct CatalogEntry {
  int genus = 0;
  int case_label = 0;
  Signature signature;
  std::string group_spec;
  std::vector<std::string> names;  // empty: keep the spec's names
  std::pair<int, int> id{0, 0};
  std::optional<std::string> reference;
  // Elliptic entries of the admitted topological classes; empty admits all.
  std::vector<std::vector<std::string>> classes;
  // Words that must evaluate to the identity.
  std::vector<std::string> relations;

  GroupPtr build(const Limits& limits = {}) const;
  std::string label() const;  // "g3 case 32"
};

std::string default_catalog_path();
std::vector<CatalogEntry> load_catalog(const std::string& path = default_catalog_path());
std::vector<CatalogEntry> catalog_for_genus(const std::vector<CatalogEntry>& all, int genus);

}  // namespace equistrata
