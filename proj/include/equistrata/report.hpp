#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "equistrata/strata.hpp"

namespace equistrata {

using Json = nlohmann::ordered_json;

Json vector_json(const GeneratingVector& v, const std::string& group_spec);
Json class_json(const TopologicalClass& c, const std::string& group_spec);
Json descriptor_json(const StratumDescriptor& d);
Json stratum_json(const StratumReport& r);

Json enumerate_report(const std::string& group_spec, const Signature& s, const std::vector<GeneratingVector>& vs);
Json classes_report(const std::string& group_spec, const Signature& s, const std::vector<TopologicalClass>& cs);
Json restriction_report(const std::string& group_spec, const std::vector<std::string>& subgroup,
                        const GeneratingVector& v, const InducedClasses& ic);
Json detect_report(const std::string& group_spec, const GeneratingVector& v, const std::vector<StratumReport>& rs);
Json scan_report(const ScanReport& s);
Json family_report(const FamilyReport& f);
Json catalog_report(const CatalogVerification& c);

// Markdown rendering of any report produced above.
std::string to_markdown(const Json& report);

}  // namespace equistrata
