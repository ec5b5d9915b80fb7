#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equistrata/catalog.hpp"
#include "equistrata/restriction.hpp"

namespace equistrata {

struct StratumDescriptor {
  std::string group;        // spec or label of the group
  std::size_t order = 0;
  Signature signature;
  std::string class_id;     // empty when not computed
  std::vector<std::string> representative;  // elliptic/handle entries as words
  int genus = 0;
  int dimension = 0;
};

struct SubgroupInfo {
  std::size_t order = 0;
  std::vector<std::string> generators;  // words in the ambient generators
  std::size_t conjugates = 0;           // size of its conjugacy class
};

struct WitnessPair {
  SubgroupInfo first;
  SubgroupInfo second;
  // second's generators -> words of their images in first
  std::vector<std::pair<std::string, std::string>> isomorphism;
  std::string shared_class;
  bool determined = true;
  bool non_conjugate_verified = false;
  bool replay_verified = false;
  // Representative of the shared class, carried by the first subgroup.
  GeneratingVector induced;
};

enum class Verdict { witness_found, no_witness };

struct StratumReport {
  StratumDescriptor ambient;
  StratumDescriptor induced;
  std::string subgroup_type;     // description of the isomorphism type
  std::size_t subgroup_classes = 0;  // conjugacy classes of that type
  std::vector<WitnessPair> witness_pairs;
  Verdict verdict = Verdict::no_witness;
  std::vector<std::string> caveats;
};

// Structural name: C4xC2, D6, S4, Q8, A4, or "order n".
std::string group_name(const FiniteGroup& g);
StratumDescriptor describe_action(const GeneratingVector& v, const Limits& limits = {}, bool with_class = true);
SubgroupInfo describe_subgroup(const FiniteGroup& g, const ElementSet& h);

// Pairs of non-conjugate isomorphic subgroups with equal induced classes.
// With targets, only subgroups isomorphic to one of them are examined and a
// no_witness report is emitted for each target left without a witness.
std::vector<StratumReport> detect(const GeneratingVector& v, const std::vector<GroupPtr>& targets = {},
                                  const Limits& limits = {});

struct AmbientRef {
  int case_label = 0;
  std::size_t class_index = 0;
  std::string group;
  std::pair<int, int> id;
  std::size_t witness_pairs = 0;
};

struct ScanStratum {
  int case_label = 0;
  std::size_t class_index = 0;
  std::pair<int, int> id;
  StratumDescriptor stratum;
  bool flagged = false;
  std::vector<AmbientRef> ambients;
};

struct ScanReport {
  int genus = 0;
  std::vector<ScanStratum> strata;
  std::vector<std::string> caveats;

  std::size_t flagged() const;
};

ScanReport scan_genus(int genus, const std::vector<CatalogEntry>& catalog, const Limits& limits = {});

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct FamilyReport {
  std::string family;
  std::vector<std::pair<std::string, int>> params;
  StratumReport report;
  std::vector<Check> checks;
  bool pass = false;
};

// Families: hyperelliptic_klein (g), dihedral_8n (g), cyclic_2n (n),
// generalized_fermat (k, n).
FamilyReport family_check(const std::string& family, const std::vector<std::pair<std::string, int>>& params,
                          const Limits& limits = {});

struct CatalogCheck {
  std::string entry;
  int genus = 0;
  int case_label = 0;
  std::string signature;
  std::pair<int, int> id;
  std::size_t order = 0;
  std::size_t vectors = 0;
  std::size_t classes = 0;
  std::vector<Check> checks;
  bool pass = false;
};

struct CatalogVerification {
  std::vector<CatalogCheck> entries;
  bool pass = false;
};

CatalogVerification verify_catalog(const std::vector<CatalogEntry>& catalog, std::optional<int> genus = std::nullopt,
                                   const Limits& limits = {});

// Resolves an entry's admitted classes (all classes when the entry lists none).
std::vector<TopologicalClass> admitted_classes(const CatalogEntry& entry, const Classifier& classifier);

}  // namespace equistrata
