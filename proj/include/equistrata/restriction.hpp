#pragma once

#include <vector>

#include "equistrata/equivalence.hpp"

namespace equistrata {

// G acting on right cosets Hg by Hg -> Hgc. Coset 0 is H.
struct CosetAction {
  std::vector<Element> representatives;
  std::vector<int> coset_of;  // per element of G
  std::vector<std::vector<int>> images;  // images[c][i] = coset of reps[i] * c

  std::size_t index() const { return representatives.size(); }
  // Cycle decomposition of c as lists of coset indices.
  std::vector<std::vector<int>> cycles(Element c) const;
};

CosetAction coset_action(const FiniteGroup& g, const ElementSet& h);

struct BranchPoint {
  int cycle_length = 0;
  int period = 0;                 // m / k
  Element generator = 0;          // (r c r^-1)^k = r c^k r^-1 in G
  Element subgroup_generator = 0; // same element indexed in the subgroup
  int subgroup_class = 0;         // its conjugacy class in the subgroup
};

struct BranchData {
  std::size_t position = 0;  // elliptic entry of the ambient vector
  Element image = 0;
  int period = 0;
  std::vector<BranchPoint> cycles;  // every cycle, including period 1
};

struct InducedActionData {
  ElementSet subgroup;
  GroupPtr subgroup_group;
  std::size_t index = 0;
  Signature induced_signature;
  int induced_genus = 0;
  std::vector<BranchData> branch_data;

  // Distinguished generators (subgroup indices) in induced-signature order.
  std::vector<Element> rotation_vector() const;
};

// Branch data of the restriction of v to h, with Riemann-Hurwitz and
// Euler-characteristic bookkeeping asserted. `subgroup_group`, when given,
// must be g.subgroup(h).
InducedActionData induced_signature(const GeneratingVector& v, const ElementSet& h,
                                    GroupPtr subgroup_group = nullptr);
inline std::vector<BranchData> induced_rotation_data(const GeneratingVector& v, const ElementSet& h) {
  return induced_signature(v, h).branch_data;
}

struct InducedClasses {
  InducedActionData data;
  std::vector<TopologicalClass> classes;
  bool determined = false;
};

// Classes of `model` vectors with the induced signature whose elliptic
// entries realize the rotation data, transported into the model by `iso`
// (subgroup -> model; null when the model is the subgroup group itself).
InducedClasses classify_rotation(InducedActionData data, const Classifier& model, const Isomorphism* iso,
                                 const Limits& limits = {});

// Every class of subgroup vectors with the induced signature whose elliptic
// entries realize the rotation data up to subgroup conjugacy. The classifier
// must be built on g.subgroup(h).
InducedClasses induced_classes(const GeneratingVector& v, const ElementSet& h, const Classifier& subgroup_classifier,
                               const Limits& limits = {});
InducedClasses induced_classes(const GeneratingVector& v, const ElementSet& h, const Limits& limits = {});

}  // namespace equistrata
