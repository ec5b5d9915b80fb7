#pragma once

#include <string>
#include <vector>

#include "equistrata/group.hpp"
#include "equistrata/signature.hpp"

namespace equistrata {

// Images (alpha1, beta1, ..., alpha_h, beta_h, x1, ..., xl) of the canonical
// Fuchsian generators.
struct GeneratingVector {
  GroupPtr group;
  Signature signature;
  std::vector<Element> handles;
  std::vector<Element> elliptic;

  std::vector<Element> entries() const;
  static GeneratingVector from_entries(GroupPtr group, Signature s, const std::vector<Element>& entries);

  // Lexicographic on (handles, elliptic) index tuples.
  bool operator<(const GeneratingVector& o) const {
    return std::tie(handles, elliptic) < std::tie(o.handles, o.elliptic);
  }
  bool operator==(const GeneratingVector& o) const {
    return handles == o.handles && elliptic == o.elliptic;
  }
};

// Parses words or cycle strings in the group's generator names.
GeneratingVector make_vector(GroupPtr group, Signature s, const std::vector<std::string>& handles,
                             const std::vector<std::string>& elliptic);

struct Validity {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

Validity is_valid(const GeneratingVector& v);

// Product of commutators and elliptic entries; identity for a valid vector.
Element long_relation(const FiniteGroup& g, const std::vector<Element>& handles,
                      const std::vector<Element>& elliptic);

// Every valid vector, sorted. Throws BudgetExceeded past limits.max_vectors.
std::vector<GeneratingVector> enumerate(GroupPtr group, const Signature& s, const Limits& limits = {});

// Restricted enumeration: the multiset of labels label[x_j] over elliptic
// entries must equal `label_counts`. A negative label excludes the element.
struct EllipticConstraint {
  std::vector<int> label;               // per element
  std::vector<std::size_t> label_counts;  // required multiplicity per label
};
std::vector<GeneratingVector> enumerate_constrained(GroupPtr group, const Signature& s,
                                                    const EllipticConstraint& constraint,
                                                    const Limits& limits = {});

// Shortest word in the generator names ("1" for the identity).
std::string element_word(const FiniteGroup& g, Element e);

}  // namespace equistrata
