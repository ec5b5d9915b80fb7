#pragma once

#include <bitset>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "equistrata/limits.hpp"

namespace equistrata {

// Index into a FiniteGroup's element table. The identity is always 0.
using Element = std::uint16_t;

// Images of the points 0..d-1.
using Perm = std::vector<std::uint16_t>;

using ElementSet = std::bitset<kMaxGroupOrder>;

// A finite permutation group with its full element table.
//
// Products compose left to right: mul(a, b) applies a first, then b. Element
// indices follow breadth-first discovery from the identity along the
// generators, so they are deterministic for a given construction.
class FiniteGroup {
 public:
  static FiniteGroup from_generators(std::vector<Perm> generators,
                                     std::vector<std::string> names,
                                     std::size_t max_order = kMaxGroupOrder);

  std::size_t order() const { return perms_.size(); }
  std::size_t degree() const { return degree_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[a * order() + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  int element_order(Element a) const { return orders_[a]; }
  Element pow(Element a, long long k) const;
  // g x g^-1
  Element conj(Element x, Element g) const { return mul(mul(g, x), inv(g)); }
  Element commutator(Element a, Element b) const;  // a b a^-1 b^-1
  Element product(std::span<const Element> xs) const;

  const Perm& perm(Element a) const { return perms_[a]; }
  std::optional<Element> find(const Perm& p) const;

  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  // A small generating set (greedy, highest element order first); used by
  // homomorphism searches.
  const std::vector<Element>& search_generators() const { return search_generators_; }

  bool is_abelian() const { return abelian_; }
  ElementSet all() const;
  ElementSet closure(std::span<const Element> gens) const;
  ElementSet closure(const ElementSet& gens) const;
  bool generates(std::span<const Element> gens) const;
  bool is_subgroup(const ElementSet& s) const;
  bool is_normal(const ElementSet& s) const;
  ElementSet conjugate(const ElementSet& s, Element g) const;

  // The subgroup on `s` as a group in its own right. Its elements keep their
  // permutations; parent_index() maps back into this group.
  FiniteGroup subgroup(const ElementSet& s) const;
  const std::vector<Element>& parent_index() const { return parent_index_; }
  // Inverse of parent_index() for a subgroup built from `parent`.
  Element from_parent(Element parent_element) const;

  // Copy with renamed generators (same count).
  FiniteGroup renamed(std::vector<std::string> names) const;

  // Word in generator names ("tsr^-1", "x^2*y", "1") or a cycle string
  // ("(1,2)(3,4)" on 1-based points).
  Element parse_element(std::string_view text) const;
  std::string format_cycles(Element a) const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> perms_;
  std::map<Perm, Element> lookup_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<int> orders_;
  std::vector<Element> generators_;
  std::vector<std::string> names_;
  std::vector<Element> search_generators_;
  std::vector<Element> parent_index_;
  std::unordered_map<Element, Element> from_parent_;
  bool abelian_ = true;
  std::string label_;

  void compute_search_generators();
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Parses the group-spec mini-language:
//   C<n> | D<n> | SD(C<n>;[e1,...,ek]) | Perm[<cycles>;<cycles>;...] | <spec>x<spec>
// Generator names: C -> a; D -> r,s; SD -> a,b (or a,b1..bk); Perm -> p1..pk.
// Direct products concatenate names, suffixing factor numbers on clashes.
FiniteGroup construct(std::string_view spec, const Limits& limits = {});
GroupPtr make_group(std::string_view spec, const Limits& limits = {});
GroupPtr make_group(std::string_view spec, std::vector<std::string> names,
                    const Limits& limits = {});

Perm parse_cycles(std::string_view text, std::size_t degree = 0);
std::string format_cycles(const Perm& p);

// ---- structure -------------------------------------------------------------

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);
// class_of[e] = index into conjugacy_classes(g)
std::vector<int> conjugacy_class_index(const FiniteGroup& g);
ElementSet center(const FiniteGroup& g);
ElementSet derived_subgroup(const FiniteGroup& g);
// Invariant factors of an abelian group given as G/N (N normal).
std::vector<int> abelian_invariants(const FiniteGroup& g, const ElementSet& normal);

struct GroupFingerprint {
  std::size_t order = 0;
  std::map<int, std::size_t> element_order_histogram;
  std::vector<std::size_t> conjugacy_class_sizes;
  std::vector<int> abelianization_invariants;
  std::size_t center_order = 0;

  bool operator==(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const FiniteGroup& g);

// Every subgroup of g, sorted by (order, bitset).
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);

struct SubgroupClass {
  ElementSet representative;
  std::size_t size = 0;
  std::vector<ElementSet> members;
};

std::vector<SubgroupClass> subgroup_conjugacy_classes(const FiniteGroup& g);

// ---- homomorphisms ---------------------------------------------------------

// A bijective homomorphism, stored as images of the source's
// search_generators() plus the full element map.
struct Isomorphism {
  std::vector<Element> generator_images;
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
};

// Extends generator images to a homomorphism; nullopt when the images do not
// define one.
std::optional<std::vector<Element>> extend_homomorphism(const FiniteGroup& src,
                                                        const FiniteGroup& dst,
                                                        std::span<const Element> gens,
                                                        std::span<const Element> images);

std::vector<Isomorphism> isomorphisms(const FiniteGroup& a, const FiniteGroup& b,
                                      std::size_t limit = SIZE_MAX);
std::optional<Isomorphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);
std::vector<Isomorphism> automorphisms(const FiniteGroup& g, const Limits& limits = {});

}  // namespace equistrata
