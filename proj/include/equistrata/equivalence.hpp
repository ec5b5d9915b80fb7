#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equistrata/ske.hpp"

namespace equistrata {

enum class MoveKind { braid, twist_alpha, twist_beta, handle_swap, cross, automorphism };

// index: elliptic position (braid), handle (twists, swap), or automorphism
// generator (automorphism). Cross acts on the last handle and x1.
struct Move {
  MoveKind kind;
  int index = 0;
  bool operator==(const Move&) const = default;
};

std::string describe(const Move& m);

// (x_j, x_j+1) -> (x_j+1, x_j+1^-1 x_j x_j+1), 0-based j.
GeneratingVector braid_move(const GeneratingVector& v, std::size_t j);

// Twists, handle swaps and the cross move, one output per move.
std::vector<GeneratingVector> handle_moves(const GeneratingVector& v);

// Representative: least orbit member (as an index tuple) among those whose
// periods ascend. orbit_size counts exactly those members.
struct TopologicalClass {
  GeneratingVector representative;
  std::size_t orbit_size = 0;
  std::uint64_t class_id = 0;

  std::string id() const;
};

std::uint64_t class_hash(const GeneratingVector& representative);

struct Equivalence {
  bool equivalent = false;
  std::vector<Move> witness;
};

// Per-group state: automorphisms and a generating set for them.
class Classifier {
 public:
  explicit Classifier(GroupPtr group, const Limits& limits = {});

  const GroupPtr& group() const { return group_; }
  const std::vector<Isomorphism>& automorphisms() const { return autos_; }
  const std::vector<Isomorphism>& automorphism_generators() const { return aut_gens_; }

  // Applies one move to raw entries of a vector with h handles.
  std::vector<Element> apply(const std::vector<Element>& entries, int h, const Move& m) const;
  std::vector<Move> moves(int h, std::size_t l) const;

  // All classes of (G, s), sorted by representative. Representatives list
  // their elliptic entries in ascending period order.
  std::vector<TopologicalClass> classes(const Signature& s) const;
  TopologicalClass class_of(const GeneratingVector& v) const;
  // Breadth-first orbit closure, bypassing the abelian shortcut. Collects the
  // orbit members in ascending period order when `members` is given.
  TopologicalClass orbit_class(const GeneratingVector& v,
                               std::vector<std::vector<Element>>* members = nullptr) const;

  // v2 may live in an isomorphic group; iso maps v2's group onto this one.
  Equivalence equivalent(const GeneratingVector& v1, const GeneratingVector& v2,
                         const Isomorphism* iso = nullptr) const;
  GeneratingVector replay(const GeneratingVector& v, const std::vector<Move>& witness) const;

  // Canonical form over Aut(G) of (block-sorted elliptic entries, subgroup
  // they generate). Meaningful for abelian G.
  std::vector<Element> abelian_invariant(const GeneratingVector& v) const;

 private:
  GroupPtr group_;
  Limits limits_;
  std::vector<Isomorphism> autos_;
  std::vector<Isomorphism> aut_gens_;

  TopologicalClass abelian_class(const GeneratingVector& v) const;
};

std::vector<TopologicalClass> topological_classes(GroupPtr group, const Signature& s, const Limits& limits = {});
Equivalence are_equivalent(const GeneratingVector& v1, const GeneratingVector& v2, const Isomorphism* iso = nullptr,
                           const Limits& limits = {});

}  // namespace equistrata
