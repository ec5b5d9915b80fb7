#include "equistrata/equivalence.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace equistrata {

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<Element>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Element e : v) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using TupleSet = std::unordered_set<std::vector<Element>, TupleHash>;

std::vector<Element> structural(const FiniteGroup& g, std::vector<Element> e, int h, const Move& m) {
  const std::size_t nh = 2 * static_cast<std::size_t>(h);
  switch (m.kind) {
    case MoveKind::braid: {
      std::size_t j = nh + static_cast<std::size_t>(m.index);
      if (j + 1 >= e.size()) throw MathError("braid position out of range");
      Element x = e[j], y = e[j + 1];
      e[j] = y;
      e[j + 1] = g.mul(g.mul(g.inv(y), x), y);
      return e;
    }
    case MoveKind::twist_alpha:
    case MoveKind::twist_beta: {
      if (m.index < 0 || m.index >= h) throw MathError("handle index out of range");
      Element& a = e[2 * static_cast<std::size_t>(m.index)];
      Element& b = e[2 * static_cast<std::size_t>(m.index) + 1];
      if (m.kind == MoveKind::twist_alpha) {
        b = g.mul(b, a);
      } else {
        a = g.mul(a, b);
      }
      return e;
    }
    case MoveKind::handle_swap: {
      if (m.index < 0 || m.index + 1 >= h) throw MathError("handle swap out of range");
      std::size_t i = 2 * static_cast<std::size_t>(m.index);
      Element a1 = e[i], b1 = e[i + 1], a2 = e[i + 2], b2 = e[i + 3];
      Element c = g.commutator(a1, b1);
      e[i] = g.conj(a2, c);
      e[i + 1] = g.conj(b2, c);
      e[i + 2] = a1;
      e[i + 3] = b1;
      return e;
    }
    case MoveKind::cross: {
      if (h < 1 || e.size() <= nh) throw MathError("cross move needs a handle and an elliptic entry");
      Element a = e[nh - 2], b = e[nh - 1], x = e[nh];
      Element u = g.mul(g.mul(g.mul(b, g.inv(a)), g.inv(b)), x);
      e[nh - 1] = g.mul(u, b);
      e[nh] = g.conj(x, u);
      return e;
    }
    case MoveKind::automorphism:
      break;
  }
  throw MathError("automorphism move needs a classifier");
}

std::vector<Move> structural_moves(int h, std::size_t l) {
  std::vector<Move> out;
  for (std::size_t j = 0; j + 1 < l; ++j) out.push_back({MoveKind::braid, static_cast<int>(j)});
  for (int i = 0; i < h; ++i) {
    out.push_back({MoveKind::twist_alpha, i});
    out.push_back({MoveKind::twist_beta, i});
  }
  for (int i = 0; i + 1 < h; ++i) out.push_back({MoveKind::handle_swap, i});
  if (h >= 1 && l >= 1) out.push_back({MoveKind::cross, 0});
  return out;
}

bool canonical_order(const FiniteGroup& g, const std::vector<Element>& e, const Signature& s) {
  const std::size_t nh = 2 * static_cast<std::size_t>(s.h);
  for (std::size_t j = 0; j < s.periods.size(); ++j)
    if (g.element_order(e[nh + j]) != s.periods[j]) return false;
  return true;
}

Signature signature_of(const FiniteGroup& g, int h, const std::vector<Element>& e) {
  Signature s;
  s.h = h;
  for (std::size_t j = 2 * static_cast<std::size_t>(h); j < e.size(); ++j) s.periods.push_back(g.element_order(e[j]));
  return s;
}

Signature ascending(const Signature& s) { return {s.h, s.sorted_periods()}; }

// Sort entries within each set of positions sharing a period.
void block_sort(std::vector<Element>& x, const std::vector<int>& periods) {
  std::map<int, std::vector<std::size_t>> positions;
  for (std::size_t j = 0; j < periods.size(); ++j) positions[periods[j]].push_back(j);
  for (const auto& [m, pos] : positions) {
    std::vector<Element> vals;
    for (auto p : pos) vals.push_back(x[p]);
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 0; i < pos.size(); ++i) x[pos[i]] = vals[i];
  }
}

std::size_t arrangements(const std::vector<Element>& x, const std::vector<int>& periods) {
  std::map<int, std::map<Element, std::size_t>> blocks;
  for (std::size_t j = 0; j < periods.size(); ++j) ++blocks[periods[j]][x[j]];
  std::size_t total = 1;
  for (const auto& [m, counts] : blocks) {
    std::size_t n = 0;
    for (const auto& [e, c] : counts) {
      for (std::size_t k = 1; k <= c; ++k) {
        ++n;
        total = total * n / k;  // running multinomial stays integral
      }
    }
  }
  return total;
}

}  // namespace

std::string describe(const Move& m) {
  switch (m.kind) {
    case MoveKind::braid:
      return "braid " + std::to_string(m.index + 1);
    case MoveKind::twist_alpha:
      return "twist-alpha " + std::to_string(m.index + 1);
    case MoveKind::twist_beta:
      return "twist-beta " + std::to_string(m.index + 1);
    case MoveKind::handle_swap:
      return "handle-swap " + std::to_string(m.index + 1);
    case MoveKind::cross:
      return "cross";
    case MoveKind::automorphism:
      return "automorphism " + std::to_string(m.index + 1);
  }
  return "?";
}

GeneratingVector braid_move(const GeneratingVector& v, std::size_t j) {
  if (j + 1 >= v.elliptic.size()) throw MathError("braid position out of range");
  auto e = structural(*v.group, v.entries(), v.signature.h, {MoveKind::braid, static_cast<int>(j)});
  Signature s = v.signature;
  std::swap(s.periods[j], s.periods[j + 1]);
  return GeneratingVector::from_entries(v.group, s, e);
}

std::vector<GeneratingVector> handle_moves(const GeneratingVector& v) {
  if (v.signature.h == 0) throw MathError("handle moves need orbit genus >= 1");
  std::vector<GeneratingVector> out;
  for (const Move& m : structural_moves(v.signature.h, v.elliptic.size())) {
    if (m.kind == MoveKind::braid) continue;
    out.push_back(
        GeneratingVector::from_entries(v.group, v.signature, structural(*v.group, v.entries(), v.signature.h, m)));
  }
  return out;
}

std::uint64_t class_hash(const GeneratingVector& rep) {
  std::string text = std::to_string(rep.group->order()) + "|" + rep.signature.str() + "|";
  for (Element e : rep.entries()) text += std::to_string(e) + ",";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string TopologicalClass::id() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(class_id));
  return buf;
}

// ---- classifier ----------------------------------------------------------------

Classifier::Classifier(GroupPtr group, const Limits& limits) : group_(std::move(group)), limits_(limits) {
  autos_ = equistrata::automorphisms(*group_, limits_);
  // greedy generating set; closure tracked on search-generator images
  const auto& sg = group_->search_generators();
  std::set<std::vector<Element>> closure{sg};
  for (const auto& a : autos_) {
    if (closure.size() == autos_.size()) break;
    if (closure.count(a.generator_images)) continue;
    aut_gens_.push_back(a);
    std::vector<std::vector<Element>> queue(closure.begin(), closure.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& gen : aut_gens_) {
        std::vector<Element> img(queue[i].size());
        for (std::size_t k = 0; k < img.size(); ++k) img[k] = gen.map[queue[i][k]];
        if (closure.insert(img).second) queue.push_back(std::move(img));
      }
    }
  }
}

std::vector<Move> Classifier::moves(int h, std::size_t l) const {
  auto out = structural_moves(h, l);
  for (std::size_t k = 0; k < aut_gens_.size(); ++k) out.push_back({MoveKind::automorphism, static_cast<int>(k)});
  return out;
}

std::vector<Element> Classifier::apply(const std::vector<Element>& entries, int h, const Move& m) const {
  if (m.kind != MoveKind::automorphism) return structural(*group_, entries, h, m);
  const auto& a = aut_gens_.at(static_cast<std::size_t>(m.index));
  std::vector<Element> out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out[i] = a.map[entries[i]];
  return out;
}

TopologicalClass Classifier::abelian_class(const GeneratingVector& v) const {
  const Signature canon = ascending(v.signature);
  const auto& periods = canon.periods;
  std::vector<Element> start = v.elliptic;
  std::stable_sort(start.begin(), start.end(), [&](Element a, Element b) {
    return group_->element_order(a) < group_->element_order(b);
  });
  std::set<std::vector<Element>> images;
  for (const auto& a : autos_) {
    std::vector<Element> w(start.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = a.map[start[j]];
    block_sort(w, periods);
    images.insert(std::move(w));
  }
  TopologicalClass c;
  for (const auto& w : images) c.orbit_size += arrangements(w, periods);
  c.representative = GeneratingVector::from_entries(group_, canon, *images.begin());
  c.class_id = class_hash(c.representative);
  return c;
}

TopologicalClass Classifier::orbit_class(const GeneratingVector& v,
                                         std::vector<std::vector<Element>>* members) const {
  const FiniteGroup& g = *group_;
  const int h = v.signature.h;
  const auto mv = moves(h, v.elliptic.size());
  TupleSet seen;
  std::vector<std::vector<Element>> queue{v.entries()};
  seen.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Move& m : mv) {
      auto next = apply(queue[i], h, m);
      if (seen.insert(next).second) {
        queue.push_back(std::move(next));
        if (queue.size() > limits_.max_orbit) {
          throw BudgetExceeded("orbit larger than max_orbit=" + std::to_string(limits_.max_orbit));
        }
      }
    }
  }
  const Signature canon = ascending(v.signature);
  TopologicalClass c;
  const std::vector<Element>* best = nullptr;
  for (const auto& t : queue) {
    if (!canonical_order(g, t, canon)) continue;
    ++c.orbit_size;
    if (members) members->push_back(t);
    if (!best || t < *best) best = &t;
  }
  c.representative = GeneratingVector::from_entries(group_, canon, *best);
  c.class_id = class_hash(c.representative);
  return c;
}

TopologicalClass Classifier::class_of(const GeneratingVector& v) const {
  if (v.group.get() != group_.get()) throw MathError("vector belongs to a different group");
  if (group_->is_abelian() && v.signature.h == 0) return abelian_class(v);
  return orbit_class(v, nullptr);
}

std::vector<TopologicalClass> Classifier::classes(const Signature& sig) const {
  const Signature s = ascending(sig);
  auto vs = enumerate(group_, s, limits_);
  std::vector<TopologicalClass> out;
  if (group_->is_abelian() && s.h == 0) {
    std::map<std::vector<Element>, std::pair<TopologicalClass, std::size_t>> by_rep;
    for (const auto& v : vs) {
      auto c = abelian_class(v);
      auto key = c.representative.entries();
      auto [it, fresh] = by_rep.try_emplace(key, c, 0);
      ++it->second.second;
    }
    for (auto& [key, entry] : by_rep) {
      if (entry.first.orbit_size != entry.second) {
        throw MathError("abelian orbit count disagrees with enumeration for " + s.pretty());
      }
      out.push_back(entry.first);
    }
    return out;
  }
  TupleSet assigned;
  for (const auto& v : vs) {
    auto key = v.entries();
    if (assigned.count(key)) continue;
    std::vector<std::vector<Element>> members;
    auto c = orbit_class(v, &members);
    if (!(c.representative == v)) throw MathError("orbit minimum is not the first unassigned vector");
    for (auto& m : members) assigned.insert(std::move(m));
    out.push_back(std::move(c));
  }
  if (assigned.size() != vs.size()) throw MathError("orbits do not partition the enumeration");
  return out;
}

Equivalence Classifier::equivalent(const GeneratingVector& v1, const GeneratingVector& v2,
                                   const Isomorphism* iso) const {
  if (v1.group.get() != group_.get()) throw MathError("first vector belongs to a different group");
  if (!v1.signature.equivalent(v2.signature)) {
    throw MathError("signatures differ: " + v1.signature.pretty() + " vs " + v2.signature.pretty());
  }
  std::vector<Element> target = v2.entries();
  if (iso) {
    for (auto& e : target) e = iso->map[e];
  } else if (v2.group.get() != group_.get()) {
    throw MathError("vectors live in different groups and no isomorphism was given");
  }
  const int h = v1.signature.h;
  const auto mv = moves(h, v1.elliptic.size());
  std::unordered_map<std::vector<Element>, std::size_t, TupleHash> index;
  std::vector<std::vector<Element>> nodes{v1.entries()};
  std::vector<std::size_t> parent{0};
  std::vector<Move> via{{MoveKind::braid, 0}};
  index.emplace(nodes[0], 0);
  auto path = [&](std::size_t n) {
    std::vector<Move> w;
    for (; n != 0; n = parent[n]) w.push_back(via[n]);
    std::reverse(w.begin(), w.end());
    return w;
  };
  if (nodes[0] == target) return {true, {}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const Move& m : mv) {
      auto next = apply(nodes[i], h, m);
      if (index.count(next)) continue;
      index.emplace(next, nodes.size());
      nodes.push_back(std::move(next));
      parent.push_back(i);
      via.push_back(m);
      if (nodes.back() == target) return {true, path(nodes.size() - 1)};
      if (nodes.size() > limits_.max_orbit) {
        throw BudgetExceeded("orbit larger than max_orbit=" + std::to_string(limits_.max_orbit));
      }
    }
  }
  return {false, {}};
}

GeneratingVector Classifier::replay(const GeneratingVector& v, const std::vector<Move>& witness) const {
  auto e = v.entries();
  for (const Move& m : witness) e = apply(e, v.signature.h, m);
  return GeneratingVector::from_entries(group_, signature_of(*group_, v.signature.h, e), e);
}

std::vector<Element> Classifier::abelian_invariant(const GeneratingVector& v) const {
  std::vector<Element> best;
  for (const auto& a : autos_) {
    std::vector<Element> w(v.elliptic.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = a.map[v.elliptic[j]];
    ElementSet span = group_->closure(w);
    block_sort(w, v.signature.periods);
    for (std::size_t x = 0; x < group_->order(); ++x)
      if (span.test(x)) w.push_back(static_cast<Element>(x));
    if (best.empty() || w < best) best = std::move(w);
  }
  return best;
}

std::vector<TopologicalClass> topological_classes(GroupPtr group, const Signature& s, const Limits& limits) {
  return Classifier(std::move(group), limits).classes(s);
}

Equivalence are_equivalent(const GeneratingVector& v1, const GeneratingVector& v2, const Isomorphism* iso,
                           const Limits& limits) {
  return Classifier(v1.group, limits).equivalent(v1, v2, iso);
}

}  // namespace equistrata
