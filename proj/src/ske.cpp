#include "equistrata/ske.hpp"

#include <algorithm>

namespace equistrata {

std::vector<Element> GeneratingVector::entries() const {
  std::vector<Element> e = handles;
  e.insert(e.end(), elliptic.begin(), elliptic.end());
  return e;
}

GeneratingVector GeneratingVector::from_entries(GroupPtr group, Signature s, const std::vector<Element>& entries) {
  GeneratingVector v;
  const std::size_t nh = 2 * static_cast<std::size_t>(s.h);
  if (entries.size() != nh + s.periods.size()) throw MathError("vector length does not match signature");
  v.handles.assign(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(nh));
  v.elliptic.assign(entries.begin() + static_cast<std::ptrdiff_t>(nh), entries.end());
  v.group = std::move(group);
  v.signature = std::move(s);
  return v;
}

GeneratingVector make_vector(GroupPtr group, Signature s, const std::vector<std::string>& handles,
                             const std::vector<std::string>& elliptic) {
  if (handles.size() != 2 * static_cast<std::size_t>(s.h)) {
    throw ParseError("signature " + s.pretty() + " needs " + std::to_string(2 * s.h) + " handle entries");
  }
  if (elliptic.size() != s.periods.size()) {
    throw ParseError("signature " + s.pretty() + " needs " + std::to_string(s.periods.size()) +
                     " elliptic entries");
  }
  GeneratingVector v;
  for (const auto& w : handles) v.handles.push_back(group->parse_element(w));
  for (const auto& w : elliptic) v.elliptic.push_back(group->parse_element(w));
  v.group = std::move(group);
  v.signature = std::move(s);
  return v;
}

Element long_relation(const FiniteGroup& g, const std::vector<Element>& handles,
                      const std::vector<Element>& elliptic) {
  Element p = 0;
  for (std::size_t i = 0; i + 1 < handles.size(); i += 2) p = g.mul(p, g.commutator(handles[i], handles[i + 1]));
  for (Element x : elliptic) p = g.mul(p, x);
  return p;
}

Validity is_valid(const GeneratingVector& v) {
  const FiniteGroup& g = *v.group;
  if (v.handles.size() != 2 * static_cast<std::size_t>(v.signature.h) ||
      v.elliptic.size() != v.signature.periods.size()) {
    return {false, "entry count does not match signature " + v.signature.pretty()};
  }
  for (Element e : v.entries())
    if (e >= g.order()) return {false, "entry outside the group"};
  for (std::size_t j = 0; j < v.elliptic.size(); ++j) {
    int o = g.element_order(v.elliptic[j]);
    if (o != v.signature.periods[j]) {
      return {false, "elliptic entry " + std::to_string(j + 1) + " has order " + std::to_string(o) +
                         ", expected " + std::to_string(v.signature.periods[j])};
    }
  }
  auto all = v.entries();
  if (!g.generates(all)) return {false, "entries do not generate the group"};
  if (long_relation(g, v.handles, v.elliptic) != 0) return {false, "long relation fails: product is not the identity"};
  return {};
}

namespace {

class Search {
 public:
  Search(GroupPtr group, const Signature& s, const EllipticConstraint* constraint, const Limits& limits)
      : group_(std::move(group)), g_(*group_), s_(s), constraint_(constraint), limits_(limits) {
    nh_ = 2 * static_cast<std::size_t>(s.h);
    l_ = s.periods.size();
    entries_.resize(nh_ + l_);
    partial_.resize(nh_ + l_ + 1, 0);
    if (constraint_) remaining_ = constraint_->label_counts;
    for (std::size_t j = 0; j < l_; ++j) {
      std::vector<Element> c;
      for (std::size_t e = 0; e < g_.order(); ++e) {
        if (g_.element_order(static_cast<Element>(e)) != s.periods[j]) continue;
        if (constraint_ && constraint_->label[e] < 0) continue;
        c.push_back(static_cast<Element>(e));
      }
      candidates_.push_back(std::move(c));
    }
  }

  std::vector<GeneratingVector> run() {
    riemann_hurwitz_genus(g_.order(), s_);
    if (constraint_) {
      std::size_t total = 0;
      for (auto c : constraint_->label_counts) total += c;
      if (total != l_) return {};
    }
    recurse(0);
    std::sort(found_.begin(), found_.end());
    std::vector<GeneratingVector> out;
    out.reserve(found_.size());
    for (const auto& e : found_) out.push_back(GeneratingVector::from_entries(group_, s_, e));
    return out;
  }

 private:
  GroupPtr group_;
  const FiniteGroup& g_;
  const Signature& s_;
  const EllipticConstraint* constraint_;
  const Limits& limits_;
  std::size_t nh_ = 0, l_ = 0;
  std::vector<Element> entries_;
  std::vector<Element> partial_;  // partial_[i] = relation product of entries_[0..i)
  std::vector<std::vector<Element>> candidates_;
  std::vector<std::size_t> remaining_;
  std::vector<std::vector<Element>> found_;

  bool take(Element e) {
    if (!constraint_) return true;
    int lab = constraint_->label[e];
    if (lab < 0 || remaining_[lab] == 0) return false;
    --remaining_[lab];
    return true;
  }
  void give(Element e) {
    if (constraint_) ++remaining_[constraint_->label[e]];
  }

  void leaf() {
    if (!g_.generates(entries_)) return;
    found_.push_back(entries_);
    if (found_.size() > limits_.max_vectors) {
      throw BudgetExceeded("more than max_vectors=" + std::to_string(limits_.max_vectors) +
                           " generating vectors");
    }
  }

  void recurse(std::size_t pos) {
    const std::size_t n = nh_ + l_;
    if (pos == n) {
      if (partial_[pos] == 0) leaf();
      return;
    }
    if (pos < nh_) {
      for (std::size_t e = 0; e < g_.order(); ++e) {
        entries_[pos] = static_cast<Element>(e);
        if (pos % 2 == 1) {
          partial_[pos + 1] = g_.mul(partial_[pos - 1], g_.commutator(entries_[pos - 1], entries_[pos]));
        } else {
          partial_[pos + 1] = partial_[pos];
        }
        recurse(pos + 1);
      }
      return;
    }
    const std::size_t j = pos - nh_;
    if (j + 1 == l_) {
      Element x = g_.inv(partial_[pos]);
      if (g_.element_order(x) != s_.periods[j]) return;
      if (!take(x)) return;
      entries_[pos] = x;
      partial_[pos + 1] = 0;
      leaf();
      give(x);
      return;
    }
    for (Element x : candidates_[j]) {
      if (!take(x)) continue;
      entries_[pos] = x;
      partial_[pos + 1] = g_.mul(partial_[pos], x);
      recurse(pos + 1);
      give(x);
    }
  }
};

}  // namespace

std::vector<GeneratingVector> enumerate(GroupPtr group, const Signature& s, const Limits& limits) {
  return Search(std::move(group), s, nullptr, limits).run();
}

std::vector<GeneratingVector> enumerate_constrained(GroupPtr group, const Signature& s,
                                                    const EllipticConstraint& constraint, const Limits& limits) {
  if (constraint.label.size() != group->order()) throw MathError("constraint labels do not cover the group");
  return Search(std::move(group), s, &constraint, limits).run();
}

std::string element_word(const FiniteGroup& g, Element e) {
  if (e == 0) return "1";
  std::vector<int> via(g.order(), -1);
  std::vector<Element> parent(g.order(), 0);
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size() && !seen[e]; ++i) {
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      Element y = g.mul(queue[i], g.generators()[k]);
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = static_cast<int>(k);
      parent[y] = queue[i];
      queue.push_back(y);
    }
  }
  std::vector<int> letters;
  for (Element x = e; x != 0; x = parent[x]) letters.push_back(via[x]);
  std::reverse(letters.begin(), letters.end());
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    out += g.generator_names()[letters[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace equistrata
