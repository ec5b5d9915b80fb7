#include "equistrata/restriction.hpp"

#include <algorithm>
#include <map>

namespace equistrata {

std::vector<std::vector<int>> CosetAction::cycles(Element c) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(index(), false);
  for (std::size_t i = 0; i < index(); ++i) {
    if (done[i]) continue;
    std::vector<int> cyc;
    for (int j = static_cast<int>(i); !done[j]; j = images[c][j]) {
      done[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

CosetAction coset_action(const FiniteGroup& g, const ElementSet& h) {
  if (!g.is_subgroup(h)) throw MathError("not a subgroup");
  CosetAction a;
  a.coset_of.assign(g.order(), -1);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (a.coset_of[x] >= 0) continue;
    int idx = static_cast<int>(a.representatives.size());
    a.representatives.push_back(static_cast<Element>(x));
    for (std::size_t y = 0; y < g.order(); ++y)
      if (h.test(y)) a.coset_of[g.mul(static_cast<Element>(y), static_cast<Element>(x))] = idx;
  }
  a.images.assign(g.order(), std::vector<int>(a.index()));
  for (std::size_t c = 0; c < g.order(); ++c)
    for (std::size_t i = 0; i < a.index(); ++i)
      a.images[c][i] = a.coset_of[g.mul(a.representatives[i], static_cast<Element>(c))];
  return a;
}

std::vector<Element> InducedActionData::rotation_vector() const {
  std::vector<Element> out;
  for (const auto& b : branch_data)
    for (const auto& p : b.cycles)
      if (p.period > 1) out.push_back(p.subgroup_generator);
  return out;
}

InducedActionData induced_signature(const GeneratingVector& v, const ElementSet& h, GroupPtr subgroup_group) {
  const FiniteGroup& g = *v.group;
  auto valid = is_valid(v);
  if (!valid) throw MathError("invalid generating vector: " + valid.diagnostic);
  CosetAction action = coset_action(g, h);

  InducedActionData d;
  d.subgroup = h;
  d.subgroup_group = subgroup_group ? std::move(subgroup_group) : std::make_shared<const FiniteGroup>(g.subgroup(h));
  const FiniteGroup& sub = *d.subgroup_group;
  if (sub.order() != h.count()) throw MathError("subgroup group does not match the element set");
  d.index = action.index();
  auto sub_class = conjugacy_class_index(sub);

  const long long order_g = static_cast<long long>(g.order());
  const long long order_h = static_cast<long long>(sub.order());
  long long ramification = 0;  // sum of (k - 1) over all cycles
  Rational branch_sum(0);      // sum of (1 - 1/m') over induced branch points
  for (std::size_t j = 0; j < v.elliptic.size(); ++j) {
    BranchData b;
    b.position = j;
    b.image = v.elliptic[j];
    b.period = g.element_order(b.image);
    long long cycle_total = 0;
    Rational rhs(0);
    std::size_t lengths = 0;
    for (const auto& cyc : action.cycles(b.image)) {
      BranchPoint p;
      p.cycle_length = static_cast<int>(cyc.size());
      if (b.period % p.cycle_length != 0) throw MathError("cycle length does not divide the period");
      p.period = b.period / p.cycle_length;
      Element r = action.representatives[cyc.front()];
      p.generator = g.conj(g.pow(b.image, p.cycle_length), r);
      if (!h.test(p.generator)) throw MathError("distinguished generator outside the subgroup");
      p.subgroup_generator = sub.from_parent(p.generator);
      p.subgroup_class = sub_class[p.subgroup_generator];
      if (g.element_order(p.generator) != p.period) throw MathError("distinguished generator has the wrong order");
      cycle_total += p.cycle_length;
      ramification += p.cycle_length - 1;
      rhs += Rational(order_h) * Rational(b.period - p.cycle_length, b.period);
      if (p.period > 1) {
        d.induced_signature.periods.push_back(p.period);
        branch_sum += Rational(p.period - 1, p.period);
      }
      if (lengths == 0) lengths = cyc.size();
      if (lengths != cyc.size()) lengths = SIZE_MAX;
      b.cycles.push_back(p);
    }
    if (cycle_total != static_cast<long long>(d.index)) throw MathError("cycle lengths do not sum to the index");
    Rational lhs = Rational(order_g) * Rational(b.period - 1, b.period) -
                   Rational(order_h) * Rational(cycle_total - static_cast<long long>(b.cycles.size()));
    if (lhs != rhs) throw MathError("branching bookkeeping identity fails");
    if (g.is_normal(h) && lengths == SIZE_MAX) throw MathError("normal subgroup with unequal cycle lengths");
    d.branch_data.push_back(std::move(b));
  }

  // [G:H] mu(s) = 2(h'-1) + sum(1 - 1/m')
  Rational twice = v.signature.measure() * static_cast<long long>(d.index) - branch_sum + 2;
  if (twice.denominator() != 1 || twice.numerator() % 2 != 0 || twice < 0) {
    throw MathError("non-integral orbit genus for the induced action");
  }
  d.induced_signature.h = static_cast<int>(twice.numerator() / 2);
  // Euler characteristic of the intermediate quotient, counted through cycles
  long long euler = static_cast<long long>(d.index) * (2 - 2 * v.signature.h) - ramification;
  if (euler != 2 - 2 * d.induced_signature.h) throw MathError("Euler characteristic disagrees with Riemann-Hurwitz");
  int genus = riemann_hurwitz_genus(sub.order(), d.induced_signature);
  if (genus != riemann_hurwitz_genus(g.order(), v.signature)) throw MathError("induced genus differs from ambient");
  d.induced_genus = genus;
  return d;
}

InducedClasses classify_rotation(InducedActionData data, const Classifier& model, const Isomorphism* iso,
                                 const Limits& limits) {
  InducedClasses out;
  out.data = std::move(data);
  const GroupPtr& sub = model.group();
  const Signature& s = out.data.induced_signature;
  auto rotation = out.data.rotation_vector();
  if (iso) {
    for (auto& x : rotation) x = (*iso)(x);
  } else if (sub.get() != out.data.subgroup_group.get()) {
    throw MathError("classifier is not built on the subgroup and no isomorphism was given");
  }

  if (sub->is_abelian() && s.h == 0) {
    // the elliptic entries are exactly the distinguished generators; braids
    // realize every ordering
    auto w = GeneratingVector::from_entries(sub, s, rotation);
    auto ok = is_valid(w);
    if (!ok) throw MathError("rotation data does not form a generating vector: " + ok.diagnostic);
    out.classes.push_back(model.class_of(w));
    out.determined = true;
    return out;
  }

  auto cls = conjugacy_class_index(*sub);
  std::map<int, int> label_of_class;
  EllipticConstraint c;
  c.label.assign(sub->order(), -1);
  for (Element x : rotation) {
    auto [it, fresh] = label_of_class.try_emplace(cls[x], static_cast<int>(label_of_class.size()));
    if (fresh) c.label_counts.push_back(0);
    ++c.label_counts[it->second];
  }
  for (std::size_t e = 0; e < sub->order(); ++e) {
    auto it = label_of_class.find(cls[e]);
    if (it != label_of_class.end()) c.label[e] = it->second;
  }
  std::map<std::uint64_t, TopologicalClass> found;
  std::map<std::vector<Element>, bool> seen;
  const Signature ascending{s.h, s.sorted_periods()};
  for (const auto& w : enumerate_constrained(sub, ascending, c, limits)) {
    auto key = w.entries();
    if (seen.count(key)) continue;
    std::vector<std::vector<Element>> members;
    auto tc = sub->is_abelian() && s.h == 0 ? model.class_of(w) : model.orbit_class(w, &members);
    for (auto& m : members) seen[std::move(m)] = true;
    found.emplace(tc.class_id, tc);
  }
  if (found.empty()) throw MathError("no subgroup vector realizes the rotation data");
  for (auto& [id, tc] : found) out.classes.push_back(std::move(tc));
  std::sort(out.classes.begin(), out.classes.end(),
            [](const TopologicalClass& a, const TopologicalClass& b) { return a.representative < b.representative; });
  out.determined = out.classes.size() == 1;
  return out;
}

InducedClasses induced_classes(const GeneratingVector& v, const ElementSet& h, const Classifier& subgroup_classifier,
                               const Limits& limits) {
  return classify_rotation(induced_signature(v, h, subgroup_classifier.group()), subgroup_classifier, nullptr,
                           limits);
}

InducedClasses induced_classes(const GeneratingVector& v, const ElementSet& h, const Limits& limits) {
  auto sub = std::make_shared<const FiniteGroup>(v.group->subgroup(h));
  Classifier cl(sub, limits);
  return induced_classes(v, h, cl, limits);
}

}  // namespace equistrata
