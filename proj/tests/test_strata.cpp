#include <doctest.h>

#include <algorithm>
#include <set>

#include "equistrata/strata.hpp"

using namespace equistrata;

namespace {

const std::vector<CatalogEntry>& catalog() {
  static const auto c = load_catalog();
  return c;
}

const CatalogEntry& entry(int genus, int case_label) {
  for (const auto& e : catalog())
    if (e.genus == genus && e.case_label == case_label) return e;
  throw Error("missing catalog entry");
}

ElementSet gen(const FiniteGroup& g, const std::vector<std::string>& words) {
  std::vector<Element> xs;
  for (const auto& w : words) xs.push_back(g.parse_element(w));
  return g.closure(xs);
}

GeneratingVector vec(GroupPtr g, const std::vector<std::string>& ell) {
  Signature s;
  for (const auto& w : ell) s.periods.push_back(g->element_order(g->parse_element(w)));
  return make_vector(g, s, {}, ell);
}

bool naive_conjugate(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    ElementSet c;
    for (std::size_t y = 0; y < g.order(); ++y)
      if (a.test(y)) c.set(g.mul(g.mul(static_cast<Element>(x), static_cast<Element>(y)), g.inv(static_cast<Element>(x))));
    if (c == b) return true;
  }
  return false;
}

// Subgroups generated by at most two elements, by closure of every pair.
std::vector<ElementSet> two_generated(const FiniteGroup& g) {
  std::set<std::string> seen;
  std::vector<ElementSet> out;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a; b < g.order(); ++b) {
      Element xs[] = {static_cast<Element>(a), static_cast<Element>(b)};
      auto s = g.closure(std::span<const Element>(xs));
      if (seen.insert(s.to_string()).second) out.push_back(s);
    }
  return out;
}

std::size_t naive_class_count(const FiniteGroup& g, const std::vector<ElementSet>& subs) {
  std::vector<ElementSet> reps;
  for (const auto& s : subs) {
    bool fresh = true;
    for (const auto& r : reps) fresh = fresh && !naive_conjugate(g, r, s);
    if (fresh) reps.push_back(s);
  }
  return reps.size();
}

bool is_klein(const FiniteGroup& g, const ElementSet& s) {
  if (s.count() != 4) return false;
  for (std::size_t x = 1; x < g.order(); ++x)
    if (s.test(x) && g.element_order(static_cast<Element>(x)) != 2) return false;
  return true;
}

bool is_d4(const FiniteGroup& g, const ElementSet& s) {
  if (s.count() != 8) return false;
  int involutions = 0, fours = 0;
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (!s.test(x)) continue;
    int o = g.element_order(static_cast<Element>(x));
    involutions += o == 2;
    fours += o == 4;
  }
  return involutions == 5 && fours == 2;
}

// Independent replay of a witness pair: classify both restrictions in their own
// groups and compare after transport by every isomorphism found by search.
void check_replay(const GeneratingVector& v, const WitnessPair& w) {
  const FiniteGroup& g = *v.group;
  auto h1 = gen(g, w.first.generators), h2 = gen(g, w.second.generators);
  CHECK_FALSE(naive_conjugate(g, h1, h2));
  auto i1 = induced_classes(v, h1), i2 = induced_classes(v, h2);
  REQUIRE(i1.determined);
  REQUIRE(i2.determined);
  CHECK(i1.data.induced_signature.equivalent(i2.data.induced_signature));
  // the recorded map second -> first as words
  const auto& s1 = *i1.data.subgroup_group;
  const auto& s2 = *i2.data.subgroup_group;
  std::vector<Element> gens, images;
  for (const auto& [from, to] : w.isomorphism) {
    gens.push_back(s2.from_parent(g.parse_element(from)));
    images.push_back(s1.from_parent(g.parse_element(to)));
  }
  auto map = extend_homomorphism(s2, s1, gens, images);
  REQUIRE(map);
  std::vector<Element> moved;
  for (Element x : i2.classes.front().representative.entries()) moved.push_back((*map)[x]);
  auto transported = GeneratingVector::from_entries(i1.data.subgroup_group,
                                                    i2.classes.front().representative.signature, moved);
  CHECK(is_valid(transported));
  CHECK(are_equivalent(i1.classes.front().representative, transported).equivalent);
}

const StratumReport* find_report(const std::vector<StratumReport>& rs, const std::string& sig) {
  for (const auto& r : rs)
    if (r.verdict == Verdict::witness_found && r.induced.signature.equivalent(Signature::parse(sig))) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("detect: D4 in genus 2 pairs the two Klein classes") {
  auto g = make_group("D4");
  auto v = vec(g, {"s", "sr", "r^2", "r"});
  REQUIRE(is_valid(v));
  auto kleins = two_generated(*g);
  kleins.erase(std::remove_if(kleins.begin(), kleins.end(), [&](const auto& s) { return !is_klein(*g, s); }),
               kleins.end());
  CHECK(naive_class_count(*g, kleins) == 2);

  auto reports = detect(v, {make_group("C2xC2")});
  REQUIRE(reports.size() == 1);
  const auto& r = reports.front();
  CHECK(r.verdict == Verdict::witness_found);
  CHECK(r.induced.signature == Signature::parse("0;2,2,2,2,2"));
  CHECK(r.induced.genus == 2);
  CHECK(r.induced.dimension == 2);
  CHECK(r.ambient.genus == 2);
  CHECK(r.subgroup_classes == 2);
  REQUIRE(r.witness_pairs.size() == 1);
  CHECK(r.witness_pairs[0].determined);
  CHECK(r.witness_pairs[0].replay_verified);
  CHECK(r.witness_pairs[0].non_conjugate_verified);
  check_replay(v, r.witness_pairs[0]);
  CHECK(r.caveats.size() >= 2);
}

TEST_CASE("detect: GL2(3)-type triangle action has no Klein witness") {
  auto e = entry(2, 21);
  auto g = e.build();
  Classifier cl(g);
  auto v = admitted_classes(e, cl).front().representative;
  CHECK(v.signature.equivalent(Signature::parse("0;2,3,8")));
  auto kleins = all_subgroups(*g);
  kleins.erase(std::remove_if(kleins.begin(), kleins.end(), [&](const auto& s) { return !is_klein(*g, s); }),
               kleins.end());
  REQUIRE_FALSE(kleins.empty());
  CHECK(naive_class_count(*g, kleins) == 1);

  auto reports = detect(v, {make_group("C2xC2")});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].verdict == Verdict::no_witness);
  CHECK(reports[0].witness_pairs.empty());
  CHECK(reports[0].subgroup_classes == 1);
}

TEST_CASE("detect: C2xD4 hyperelliptic pair <t,s>, <t,r^2>") {
  auto g = make_group("C2xD4", {"t", "r", "s"});
  auto v = vec(g, {"t", "tsr", "s", "r"});
  REQUIRE(is_valid(v));
  auto reports = detect(v, {make_group("C2xC2")});
  auto h1 = gen(*g, {"t", "s"}), h2 = gen(*g, {"t", "r^2"});
  const StratumReport* hit = nullptr;
  for (const auto& r : reports) {
    if (r.verdict != Verdict::witness_found || !r.induced.signature.equivalent(Signature::parse("0;2^6"))) continue;
    bool has1 = false, has2 = false;
    for (const auto& w : r.witness_pairs) {
      check_replay(v, w);
      for (const auto* info : {&w.first, &w.second}) {
        auto m = gen(*g, info->generators);
        has1 = has1 || naive_conjugate(*g, m, h1);
        has2 = has2 || naive_conjugate(*g, m, h2);
      }
    }
    if (has1 && has2) hit = &r;
  }
  REQUIRE(hit);
  CHECK(hit->induced.genus == 3);
  CHECK(hit->induced.dimension == 3);
}

TEST_CASE("detect: (16,13) finds a D4 witness with (0;2^5)") {
  auto e = entry(3, 32);
  auto g = e.build();
  Classifier cl(g);
  auto v = admitted_classes(e, cl).front().representative;
  CHECK(v.signature.equivalent(Signature::parse("0;2,2,2,4")));
  auto d4s = two_generated(*g);
  d4s.erase(std::remove_if(d4s.begin(), d4s.end(), [&](const auto& s) { return !is_d4(*g, s); }), d4s.end());
  CHECK(naive_class_count(*g, d4s) >= 2);

  auto reports = detect(v, {make_group("D4")});
  auto r = find_report(reports, "0;2,2,2,2,2");
  REQUIRE(r);
  CHECK(r->induced.group == "D4");
  for (const auto& w : r->witness_pairs) {
    CHECK(is_d4(*g, gen(*g, w.first.generators)));
    CHECK(is_d4(*g, gen(*g, w.second.generators)));
    check_replay(v, w);
  }
}

TEST_CASE("detect: output is sorted and reproducible") {
  auto g = make_group("C2xD4", {"t", "r", "s"});
  auto v = vec(g, {"t", "tsr", "s", "r"});
  auto a = detect(v), b = detect(v);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].induced.class_id == b[i].induced.class_id);
    CHECK(a[i].witness_pairs.size() == b[i].witness_pairs.size());
    if (i) CHECK(a[i - 1].induced.order <= a[i].induced.order);
    for (const auto& w : a[i].witness_pairs) {
      CHECK(w.non_conjugate_verified);
      if (w.determined) {
        CHECK(w.replay_verified);
        check_replay(v, w);
      }
    }
  }
}

TEST_CASE("scan genus 2: exactly the C2xC2 (0;2^5) stratum") {
  auto s = scan_genus(2, catalog());
  REQUIRE(s.flagged() == 1);
  for (const auto& st : s.strata) {
    if (!st.flagged) continue;
    CHECK(st.case_label == 5);
    CHECK(st.stratum.group == "C2xC2");
    std::set<int> cases;
    for (const auto& a : st.ambients) cases.insert(a.case_label);
    CHECK(cases.count(11));
    for (int c : cases) CHECK((c == 11 || c == 20 || c == 21));
  }
  for (const auto& st : s.strata)
    if (st.case_label == 15) CHECK_FALSE(st.flagged);
}

TEST_CASE("scan genus 3: the seven strata") {
  auto s = scan_genus(3, catalog());
  CHECK(s.flagged() == 7);
  std::map<int, std::vector<const ScanStratum*>> by_case;
  for (const auto& st : s.strata)
    if (st.flagged) by_case[st.case_label].push_back(&st);
  std::set<int> cases;
  for (const auto& [c, v] : by_case) cases.insert(c);
  CHECK(cases == std::set<int>{3, 9, 10, 19, 20, 38});
  REQUIRE(by_case[9].size() == 2);

  auto ambient_cases = [](const ScanStratum* st) {
    std::set<int> out;
    for (const auto& a : st->ambients) out.insert(a.case_label);
    return out;
  };
  CHECK(ambient_cases(by_case[38].front()).count(49));
  CHECK(ambient_cases(by_case[20].front()).count(31));
  CHECK(ambient_cases(by_case[19].front()).count(32));
  CHECK(ambient_cases(by_case[10].front()).count(21));
  // the two Klein components: one realized by C2^3, the other by D4
  const ScanStratum* theta1 = nullptr;
  const ScanStratum* theta2 = nullptr;
  for (const auto* st : by_case[9]) {
    auto a = ambient_cases(st);
    if (a.count(20)) theta1 = st;
    if (a.count(19)) theta2 = st;
  }
  REQUIRE(theta1);
  REQUIRE(theta2);
  CHECK(theta1 != theta2);
  bool from_theta2 = false;
  for (const auto& a : by_case[3].front()->ambients)
    from_theta2 = from_theta2 || (a.case_label == 9 && a.class_index == theta2->class_index);
  CHECK(from_theta2);
  CHECK(by_case[3].front()->stratum.signature == Signature::parse("1;2,2,2,2"));
}

TEST_CASE("family: hyperelliptic_klein") {
  for (int g : {3, 4, 5}) {
    CAPTURE(g);
    auto f = family_check("hyperelliptic_klein", {{"g", g}});
    for (const auto& c : f.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    CHECK(f.pass);
    CHECK(f.report.induced.signature.periods.size() == static_cast<std::size_t>(g + 3));
    CHECK(f.report.induced.dimension == g);
  }
  // for g = 2 mod 4 every Klein subgroup of D_g is conjugate to <s,z>
  auto d6 = make_group("D6");
  auto h1 = gen(*d6, {"s", "r^3"}), h2 = gen(*d6, {"sr", "r^3"});
  CHECK(naive_conjugate(*d6, h1, h2));
  auto f6 = family_check("hyperelliptic_klein", {{"g", 6}});
  CHECK_FALSE(f6.pass);
  CHECK(f6.report.verdict == Verdict::no_witness);
}

TEST_CASE("family: dihedral_8n") {
  auto f = family_check("dihedral_8n", {{"g", 5}});
  for (const auto& c : f.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  CHECK(f.report.induced.group == "D8");
  // at g = 3 the presentation forces (ac)^2 = 1
  auto g3 = make_group("SD(C4;[1,3])", {"a", "b", "c"});
  CHECK(g3->element_order(g3->parse_element("ac")) == 2);
  CHECK(gen(*g3, {"ac", "b"}).count() == 4);
  CHECK_FALSE(family_check("dihedral_8n", {{"g", 3}}).pass);
}

TEST_CASE("family: cyclic_2n and generalized_fermat") {
  auto c3 = family_check("cyclic_2n", {{"n", 3}});
  CHECK(c3.pass);
  CHECK(c3.report.ambient.genus == 4);
  CHECK(c3.report.induced.signature == Signature::parse("0;2,2,3,3,3"));
  auto c5 = family_check("cyclic_2n", {{"n", 5}});
  CHECK(c5.pass);
  CHECK(c5.report.ambient.genus == 16);

  auto f = family_check("generalized_fermat", {{"k", 2}, {"n", 4}});
  CHECK(f.pass);
  CHECK(f.report.ambient.genus == 5);
  CHECK(f.report.induced.signature == Signature::parse("0;2^6"));
  CHECK(f.report.induced.group == "C2xC2xC2");

  CHECK_THROWS_AS(family_check("cyclic_2n", {{"n", 4}}), ParseError);
  CHECK_THROWS_AS(family_check("generalized_fermat", {{"k", 3}, {"n", 6}}), ParseError);
  CHECK_THROWS_AS(family_check("nope", {}), ParseError);
}

TEST_CASE("verify_catalog passes and names a corrupted entry") {
  auto all = verify_catalog(catalog());
  CHECK(all.pass);
  auto g2 = verify_catalog(catalog(), 2);
  CHECK(g2.entries.size() == 6);
  for (const auto& e : g2.entries) CHECK(e.classes == 1);
  for (const auto& e : all.entries)
    if (e.case_label == 49 && e.genus == 3) CHECK(e.pass);

  auto bad = entry(2, 14);
  bad.signature = Signature::parse("0;2,5,5");
  auto r = verify_catalog({bad});
  CHECK_FALSE(r.pass);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].entry == "g2 case 14");
  bool named = false;
  for (const auto& c : r.entries[0].checks) named = named || (!c.pass && c.name == "Riemann-Hurwitz genus");
  CHECK(named);
}
