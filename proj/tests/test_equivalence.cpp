#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "equistrata/equivalence.hpp"

using namespace equistrata;

namespace {

std::size_t class_count(GroupPtr g, const char* sig) { return topological_classes(g, Signature::parse(sig)).size(); }

GeneratingVector vec(GroupPtr g, const char* sig, std::vector<std::string> ell, std::vector<std::string> hand = {}) {
  return make_vector(g, Signature::parse(sig), hand, ell);
}

std::multiset<int> class_multiset(const std::vector<int>& cls, const std::vector<Element>& xs) {
  std::multiset<int> m;
  for (Element x : xs) m.insert(cls[x]);
  return m;
}

}  // namespace

TEST_CASE("braid moves") {
  auto k = make_group("C2xC2", {"a", "b"});
  auto v = vec(k, "0;2^6", {"a", "a", "a", "b", "a", "b"});
  auto w = braid_move(v, 2);
  CHECK(w.elliptic[2] == v.elliptic[3]);
  CHECK(w.elliptic[3] == v.elliptic[2]);
  CHECK_THROWS_AS(braid_move(v, 5), MathError);

  auto d4 = make_group("D4");
  auto theta1 = vec(d4, "0;2^5", {"s", "sr", "s", "sr", "r^2"});
  auto theta3 = vec(d4, "0;2^5", {"s", "sr", "sr^2", "sr^3", "r^2"});
  REQUIRE(is_valid(theta1));
  REQUIRE(is_valid(theta3));
  CHECK(braid_move(braid_move(theta1, 2), 2) == theta3);

  auto g = make_group("C2xD4", {"t", "r", "s"});
  auto t = vec(g, "0;2,2,2,4", {"t", "tsr", "s", "r"});
  for (std::size_t j = 0; j < 3; ++j) {
    auto b = braid_move(t, j);
    CHECK(is_valid(b));
    CHECK(g->product(b.elliptic) == g->product(t.elliptic));
  }
}

TEST_CASE("handle moves") {
  auto c2 = make_group("C2");
  for (const auto& v : enumerate(c2, Signature::parse("1;2^4")))
    for (const auto& w : handle_moves(v)) CHECK(w.elliptic == v.elliptic);

  auto k = make_group("C2xC2", {"a", "b"});
  auto v = vec(k, "1;2,2", {"b", "b"}, {"a", "1"});
  REQUIRE(is_valid(v));
  auto moved = handle_moves(v);
  CHECK(moved.front().handles == std::vector<Element>{k->parse_element("a"), k->parse_element("a")});
  CHECK_THROWS_AS(handle_moves(vec(k, "0;2^5", {"a", "a", "a", "b", "b"})), MathError);

  Classifier cl(k);
  for (const auto& start : enumerate(k, Signature::parse("1;2,2"))) {
    std::vector<std::vector<Element>> members;
    cl.orbit_class(start, &members);
    for (const auto& m : members) CHECK(is_valid(GeneratingVector::from_entries(k, start.signature, m)));
    for (const auto& w : handle_moves(start)) CHECK(is_valid(w));
  }
}

TEST_CASE("class counts") {
  auto k = make_group("C2xC2", {"a", "b"});
  auto c5 = topological_classes(k, Signature::parse("0;2^5"));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].orbit_size == 60);

  auto c4c2 = make_group("C4xC2", {"a", "b"});
  auto c = topological_classes(c4c2, Signature::parse("0;2,2,4,4"));
  CHECK(c.size() == 3);
  std::set<std::uint64_t> ids;
  for (const char* w : {"a^2 b a ab", "b b a a^-1", "b a^2b a a"}) {
    std::vector<std::string> parts;
    std::string s = w, cur;
    for (char ch : s + " ") {
      if (ch == ' ') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    auto v = vec(c4c2, "0;2,2,4,4", parts);
    REQUIRE(is_valid(v));
    ids.insert(Classifier(c4c2).class_of(v).class_id);
  }
  CHECK(ids.size() == 3);

  auto c6 = topological_classes(k, Signature::parse("0;2^6"));
  REQUIRE(c6.size() == 2);
  Classifier ck(k);
  auto id1 = ck.class_of(vec(k, "0;2^6", {"a", "a", "a", "a", "b", "b"})).class_id;
  auto id2 = ck.class_of(vec(k, "0;2^6", {"a", "a", "b", "b", "ab", "ab"})).class_id;
  CHECK(id1 != id2);
  CHECK(std::set<std::uint64_t>{id1, id2} == std::set<std::uint64_t>{c6[0].class_id, c6[1].class_id});

  for (const char* d : {"D4", "D8", "D12"}) CHECK(class_count(make_group(d), "0;2^5") == 1);
  CHECK(class_count(make_group("C2"), "1;2^4") == 1);
}

TEST_CASE("abelian shortcut agrees with orbit closure") {
  std::vector<std::pair<const char*, const char*>> cases{{"C2xC2", "0;2^6"},      {"C2xC4", "0;2,2,4,4"},
                                                         {"C2xC2xC2", "0;2^5"},  {"C3", "0;3^5"},
                                                         {"C6", "0;2,3,3,6"},    {"C9", "0;3,9,9"},
                                                         {"C2xC6", "0;2,2,3,6"}, {"C4", "0;2,2,2,4,4"}};
  for (auto [spec, sig] : cases) {
    auto g = make_group(spec);
    Classifier cl(g);
    std::size_t total = 0;
    for (const auto& c : cl.classes(Signature::parse(sig))) {
      auto bfs = cl.orbit_class(c.representative);
      CHECK(bfs.representative == c.representative);
      CHECK(bfs.orbit_size == c.orbit_size);
      total += c.orbit_size;
    }
    CHECK(total == enumerate(g, Signature::parse(sig)).size());
  }
}

TEST_CASE("abelian invariant cross-check for positive orbit genus") {
  for (auto [spec, sig] : std::vector<std::pair<const char*, const char*>>{
           {"C2", "1;2^4"}, {"C2xC2", "1;2,2"}, {"C4", "1;2,2"}, {"C3", "1;3,3,3"}}) {
    auto g = make_group(spec);
    Classifier cl(g);
    auto classes = cl.classes(Signature::parse(sig));
    std::set<std::vector<Element>> invariants;
    for (const auto& c : classes) {
      std::vector<std::vector<Element>> members;
      cl.orbit_class(c.representative, &members);
      auto inv = cl.abelian_invariant(c.representative);
      for (const auto& m : members)
        CHECK(cl.abelian_invariant(GeneratingVector::from_entries(g, c.representative.signature, m)) == inv);
      invariants.insert(inv);
    }
    CHECK(invariants.size() == classes.size());
  }
}

TEST_CASE("equivalence witnesses") {
  auto k = make_group("C2xC2", {"a", "b"});
  Classifier ck(k);
  auto v1 = vec(k, "0;2^6", {"a", "a", "a", "a", "b", "b"});
  auto v2 = vec(k, "0;2^6", {"b", "b", "ab", "ab", "ab", "ab"});
  auto e = ck.equivalent(v1, v2);
  REQUIRE(e.equivalent);
  CHECK(ck.replay(v1, e.witness) == v2);
  CHECK(ck.equivalent(v1, v1).witness.empty());
  CHECK_FALSE(ck.equivalent(v1, vec(k, "0;2^6", {"a", "a", "b", "b", "ab", "ab"})).equivalent);
  CHECK_THROWS_AS(ck.equivalent(v1, vec(k, "0;2^5", {"a", "a", "a", "b", "b"})), MathError);

  // across isomorphic copies
  auto k2 = make_group("SD(C2;[1])", {"x", "y"});
  auto iso = find_isomorphism(*k2, *k);
  REQUIRE(iso);
  auto w = vec(k2, "0;2^6", {"x", "x", "y", "y", "y", "y"});
  CHECK(ck.equivalent(v1, w, &*iso).equivalent);
}

TEST_CASE("equivalence relation on full enumerations") {
  for (auto [spec, sig] :
       std::vector<std::pair<const char*, const char*>>{{"D4", "0;2,2,2,4"}, {"C2xC4", "0;2,2,4,4"}, {"D3", "0;2,2,3,3"}}) {
    auto g = make_group(spec);
    Classifier cl(g);
    auto vs = enumerate(g, Signature::parse(sig));
    std::map<std::uint64_t, std::vector<GeneratingVector>> by_class;
    for (const auto& v : vs) by_class[cl.class_of(v).class_id].push_back(v);
    auto cls = conjugacy_class_index(*g);
    for (const auto& [id, members] : by_class) {
      const auto& a = members.front();
      for (std::size_t i = 0; i < members.size(); i += std::max<std::size_t>(1, members.size() / 5)) {
        const auto& b = members[i];
        auto ab = cl.equivalent(a, b);
        auto ba = cl.equivalent(b, a);
        REQUIRE(ab.equivalent);
        REQUIRE(ba.equivalent);
        CHECK(cl.replay(a, ab.witness) == b);
        CHECK(cl.replay(b, ba.witness) == a);
        // class multisets related by an automorphism
        auto mb = class_multiset(cls, b.elliptic);
        bool related = false;
        for (const auto& w : cl.automorphisms()) {
          std::vector<Element> img;
          for (Element x : a.elliptic) img.push_back(w(x));
          related = related || class_multiset(cls, img) == mb;
        }
        CHECK(related);
      }
    }
    for (const auto& [i1, m1] : by_class)
      for (const auto& [i2, m2] : by_class)
        if (i1 < i2) CHECK_FALSE(cl.equivalent(m1.front(), m2.front()).equivalent);
  }
}
