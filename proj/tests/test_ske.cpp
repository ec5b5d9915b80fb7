#include <doctest.h>

#include <set>

#include "equistrata/ske.hpp"

using namespace equistrata;

namespace {

// Every tuple in G^(2h+l), filtered by the three defining conditions.
std::set<std::vector<Element>> naive_vectors(const FiniteGroup& g, const Signature& s) {
  const std::size_t nh = 2 * static_cast<std::size_t>(s.h);
  const std::size_t n = nh + s.periods.size();
  std::set<std::vector<Element>> out;
  std::vector<Element> t(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < s.periods.size() && ok; ++j) {
      Element x = t[nh + j], p = x;
      int o = 1;
      while (p != 0) {
        p = g.mul(p, x);
        ++o;
      }
      ok = o == s.periods[j];
    }
    if (ok) {
      Element prod = 0;
      for (std::size_t i = 0; i < nh; i += 2) {
        Element a = t[i], b = t[i + 1];
        prod = g.mul(prod, g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
      }
      for (std::size_t j = nh; j < n; ++j) prod = g.mul(prod, t[j]);
      if (prod == 0) {
        std::set<Element> span{0};
        bool grew = true;
        while (grew) {
          grew = false;
          for (Element a : std::set<Element>(span))
            for (Element b : t)
              if (span.insert(g.mul(a, b)).second) grew = true;
        }
        if (span.size() == g.order()) out.insert(t);
      }
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++t[i] < g.order()) break;
      t[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::size_t count(const char* spec, const char* sig) {
  return enumerate(make_group(spec), Signature::parse(sig)).size();
}

}  // namespace

TEST_CASE("validity") {
  auto g = make_group("C2xD4", {"t", "r", "s"});
  auto s = Signature::parse("0;2,2,2,4");
  CHECK(is_valid(make_vector(g, s, {}, {"t", "tsr", "s", "r"})));

  auto k = make_group("C2xC2", {"a", "b"});
  auto bad = is_valid(make_vector(k, Signature::parse("0;2,2,2,2,2"), {}, {"a", "a", "a", "a", "a"}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.diagnostic.find("generate") != std::string::npos);

  auto d4 = make_group("D4");
  auto wrong = is_valid(make_vector(d4, Signature::parse("0;2,2,2,2,2"), {}, {"s", "sr", "s", "sr", "r"}));
  CHECK_FALSE(wrong.ok);
  CHECK(wrong.diagnostic.find("order 4") != std::string::npos);

  auto rel = is_valid(make_vector(k, Signature::parse("0;2,2,2,2,2"), {}, {"a", "b", "a", "b", "a"}));
  CHECK_FALSE(rel.ok);
  CHECK(rel.diagnostic.find("long relation") != std::string::npos);

  CHECK_THROWS_AS(make_vector(k, Signature::parse("0;2,2,2,2,2"), {}, {"a", "b"}), ParseError);
}

TEST_CASE("enumeration counts") {
  CHECK(count("C2xC2", "0;2,2,2,2,2") == 60);
  auto c2 = enumerate(make_group("C2"), Signature::parse("0;2^8"));
  REQUIRE(c2.size() == 1);
  for (Element e : c2[0].elliptic) CHECK(e == 1);
  CHECK(count("C10", "0;2,5,10") == 4);
  CHECK_THROWS_AS(count("C2xC2", "0;2,3,7"), MathError);
}

TEST_CASE("enumeration agrees with naive filter") {
  std::vector<std::pair<const char*, const char*>> cases{
      {"C2xC2", "0;2,2,2,2,2"}, {"D4", "0;2,2,2,4"},   {"C2xC4", "0;2,2,4,4"}, {"D6", "0;2,2,2,3"},
      {"C2xC2", "1;2,2"},       {"D3", "0;2,2,2,2,3"}, {"C3", "0;3,3,3,3,3"}, {"C10", "0;2,5,10"},
      {"C2", "1;2,2,2,2"},      {"C6", "0;2,3,3,6"},   {"D4", "0;2,2,2,2,2"}, {"C2xC2xC2", "0;2,2,2,2,2"}};
  for (auto [spec, sig] : cases) {
    auto g = make_group(spec);
    auto s = Signature::parse(sig);
    auto fast = enumerate(g, s);
    std::set<std::vector<Element>> got;
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(is_valid(fast[i]));
      if (i) CHECK(fast[i - 1] < fast[i]);
      got.insert(fast[i].entries());
    }
    CHECK(got.size() == fast.size());
    CHECK(got == naive_vectors(*g, s));
  }
}

TEST_CASE("count invariant under isomorphic copies") {
  CHECK(count("D6", "0;2,2,2,3") == count("C2xD3", "0;2,2,2,3"));
  CHECK(count("D6", "0;2,2,2,6") == count("SD(C6;[5])", "0;2,2,2,6"));
  CHECK(count("C10", "0;2,5,10") == count("C2xC5", "0;2,5,10"));
}

TEST_CASE("abelian product of elliptic entries") {
  for (auto [spec, sig] : std::vector<std::pair<const char*, const char*>>{
           {"C2xC4", "0;2,2,4,4"}, {"C2xC2xC2", "0;2,2,2,2,2"}, {"C9", "0;3,9,9"}}) {
    auto g = make_group(spec);
    for (const auto& v : enumerate(g, Signature::parse(sig))) CHECK(g->product(v.elliptic) == 0);
  }
}

TEST_CASE("budget") {
  Limits l;
  l.max_vectors = 10;
  CHECK_THROWS_AS(enumerate(make_group("C2xC2"), Signature::parse("0;2,2,2,2,2"), l), BudgetExceeded);
}

TEST_CASE("constrained enumeration") {
  auto g = make_group("C2xC2", {"a", "b"});
  EllipticConstraint c;
  c.label.assign(g->order(), -1);
  c.label[g->parse_element("a")] = 0;
  c.label[g->parse_element("b")] = 1;
  c.label_counts = {4, 2};
  auto vs = enumerate_constrained(g, Signature::parse("0;2^6"), c);
  CHECK(vs.size() == 15);  // choose the two b positions
}

TEST_CASE("element words") {
  auto g = make_group("C2xD4", {"t", "r", "s"});
  for (Element e = 0; e < g->order(); ++e) CHECK(g->parse_element(element_word(*g, e)) == e);
  CHECK(element_word(*g, 0) == "1");
}
