#include "equistrata/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <unordered_set>

namespace equistrata {

namespace {

constexpr Element kUnset = 0xFFFF;

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

Perm identity_perm(std::size_t d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

// ---- construction ----------------------------------------------------------

FiniteGroup FiniteGroup::from_generators(std::vector<Perm> generators,
                                         std::vector<std::string> names,
                                         std::size_t max_order) {
  max_order = std::min(max_order, kMaxGroupOrder);
  std::size_t degree = 1;
  for (const auto& g : generators) degree = std::max(degree, g.size());
  for (auto& g : generators) {
    for (std::size_t x = g.size(); x < degree; ++x) g.push_back(static_cast<std::uint16_t>(x));
  }
  if (names.size() != generators.size()) {
    names.clear();
    for (std::size_t i = 0; i < generators.size(); ++i) names.push_back("p" + std::to_string(i + 1));
  }

  FiniteGroup grp;
  grp.degree_ = degree;
  grp.names_ = std::move(names);
  grp.perms_.push_back(identity_perm(degree));
  grp.lookup_.emplace(grp.perms_[0], 0);

  // BFS; parent/gen record the discovery edge e_i = e_parent * g_gen.
  std::vector<Element> parent{0};
  std::vector<int> via{-1};
  const std::size_t k = generators.size();
  std::vector<Element> right;  // right[x * k + j] = index(x * g_j)
  for (std::size_t i = 0; i < grp.perms_.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Perm p = compose(grp.perms_[i], generators[j]);
      auto it = grp.lookup_.find(p);
      Element idx;
      if (it == grp.lookup_.end()) {
        if (grp.perms_.size() >= max_order) {
          throw BudgetExceeded("group order exceeds the configured bound of " +
                               std::to_string(max_order));
        }
        idx = static_cast<Element>(grp.perms_.size());
        grp.lookup_.emplace(p, idx);
        grp.perms_.push_back(std::move(p));
        parent.push_back(static_cast<Element>(i));
        via.push_back(static_cast<int>(j));
      } else {
        idx = it->second;
      }
      right.push_back(idx);
    }
  }

  const std::size_t n = grp.perms_.size();
  grp.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) grp.table_[a * n] = static_cast<Element>(a);
  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      Element ap = grp.table_[a * n + parent[b]];
      grp.table_[a * n + b] = right[ap * k + via[b]];
    }
  }
  grp.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (grp.table_[a * n + b] == 0) {
        grp.inverse_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  grp.orders_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    int o = 1;
    Element x = static_cast<Element>(a);
    while (x != 0) {
      x = grp.mul(x, static_cast<Element>(a));
      ++o;
    }
    grp.orders_[a] = o;
  }
  for (std::size_t j = 0; j < k; ++j) grp.generators_.push_back(right[j]);
  for (std::size_t a = 0; a < n && grp.abelian_; ++a) {
    for (Element g : grp.generators_) {
      if (grp.mul(static_cast<Element>(a), g) != grp.mul(g, static_cast<Element>(a))) {
        grp.abelian_ = false;
        break;
      }
    }
  }
  grp.compute_search_generators();
  return grp;
}

void FiniteGroup::compute_search_generators() {
  std::vector<Element> elems(order());
  std::iota(elems.begin(), elems.end(), 0);
  std::stable_sort(elems.begin(), elems.end(),
                   [&](Element a, Element b) { return orders_[a] > orders_[b]; });
  search_generators_.clear();
  ElementSet span;
  span.set(0);
  for (Element e : elems) {
    if (span.count() == order()) break;
    if (span.test(e)) continue;
    search_generators_.push_back(e);
    span = closure(search_generators_);
  }
}

FiniteGroup FiniteGroup::renamed(std::vector<std::string> names) const {
  if (names.size() != names_.size()) {
    throw ParseError("expected " + std::to_string(names_.size()) + " generator names, got " +
                     std::to_string(names.size()));
  }
  FiniteGroup copy = *this;
  copy.names_ = std::move(names);
  return copy;
}

// ---- arithmetic -------------------------------------------------------------

Element FiniteGroup::pow(Element a, long long k) const {
  const long long o = orders_[a];
  k %= o;
  if (k < 0) k += o;
  Element r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

Element FiniteGroup::product(std::span<const Element> xs) const {
  Element r = 0;
  for (Element x : xs) r = mul(r, x);
  return r;
}

std::optional<Element> FiniteGroup::find(const Perm& p) const {
  Perm q = p;
  for (std::size_t x = q.size(); x < degree_; ++x) q.push_back(static_cast<std::uint16_t>(x));
  if (q.size() != degree_) return std::nullopt;
  auto it = lookup_.find(q);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

ElementSet FiniteGroup::all() const {
  ElementSet s;
  for (std::size_t i = 0; i < order(); ++i) s.set(i);
  return s;
}

ElementSet FiniteGroup::closure(std::span<const Element> gens) const {
  ElementSet seen;
  seen.set(0);
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element g : gens) {
      Element y = mul(queue[i], g);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

ElementSet FiniteGroup::closure(const ElementSet& gens) const {
  std::vector<Element> g;
  for (std::size_t i = 0; i < order(); ++i)
    if (gens.test(i)) g.push_back(static_cast<Element>(i));
  return closure(g);
}

bool FiniteGroup::generates(std::span<const Element> gens) const {
  return closure(gens).count() == order();
}

bool FiniteGroup::is_subgroup(const ElementSet& s) const {
  if (!s.test(0)) return false;
  for (std::size_t a = 0; a < order(); ++a) {
    if (!s.test(a)) continue;
    for (std::size_t b = 0; b < order(); ++b) {
      if (s.test(b) && !s.test(mul(static_cast<Element>(a), static_cast<Element>(b)))) return false;
    }
  }
  return true;
}

ElementSet FiniteGroup::conjugate(const ElementSet& s, Element g) const {
  ElementSet r;
  for (std::size_t x = 0; x < order(); ++x)
    if (s.test(x)) r.set(conj(static_cast<Element>(x), g));
  return r;
}

bool FiniteGroup::is_normal(const ElementSet& s) const {
  for (Element g : generators_)
    if (conjugate(s, g) != s) return false;
  return true;
}

FiniteGroup FiniteGroup::subgroup(const ElementSet& s) const {
  if (!is_subgroup(s)) throw MathError("element set is not a subgroup");
  std::vector<Element> elems;
  for (std::size_t i = 0; i < order(); ++i)
    if (s.test(i)) elems.push_back(static_cast<Element>(i));
  std::stable_sort(elems.begin(), elems.end(),
                   [&](Element a, Element b) { return orders_[a] > orders_[b]; });
  std::vector<Element> gens;
  ElementSet span;
  span.set(0);
  for (Element e : elems) {
    if (span.count() == s.count()) break;
    if (span.test(e)) continue;
    gens.push_back(e);
    span = closure(gens);
  }
  std::vector<Perm> perms;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    perms.push_back(perms_[gens[i]]);
    names.push_back("h" + std::to_string(i + 1));
  }
  FiniteGroup sub = from_generators(std::move(perms), std::move(names));
  sub.parent_index_.resize(sub.order());
  for (std::size_t i = 0; i < sub.order(); ++i) {
    Perm q = sub.perms_[i];
    for (std::size_t x = q.size(); x < degree_; ++x) q.push_back(static_cast<std::uint16_t>(x));
    Element p = lookup_.at(q);
    sub.parent_index_[i] = p;
    sub.from_parent_[p] = static_cast<Element>(i);
  }
  return sub;
}

Element FiniteGroup::from_parent(Element parent_element) const {
  auto it = from_parent_.find(parent_element);
  if (it == from_parent_.end()) throw MathError("element is not in the subgroup");
  return it->second;
}

// ---- parsing and printing ---------------------------------------------------

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept(std::string_view lit) {
    skip_ws();
    if (s_.substr(i_, lit.size()) == lit) {
      i_ += lit.size();
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    long long v = 0;
    auto [p, ec] = std::from_chars(s_.data() + start + (s_[start] == '+' ? 1 : 0), s_.data() + i_, v);
    if (ec != std::errc() || p != s_.data() + i_) fail("expected integer");
    return v;
  }
  std::string_view rest() const { return s_.substr(i_); }
  std::size_t pos() const { return i_; }
  void advance(std::size_t n) { i_ += n; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

bool looks_like_cycles(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size() || s[i] != '(') return false;
  ++i;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i >= s.size() || s[i] == ')' || std::isdigit(static_cast<unsigned char>(s[i]));
}

Element parse_word(const FiniteGroup& g, Cursor& c);

Element parse_factor(const FiniteGroup& g, Cursor& c) {
  Element base;
  if (c.accept('(')) {
    base = parse_word(g, c);
    c.expect(')');
  } else if (c.peek() == '1') {
    c.advance(1);
    base = 0;
  } else {
    const auto& names = g.generator_names();
    std::string_view rest = c.rest();
    std::size_t best = 0;
    int which = -1;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].size() > best && rest.substr(0, names[i].size()) == names[i]) {
        best = names[i].size();
        which = static_cast<int>(i);
      }
    }
    if (which < 0) c.fail("unknown generator");
    c.advance(best);
    base = g.generators()[which];
  }
  if (c.accept('^')) base = g.pow(base, c.integer());
  return base;
}

Element parse_word(const FiniteGroup& g, Cursor& c) {
  Element r = 0;
  bool any = false;
  while (!c.done() && c.peek() != ')') {
    if (any) c.accept('*');
    r = g.mul(r, parse_factor(g, c));
    any = true;
  }
  if (!any) c.fail("empty word");
  return r;
}

}  // namespace

Perm parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<long long>> cycles;
  Cursor c(text);
  long long maxpt = 0;
  while (!c.done()) {
    c.expect('(');
    std::vector<long long> cyc;
    if (!c.accept(')')) {
      do {
        long long v = c.integer();
        if (v < 1) c.fail("points are 1-based");
        cyc.push_back(v);
        maxpt = std::max(maxpt, v);
      } while (c.accept(','));
      c.expect(')');
    }
    cycles.push_back(std::move(cyc));
  }
  std::size_t d = std::max<std::size_t>(degree, static_cast<std::size_t>(maxpt));
  if (d > 4096) throw ParseError("permutation degree too large");
  Perm p = identity_perm(d);
  std::vector<bool> used(d, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      auto from = static_cast<std::size_t>(cyc[i] - 1);
      auto to = static_cast<std::size_t>(cyc[(i + 1) % cyc.size()] - 1);
      if (used[from]) throw ParseError("cycles are not disjoint in \"" + std::string(text) + "\"");
      used[from] = true;
      p[from] = static_cast<std::uint16_t>(to);
    }
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == s) continue;
    out += '(';
    std::size_t j = s;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      done[j] = true;
      j = p[j];
      first = false;
    } while (j != s);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Element FiniteGroup::parse_element(std::string_view text) const {
  if (looks_like_cycles(text)) {
    auto e = find(parse_cycles(text, degree_));
    if (!e) throw ParseError("permutation \"" + std::string(text) + "\" is not in the group");
    return *e;
  }
  Cursor c(text);
  Element e = parse_word(*this, c);
  if (!c.done()) c.fail("trailing characters");
  return e;
}

std::string FiniteGroup::format_cycles(Element a) const { return equistrata::format_cycles(perms_[a]); }

// ---- group specs -------------------------------------------------------------

namespace {

struct Built {
  std::vector<Perm> gens;
  std::vector<std::string> names;
  std::size_t degree = 0;
};

long long positive(Cursor& c) {
  long long n = c.integer();
  if (n < 1) c.fail("expected positive integer");
  return n;
}

Built cyclic(long long n) {
  Built b;
  b.degree = static_cast<std::size_t>(n);
  Perm p(b.degree);
  for (std::size_t i = 0; i < b.degree; ++i) p[i] = static_cast<std::uint16_t>((i + 1) % b.degree);
  b.gens.push_back(p);
  b.names = {"a"};
  return b;
}

// Right regular representation of C_n x| C_2^k, element (i, v) = a^i b^v,
// (i, v)(j, w) = (i + E(v) j, v + w) with E(v) the product of the exponents
// selected by v.
Built semidirect(long long n, const std::vector<long long>& exps, const Limits& limits) {
  const std::size_t k = exps.size();
  for (long long e : exps) {
    if (std::gcd(e, n) != 1 || ((e % n) * (e % n)) % n != 1 % n) {
      throw MathError("SD exponent " + std::to_string(e) + " does not define an involutive automorphism of C" +
                      std::to_string(n));
    }
  }
  const std::size_t order = static_cast<std::size_t>(n) << k;
  if (order > limits.max_order) {
    throw BudgetExceeded("group order " + std::to_string(order) + " exceeds the configured bound");
  }
  auto multiplier = [&](std::size_t v) {
    long long m = 1;
    for (std::size_t l = 0; l < k; ++l)
      if (v >> l & 1U) m = (m * exps[l]) % n;
    return ((m % n) + n) % n;
  };
  auto index = [&](long long i, std::size_t v) { return static_cast<std::size_t>(i) * (1U << k) + v; };
  auto right_mult = [&](long long j, std::size_t w) {
    Perm p(order);
    for (long long i = 0; i < n; ++i) {
      for (std::size_t v = 0; v < (1U << k); ++v) {
        long long ni = (i + multiplier(v) * j) % n;
        p[index(i, v)] = static_cast<std::uint16_t>(index(ni, v ^ w));
      }
    }
    return p;
  };
  Built b;
  b.degree = order;
  b.gens.push_back(right_mult(1, 0));
  b.names.push_back("a");
  for (std::size_t l = 0; l < k; ++l) {
    b.gens.push_back(right_mult(0, std::size_t{1} << l));
    b.names.push_back(k == 1 ? "b" : "b" + std::to_string(l + 1));
  }
  return b;
}

Built dihedral(long long n, const Limits& limits) {
  if (n < 2) throw MathError("D<n> needs n >= 2");
  if (n == 2) {
    Built b = semidirect(2, {1}, limits);
    b.names = {"r", "s"};
    return b;
  }
  Built b;
  b.degree = static_cast<std::size_t>(n);
  Perm r(b.degree), s(b.degree);
  for (std::size_t i = 0; i < b.degree; ++i) {
    r[i] = static_cast<std::uint16_t>((i + 1) % b.degree);
    s[i] = static_cast<std::uint16_t>((b.degree - i) % b.degree);
  }
  b.gens = {r, s};
  b.names = {"r", "s"};
  return b;
}

Built parse_factor_spec(Cursor& c, const Limits& limits);

Built parse_product(Cursor& c, const Limits& limits) {
  std::vector<Built> factors;
  factors.push_back(parse_factor_spec(c, limits));
  while (c.accept('x')) factors.push_back(parse_factor_spec(c, limits));
  if (factors.size() == 1) return factors.front();

  Built out;
  std::size_t offset = 0;
  std::map<std::string, int> counts;
  for (const auto& f : factors)
    for (const auto& nm : f.names) ++counts[nm];
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    out.degree += factors[fi].degree;
  }
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const auto& f = factors[fi];
    for (std::size_t gi = 0; gi < f.gens.size(); ++gi) {
      Perm p = identity_perm(out.degree);
      for (std::size_t x = 0; x < f.degree; ++x) {
        std::uint16_t img = x < f.gens[gi].size() ? f.gens[gi][x] : static_cast<std::uint16_t>(x);
        p[offset + x] = static_cast<std::uint16_t>(offset + img);
      }
      out.gens.push_back(std::move(p));
      const auto& nm = f.names[gi];
      out.names.push_back(counts[nm] > 1 ? nm + std::to_string(fi + 1) : nm);
    }
    offset += f.degree;
  }
  return out;
}

Built parse_factor_spec(Cursor& c, const Limits& limits) {
  if (c.accept('(')) {
    Built b = parse_product(c, limits);
    c.expect(')');
    return b;
  }
  if (c.accept("SD(")) {
    c.expect('C');
    long long n = positive(c);
    c.expect(';');
    c.expect('[');
    std::vector<long long> exps;
    if (!c.accept(']')) {
      do {
        exps.push_back(c.integer());
      } while (c.accept(','));
      c.expect(']');
    }
    c.expect(')');
    if (exps.empty()) c.fail("SD needs at least one exponent");
    return semidirect(n, exps, limits);
  }
  if (c.accept("Perm[")) {
    std::string_view rest = c.rest();
    std::size_t close = rest.find(']');
    if (close == std::string_view::npos) c.fail("unterminated Perm[");
    std::string_view body = rest.substr(0, close);
    c.advance(close + 1);
    Built b;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t semi = body.find(';', start);
      std::string_view part = body.substr(start, semi == std::string_view::npos ? body.size() - start : semi - start);
      b.gens.push_back(parse_cycles(part));
      b.names.push_back("p" + std::to_string(b.gens.size()));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    for (const auto& g : b.gens) b.degree = std::max(b.degree, g.size());
    for (auto& g : b.gens)
      for (std::size_t x = g.size(); x < b.degree; ++x) g.push_back(static_cast<std::uint16_t>(x));
    return b;
  }
  if (c.accept('C')) return cyclic(positive(c));
  if (c.accept('D')) return dihedral(positive(c), limits);
  c.fail("unknown group spec");
}

}  // namespace

FiniteGroup construct(std::string_view spec, const Limits& limits) {
  Cursor c(spec);
  Built b = parse_product(c, limits);
  if (!c.done()) c.fail("trailing characters in group spec");
  FiniteGroup g = FiniteGroup::from_generators(std::move(b.gens), std::move(b.names), limits.max_order);
  g.set_label(std::string(spec));
  return g;
}

GroupPtr make_group(std::string_view spec, const Limits& limits) {
  return std::make_shared<const FiniteGroup>(construct(spec, limits));
}

GroupPtr make_group(std::string_view spec, std::vector<std::string> names, const Limits& limits) {
  return std::make_shared<const FiniteGroup>(construct(spec, limits).renamed(std::move(names)));
}

// ---- structure ---------------------------------------------------------------

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Element>> classes;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ElementSet cls;
    for (std::size_t h = 0; h < g.order(); ++h) cls.set(g.conj(static_cast<Element>(x), static_cast<Element>(h)));
    std::vector<Element> members;
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (cls.test(y)) {
        members.push_back(static_cast<Element>(y));
        seen[y] = true;
      }
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

std::vector<int> conjugacy_class_index(const FiniteGroup& g) {
  std::vector<int> idx(g.order(), -1);
  auto classes = conjugacy_classes(g);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Element e : classes[c]) idx[e] = static_cast<int>(c);
  return idx;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element h : g.generators()) {
      if (g.mul(static_cast<Element>(x), h) != g.mul(h, static_cast<Element>(x))) {
        central = false;
        break;
      }
    }
    if (central) z.set(x);
  }
  return z;
}

ElementSet derived_subgroup(const FiniteGroup& g) {
  ElementSet comms;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) comms.set(g.commutator(static_cast<Element>(a), static_cast<Element>(b)));
  return g.closure(comms);
}

std::vector<int> abelian_invariants(const FiniteGroup& g, const ElementSet& normal) {
  // coset representative = least index in x N
  std::vector<Element> rep(g.order(), kUnset);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (rep[x] != kUnset) continue;
    reps.push_back(static_cast<Element>(x));
    for (std::size_t nn = 0; nn < g.order(); ++nn)
      if (normal.test(nn)) rep[g.mul(static_cast<Element>(x), static_cast<Element>(nn))] = static_cast<Element>(x);
  }
  const std::size_t q = reps.size();
  std::vector<int> invariants;
  std::size_t rest = q;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    // n_k = #{x : x^{p^k} in N}
    std::vector<std::size_t> counts{1};
    long long pk = 1;
    while (true) {
      pk *= static_cast<long long>(p);
      std::size_t cnt = 0;
      for (Element r : reps)
        if (normal.test(g.pow(r, pk))) ++cnt;
      counts.push_back(cnt);
      if (cnt == counts[counts.size() - 2]) break;
    }
    // r_k = number of cyclic p-factors of order >= p^k
    std::vector<int> r;
    for (std::size_t i = 1; i < counts.size(); ++i) {
      std::size_t ratio = counts[i] / counts[i - 1];
      int e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      r.push_back(e);
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      int next = i + 1 < r.size() ? r[i + 1] : 0;
      int exact = r[i] - next;
      int power = 1;
      for (std::size_t t = 0; t <= i; ++t) power *= static_cast<int>(p);
      for (int t = 0; t < exact; ++t) invariants.push_back(power);
    }
  }
  std::sort(invariants.begin(), invariants.end());
  return invariants;
}

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  for (std::size_t x = 0; x < g.order(); ++x) ++f.element_order_histogram[g.element_order(static_cast<Element>(x))];
  for (const auto& c : conjugacy_classes(g)) f.conjugacy_class_sizes.push_back(c.size());
  std::sort(f.conjugacy_class_sizes.begin(), f.conjugacy_class_sizes.end());
  f.abelianization_invariants = abelian_invariants(g, derived_subgroup(g));
  f.center_order = center(g).count();
  return f;
}

namespace {

bool set_less(const ElementSet& a, const ElementSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  for (std::size_t i = 0; i < kMaxGroupOrder; ++i) {
    if (a.test(i) != b.test(i)) return a.test(i);
  }
  return false;
}

}  // namespace

std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  struct Entry {
    ElementSet set;
    std::vector<Element> gens;
  };
  std::vector<Entry> subs;
  std::unordered_set<ElementSet> seen;
  std::vector<Element> cyclic_gens;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<Element> gen{static_cast<Element>(x)};
    ElementSet c = g.closure(gen);
    if (seen.insert(c).second) {
      subs.push_back({c, x == 0 ? std::vector<Element>{} : gen});
      if (x != 0) cyclic_gens.push_back(static_cast<Element>(x));
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (Element c : cyclic_gens) {
      if (subs[i].set.test(c)) continue;
      std::vector<Element> gens = subs[i].gens;
      gens.push_back(c);
      ElementSet j = g.closure(gens);
      if (seen.insert(j).second) subs.push_back({j, std::move(gens)});
    }
  }
  std::vector<ElementSet> out;
  out.reserve(subs.size());
  for (auto& e : subs) out.push_back(e.set);
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  std::unordered_set<ElementSet> assigned;
  std::vector<SubgroupClass> classes;
  for (const auto& s : subs) {
    if (assigned.count(s)) continue;
    std::vector<ElementSet> orbit{s};
    std::unordered_set<ElementSet> in_orbit{s};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Element h : g.search_generators()) {
        ElementSet c = g.conjugate(orbit[i], h);
        if (in_orbit.insert(c).second) orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end(), set_less);
    for (const auto& m : orbit) assigned.insert(m);
    classes.push_back({orbit.front(), orbit.size(), std::move(orbit)});
  }
  return classes;
}

// ---- homomorphisms -------------------------------------------------------------

std::optional<std::vector<Element>> extend_homomorphism(const FiniteGroup& src,
                                                        const FiniteGroup& dst,
                                                        std::span<const Element> gens,
                                                        std::span<const Element> images) {
  std::vector<Element> map(src.order(), kUnset);
  map[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = src.mul(x, gens[k]);
      Element v = dst.mul(map[x], images[k]);
      if (map[y] == kUnset) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        return std::nullopt;
      }
    }
  }
  return map;
}

namespace {

struct ElementProfile {
  int order;
  std::size_t class_size;
  bool operator==(const ElementProfile&) const = default;
};

std::vector<ElementProfile> profiles(const FiniteGroup& g) {
  std::vector<ElementProfile> p(g.order());
  for (const auto& cls : conjugacy_classes(g))
    for (Element e : cls) p[e] = {g.element_order(e), cls.size()};
  return p;
}

}  // namespace

namespace {

// Stores at most `keep` maps; counts up to `limit`.
std::size_t isomorphism_search(const FiniteGroup& a, const FiniteGroup& b, std::size_t limit, std::size_t keep,
                               std::vector<Isomorphism>& out) {
  std::size_t found = 0;
  if (a.order() != b.order() || limit == 0) return found;
  GroupFingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (!(fa == fb)) return found;

  const auto& gens = a.search_generators();
  auto pa = profiles(a), pb = profiles(b);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t y = 0; y < b.order(); ++y)
      if (pb[y] == pa[gens[k]]) candidates[k].push_back(static_cast<Element>(y));
  }

  std::vector<Element> images(gens.size());
  // prefix_closures[k] = subgroup generated by images[0..k)
  std::vector<ElementSet> image_span(gens.size() + 1);
  image_span[0].set(0);

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (found >= limit) return;
    if (k == gens.size()) {
      auto map = extend_homomorphism(a, b, gens, images);
      if (!map) return;
      ElementSet img;
      for (Element e : *map) img.set(e);
      if (img.count() != b.order()) return;
      if (out.size() < keep) out.push_back({images, std::move(*map)});
      ++found;
      return;
    }
    for (Element y : candidates[k]) {
      if (image_span[k].test(y)) continue;  // gens[k] is outside the span of earlier gens
      images[k] = y;
      std::span<const Element> g_prefix(gens.data(), k + 1);
      std::span<const Element> i_prefix(images.data(), k + 1);
      if (!extend_homomorphism(a, b, g_prefix, i_prefix)) continue;
      image_span[k + 1] = b.closure(i_prefix);
      self(self, k + 1);
      if (found >= limit) return;
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace

std::vector<Isomorphism> isomorphisms(const FiniteGroup& a, const FiniteGroup& b, std::size_t limit) {
  std::vector<Isomorphism> out;
  isomorphism_search(a, b, limit, limit, out);
  return out;
}

std::optional<Isomorphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  auto isos = isomorphisms(a, b, 1);
  if (isos.empty()) return std::nullopt;
  return std::move(isos.front());
}

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) { return find_isomorphism(a, b).has_value(); }

std::vector<Isomorphism> automorphisms(const FiniteGroup& g, const Limits& limits) {
  std::vector<Isomorphism> autos;
  // count first when the maps would not fit
  const std::size_t keep = g.order() * limits.max_automorphisms > (std::size_t{1} << 27) ? 0 : SIZE_MAX;
  std::size_t n = isomorphism_search(g, g, limits.max_automorphisms + 1, keep, autos);
  if (n <= limits.max_automorphisms && autos.size() < n) isomorphism_search(g, g, n, n, autos);
  if (n > limits.max_automorphisms) {
    throw BudgetExceeded("automorphism group larger than max_automorphisms=" +
                         std::to_string(limits.max_automorphisms));
  }
  return autos;
}

}  // namespace equistrata
