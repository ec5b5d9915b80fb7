#include "equistrata/signature.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "equistrata/limits.hpp"

namespace equistrata {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError("malformed signature \"" + std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

Signature Signature::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && (t.front() == ' ' || t.front() == '(')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == ')')) t.remove_suffix(1);
  auto semi = t.find(';');
  if (semi == std::string_view::npos) throw ParseError("signature \"" + std::string(text) + "\" lacks ';'");
  Signature s;
  s.h = parse_int(t.substr(0, semi), text);
  if (s.h < 0) throw ParseError("negative orbit genus in \"" + std::string(text) + "\"");
  std::string_view rest = t.substr(semi + 1);
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto caret = item.find('^');
    int m = parse_int(item.substr(0, caret), text);
    int rep = caret == std::string_view::npos ? 1 : parse_int(item.substr(caret + 1), text);
    if (m < 2) throw ParseError("period below 2 in \"" + std::string(text) + "\"");
    if (rep < 1 || rep > 256) throw ParseError("bad repetition in \"" + std::string(text) + "\"");
    s.periods.insert(s.periods.end(), rep, m);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (s.measure() <= 0) throw MathError("signature " + s.pretty() + " is not hyperbolic");
  return s;
}

Rational Signature::measure() const {
  Rational mu(2 * (h - 1));
  for (int m : periods) mu += Rational(m - 1, m);
  return mu;
}

std::vector<int> Signature::sorted_periods() const {
  auto p = periods;
  std::sort(p.begin(), p.end());
  return p;
}

bool Signature::equivalent(const Signature& other) const {
  return h == other.h && sorted_periods() == other.sorted_periods();
}

std::string Signature::str() const {
  std::string out = std::to_string(h) + ";";
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(periods[i]);
  }
  return out;
}

std::string Signature::pretty() const {
  std::string out = "(" + std::to_string(h) + ";";
  std::size_t i = 0;
  bool first = true;
  while (i < periods.size()) {
    std::size_t j = i;
    while (j < periods.size() && periods[j] == periods[i]) ++j;
    out += first ? " " : ", ";
    out += std::to_string(periods[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    first = false;
    i = j;
  }
  return out + ")";
}

int riemann_hurwitz_genus(std::size_t group_order, const Signature& s) {
  Rational mu = s.measure();
  if (mu <= 0) throw MathError("signature " + s.pretty() + " is not hyperbolic");
  Rational twice = mu * static_cast<long long>(group_order);  // 2(g-1)
  if (twice.denominator() != 1 || twice.numerator() % 2 != 0) {
    throw MathError("Riemann-Hurwitz gives non-integral genus for order " + std::to_string(group_order) +
                    " and signature " + s.pretty());
  }
  long long g = twice.numerator() / 2 + 1;
  if (g < 2) throw MathError("Riemann-Hurwitz genus below 2 for signature " + s.pretty());
  return static_cast<int>(g);
}

// ---- finitely-maximal inclusions ----------------------------------------------

namespace {

Signature sig(int h, std::vector<int> p) {
  std::sort(p.begin(), p.end());
  return {h, std::move(p)};
}

void emit(std::vector<ExtensionCandidate>& out, const Signature& inner, Signature outer, int index,
          bool normal, std::string source) {
  if (outer.measure() <= 0) return;
  if (inner.measure() != outer.measure() * static_cast<long long>(index)) return;
  if (inner.teich_dimension() != outer.teich_dimension()) return;
  out.push_back({inner, std::move(outer), index, normal, std::move(source)});
}

}  // namespace

std::vector<ExtensionCandidate> list_extensions(const Signature& s) {
  std::vector<ExtensionCandidate> out;
  const auto p = s.sorted_periods();
  const std::size_t l = p.size();

  if (s.h == 2 && l == 0) emit(out, s, sig(0, {2, 2, 2, 2, 2, 2}), 2, true, "(2;) < (0;2,2,2,2,2,2)");
  if (s.h == 1 && l == 2 && p[0] == p[1])
    emit(out, s, sig(0, {2, 2, 2, 2, p[0]}), 2, true, "(1;t,t) < (0;2,2,2,2,t)");
  if (s.h == 1 && l == 1) emit(out, s, sig(0, {2, 2, 2, 2 * p[0]}), 2, true, "(1;t) < (0;2,2,2,2t)");

  if (s.h == 0 && l == 4) {
    if (p[0] == p[3]) emit(out, s, sig(0, {2, 2, 2, p[0]}), 4, true, "(0;t,t,t,t) < (0;2,2,2,t)");
    if (p[0] == p[1] && p[2] == p[3])
      emit(out, s, sig(0, {2, 2, p[0], p[2]}), 2, true, "(0;t,t,u,u) < (0;2,2,t,u)");
  }

  if (s.h == 0 && l == 3) {
    const int a = p[0], b = p[1], c = p[2];
    if (a == c) {
      emit(out, s, sig(0, {3, 3, a}), 3, true, "(t,t,t) < (3,3,t)");
      emit(out, s, sig(0, {2, 3, 2 * a}), 6, true, "(t,t,t) < (2,3,2t)");
    }
    // (t,t,u) < (2,t,2u) for every equal pair
    std::map<std::pair<int, int>, bool> seen;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (p[i] != p[j]) continue;
        int u = p[3 - i - j];
        if (seen[{p[i], u}]) continue;
        seen[{p[i], u}] = true;
        emit(out, s, sig(0, {2, p[i], 2 * u}), 2, true, "(t,t,u) < (2,t,2u)");
      }
    }
    auto is = [&](std::vector<int> q) { return sig(0, std::move(q)).periods == p; };
    if (is({7, 7, 7})) emit(out, s, sig(0, {2, 3, 7}), 24, false, "(7,7,7) < (2,3,7)");
    if (is({2, 7, 7})) emit(out, s, sig(0, {2, 3, 7}), 9, false, "(2,7,7) < (2,3,7)");
    if (is({3, 3, 7})) emit(out, s, sig(0, {2, 3, 7}), 8, false, "(3,3,7) < (2,3,7)");
    if (is({4, 8, 8})) emit(out, s, sig(0, {2, 3, 8}), 12, false, "(4,8,8) < (2,3,8)");
    if (is({3, 8, 8})) emit(out, s, sig(0, {2, 3, 8}), 10, false, "(3,8,8) < (2,3,8)");
    if (is({9, 9, 9})) emit(out, s, sig(0, {2, 3, 9}), 12, false, "(9,9,9) < (2,3,9)");
    if (is({4, 4, 5})) emit(out, s, sig(0, {2, 4, 5}), 6, false, "(4,4,5) < (2,4,5)");
    // parametric families: n is the smallest period in each pattern
    if (b == c && c == 4 * a) emit(out, s, sig(0, {2, 3, 4 * a}), 6, false, "(n,4n,4n) < (2,3,4n)");
    if (b == c && c == 2 * a) emit(out, s, sig(0, {2, 4, 2 * a}), 4, false, "(n,2n,2n) < (2,4,2n)");
    for (int n : {a, b}) {
      if (is({3, n, 3 * n})) {
        emit(out, s, sig(0, {2, 3, 3 * n}), 4, false, "(3,n,3n) < (2,3,3n)");
        break;
      }
    }
    for (int n : {a, b}) {
      if (is({2, n, 2 * n})) {
        emit(out, s, sig(0, {2, 3, 2 * n}), 3, false, "(2,n,2n) < (2,3,2n)");
        break;
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const ExtensionCandidate& x, const ExtensionCandidate& y) {
    return std::tie(x.index, x.outer, x.source) < std::tie(y.index, y.outer, y.source);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ExtensionCandidate& x, const ExtensionCandidate& y) {
                          return x.index == y.index && x.outer == y.outer;
                        }),
            out.end());
  return out;
}

bool is_maximal_signature(const Signature& s) { return list_extensions(s).empty(); }

}  // namespace equistrata
