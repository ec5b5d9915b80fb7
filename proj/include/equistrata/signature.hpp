#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace equistrata {

using Rational = boost::rational<long long>;

// Fuchsian signature (h; m1, ..., ml). Periods keep their input order.
struct Signature {
  int h = 0;
  std::vector<int> periods;

  // "h;m1,m2,..." with optional m^k repetition ("0;2^3,4"); "2;" for surfaces.
  static Signature parse(std::string_view text);

  // 2(h-1) + sum(1 - 1/m)
  Rational measure() const;
  int teich_dimension() const { return 3 * h - 3 + static_cast<int>(periods.size()); }
  std::vector<int> sorted_periods() const;

  // Multiset comparison of periods.
  bool equivalent(const Signature& other) const;
  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;

  // Machine form "0;2,2,2,4".
  std::string str() const;
  // Display form "(0; 2^3, 4)".
  std::string pretty() const;
};

// Throws MathError unless 2(g-1) = |G| mu(s) with integral g >= 2.
int riemann_hurwitz_genus(std::size_t group_order, const Signature& s);

struct ExtensionCandidate {
  Signature inner;
  Signature outer;
  int index = 0;
  bool normal = false;
  std::string source;
};

// Tight extensions of s from the finitely-maximal inclusion table.
std::vector<ExtensionCandidate> list_extensions(const Signature& s);
bool is_maximal_signature(const Signature& s);

}  // namespace equistrata
