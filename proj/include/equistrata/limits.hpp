#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equistrata {

// Hard ceiling on group orders; element sets are fixed-width bitsets.
inline constexpr std::size_t kMaxGroupOrder = 512;

// Search budgets. Exceeding any of them raises BudgetExceeded, never a
// silently truncated result.
struct Limits {
  std::size_t max_order = kMaxGroupOrder;
  std::size_t max_vectors = 5'000'000;
  std::size_t max_orbit = 5'000'000;
  std::size_t max_automorphisms = 2'000'000;
  unsigned threads = 0;  // 0 = hardware concurrency

  // Defaults overridden by EQUISTRATA_MAX_ORDER / _MAX_VECTORS / _MAX_ORBIT.
  static Limits from_environment();
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group spec, signature string, word, or vector.
class ParseError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A mathematical inconsistency: non-integral genus, bad subgroup, ...
class MathError : public Error {
 public:
  using Error::Error;
};

}  // namespace equistrata
