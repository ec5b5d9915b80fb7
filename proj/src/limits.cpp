#include "equistrata/limits.hpp"

#include <cstdlib>
#include <string>

namespace equistrata {

namespace {

void override_from(const char* var, std::size_t& field) {
  const char* v = std::getenv(var);
  if (v == nullptr || *v == '\0') return;
  try {
    long long n = std::stoll(v);
    if (n > 0) field = static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw Error(std::string("invalid value for ") + var + ": " + v);
  }
}

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  override_from("EQUISTRATA_MAX_ORDER", l.max_order);
  if (l.max_order > kMaxGroupOrder) l.max_order = kMaxGroupOrder;
  override_from("EQUISTRATA_MAX_VECTORS", l.max_vectors);
  override_from("EQUISTRATA_MAX_ORBIT", l.max_orbit);
  return l;
}

}  // namespace equistrata
