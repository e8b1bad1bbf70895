#ifndef CCONES_TEST_UTIL_HPP
#define CCONES_TEST_UTIL_HPP

#include <initializer_list>
#include <string>

#include "ccones/numeric.hpp"
#include "ccones/polar.hpp"

namespace ccones::testing {

inline Rational Q(const char* s) { return parse_rational(s); }

inline VecQ V(std::initializer_list<const char*> xs) {
  VecQ v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline MatQ M(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<VecQ> r;
  for (const auto& row : rows) r.push_back(V(row));
  return MatQ::from_rows(r, r.empty() ? 0 : r.front().size());
}

// Bool: the two-point probabilistic coherence space.
inline Generators bool_p() { return {V({"0", "1"}), V({"1", "0"})}; }
inline Generators bool_q() { return {V({"1", "1"})}; }

}  // namespace ccones::testing

#endif  // CCONES_TEST_UTIL_HPP
