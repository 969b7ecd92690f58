#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace tpn {

// Token ages and delays are exact rationals; all guard comparisons are exact.
using Rat = boost::rational<std::int64_t>;

// Floor of a nonnegative rational.
inline std::int64_t floor_of(const Rat& r) {
  return r.numerator() / r.denominator();
}

inline Rat frac_of(const Rat& r) { return r - Rat(floor_of(r)); }

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tpn
