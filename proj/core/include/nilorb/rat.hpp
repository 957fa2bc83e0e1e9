#pragma once

#include <gmpxx.h>
#include <string>

namespace nilorb {

/// Exact rational coefficient type. GMP canonicalises on construction from
/// num/den, so values always carry a positive denominator in lowest terms.
using Rat = mpq_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

} // namespace nilorb
