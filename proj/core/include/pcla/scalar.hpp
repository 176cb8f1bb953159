#pragma once

#include <gmpxx.h>

#include <string>

#include "pcla/errors.hpp"

namespace pcla {

/// Exact rational coefficient: arbitrary-precision numerator/denominator,
/// kept in canonical reduced form with a positive denominator.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline Scalar make_scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

inline bool is_integral(const Scalar& s) { return s.get_den() == 1; }

/// "3", "-1", "2/3" -- the canonical form used in printed output.
inline std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace pcla
