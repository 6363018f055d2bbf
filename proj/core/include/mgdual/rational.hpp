#pragma once

#include <gmpxx.h>

#include <string>

namespace mgdual {

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace mgdual
