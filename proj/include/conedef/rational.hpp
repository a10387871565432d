#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace conedef {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number; always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

}  // namespace conedef
