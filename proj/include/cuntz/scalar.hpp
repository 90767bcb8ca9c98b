#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace cuntz {

// 64-bit integers that throw std::overflow_error instead of wrapping.
using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<64, 64, boost::multiprecision::signed_magnitude,
                                           boost::multiprecision::checked, void>>;

/// Exact rational scalar, always in lowest terms with positive denominator.
using Scalar = boost::rational<Integer>;

inline bool is_zero(const Scalar& s) { return s.numerator() == 0; }

/// "3", "-1/4".
std::string to_string(const Scalar& s);

/// Accepts "3", "-1/4".
Scalar parse_scalar(const std::string& text);

}  // namespace cuntz
