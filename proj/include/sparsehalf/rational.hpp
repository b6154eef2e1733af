#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sparsehalf {

// All weight/half/threshold arithmetic in this library is exact rational.
// Floats are confined to the falsification search, which re-verifies any
// candidate violation in exact arithmetic before reporting it.
// Expression templates are off so arithmetic composes with std::min/max.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Parses "p/q" or a plain integer "p". Throws std::invalid_argument on
/// malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rat& r);

/// Nearest double, for report fields that carry a float approximation.
double to_double(const Rat& r);

}  // namespace sparsehalf
