/**
 * @file rational.hpp
 * @brief Exact rational numbers used for every ratio and threshold.
 */

#ifndef MCTSP_RATIONAL_HPP
#define MCTSP_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace mctsp {

using Ratio = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Ratio& r);

/// Accepts "p/q", an integer, or a finite decimal such as "0.125".
/// Throws std::invalid_argument on anything else.
Ratio parse_ratio(std::string_view text);

}  // namespace mctsp

#endif  // MCTSP_RATIONAL_HPP
