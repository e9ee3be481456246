/**
 * @file io.hpp
 * @brief Text formats for instances and cycle covers, and the random
 *        instance generator.
 *
 * Instance file:
 *
 *     MCTSP <directed|undirected> <n> <k>
 *     k blocks of n rows with n nonnegative integers each
 *
 * Row index is the tail (first endpoint), column the head. Diagonal entries
 * must be 0 and undirected blocks symmetric. Blank lines and lines starting
 * with '#' are skipped.
 *
 * Cover file:
 *
 *     COVER <c>
 *     c rows, each the vertex sequence of one cycle
 */

#ifndef MCTSP_IO_HPP
#define MCTSP_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "mctsp/core.hpp"

namespace mctsp {

/// Largest weight accepted by the parser.
inline constexpr Weight max_file_weight = 1'000'000'000'000;

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

CycleCover parse_cover(std::string_view text, Direction direction, std::size_t n);
std::string serialize_cover(const CycleCover& cover);

/// Uniform weights in [0, max_weight], mirrored for undirected instances.
Instance generate_instance(Direction direction, std::size_t n, std::size_t k, Weight max_weight,
                           std::uint64_t seed);

/// Reads a whole file; throws ParseError at line 0 if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace mctsp

#endif  // MCTSP_IO_HPP
