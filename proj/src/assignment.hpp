// Maximum-weight perfect assignment (Hungarian method, O(n^3)).

#ifndef MCTSP_SRC_ASSIGNMENT_HPP
#define MCTSP_SRC_ASSIGNMENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace mctsp::detail {

/// profit is row-major n x n; entries equal to std::nullopt are forbidden.
/// Returns column assigned to each row, or empty if no feasible assignment.
std::vector<int> max_weight_assignment(
    const std::vector<std::optional<std::int64_t>>& profit, int n);

}  // namespace mctsp::detail

#endif  // MCTSP_SRC_ASSIGNMENT_HPP
