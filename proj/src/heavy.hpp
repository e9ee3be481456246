#ifndef MCTSP_SRC_HEAVY_HPP
#define MCTSP_SRC_HEAVY_HPP

#include <optional>

#include "mctsp/core.hpp"

namespace mctsp::detail {

struct HeavyEdge {
  Edge edge;
  std::size_t objective = 0;
};

/// Edge of the cover with the largest violation w_i(e) - alpha * w_i(C),
/// measured as w_i(e) * den - w_i(C) * num. Ties go to the lower objective,
/// then to the earlier edge of cover.edges(). Empty if the cover is light.
std::optional<HeavyEdge> heaviest_edge(const CycleCover& cover, const Instance& instance,
                                       const Ratio& alpha);

}  // namespace mctsp::detail

#endif  // MCTSP_SRC_HEAVY_HPP
