/**
 * @file cyclecover.hpp
 * @brief Exact maximum-weight cycle covers and exact Pareto curves of
 *        cycle covers.
 *
 * The Pareto routines return the exact curve, so the result is a
 * (1 - eps)-approximate curve for every eps >= 0. `epsilon` is carried in
 * the request so an approximation scheme can be plugged in later without
 * changing callers.
 */

#ifndef MCTSP_CYCLECOVER_HPP
#define MCTSP_CYCLECOVER_HPP

#include <cstddef>
#include <functional>

#include "mctsp/core.hpp"

namespace mctsp {

enum class CoverBackend { bitmask_dp, enumeration };

struct CoverCaps {
  std::size_t bitmask_dp_max_n = 16;
  std::size_t enumeration_max_n = 10;
};

struct CoverParetoRequest {
  const Instance& instance;
  Ratio epsilon{0};
  CoverBackend backend = CoverBackend::enumeration;
  CoverCaps caps{};
};

/// bitmask-dp for directed instances, enumeration for undirected ones.
CoverBackend default_backend(Direction d);

/**
 * @brief Maximum-weight cycle cover under one scalar objective.
 *
 * Directed: assignment problem with the diagonal forbidden. Undirected:
 * branch-and-bound over 2-factors.
 */
CycleCover max_cover_scalar(const Instance& instance, const Matrix& weights);

/// Exact Pareto curve of cycle covers, one representative per vector,
/// entries sorted lexicographically by weight vector.
ParetoSet<CycleCover> cover_pareto(const CoverParetoRequest& request);

/// Calls `visit` once per cycle cover of the complete graph on n vertices.
/// Cycles are built from the lowest uncovered vertex; undirected cycles are
/// emitted once (second vertex smaller than last).
void for_each_cover(Direction direction, std::size_t n,
                    const std::function<void(const std::vector<std::vector<Vertex>>&)>& visit);

}  // namespace mctsp

#endif  // MCTSP_CYCLECOVER_HPP
