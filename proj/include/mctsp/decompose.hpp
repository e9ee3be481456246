/**
 * @file decompose.hpp
 * @brief Turning a cycle cover into vertex-disjoint paths that keep a fixed
 *        fraction of every objective.
 *
 * A decomposition of a cover C is a set P of its edges forming paths. For
 * a threshold alpha it succeeds when w(P) >= alpha * w(C) componentwise.
 * The general routines require every edge of C to be light, i.e.
 * w(e) <= alpha * w(C) componentwise.
 */

#ifndef MCTSP_DECOMPOSE_HPP
#define MCTSP_DECOMPOSE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mctsp/core.hpp"

namespace mctsp {

/// Edge of a normalised cover. Empty `origins` marks a zero-weight padding
/// edge; merged units carry the union of the original edges.
struct SyntheticEdge {
  WeightVector weight;
  std::vector<Edge> origins;
};

/// Abstract cycle of length 2 (directed) or 3 (undirected).
struct Unit {
  std::vector<SyntheticEdge> edges;
};

/**
 * @brief Cover rewritten into 2-cycles (directed) or triangles (undirected).
 *
 * Weights are kept unscaled. `scale[i]` maps objective i to scaled units
 * (w'_i = scale[i] * w_i); it is 1 after normalize() and set by rescale().
 */
struct NormalizedCover {
  Direction direction = Direction::directed;
  std::size_t n = 0;
  std::vector<Unit> units;
  WeightVector total;
  std::vector<Ratio> scale;

  [[nodiscard]] std::size_t unit_size() const {
    return direction == Direction::directed ? 2 : 3;
  }
};

struct DecompositionConfig {
  Ratio alpha{1, 2};
  std::uint64_t rng_seed = 0;
  /// 0 selects the default of 64 * k attempts.
  std::size_t max_random_attempts = 0;
  /// Search nodes after which lightweight() settles for the best
  /// decomposition found so far, provided it already meets alpha.
  std::size_t search_node_budget = std::size_t{1} << 22;
};

/// 1/k undirected (2/3 for k = 1), 1/(k+1) directed.
Ratio guaranteed_alpha(Direction direction, std::size_t k);

/// Every edge e of the cover satisfies w(e) <= alpha * w(C).
bool is_light(const CycleCover& cover, const Instance& instance, const Ratio& alpha);

NormalizedCover normalize(const CycleCover& cover, const Instance& instance);

/// Sets scale so that every objective with nonzero total sums to 1/alpha.
/// Objectives with zero total get scale 0 and are ignored from then on.
NormalizedCover rescale(NormalizedCover nc, const Ratio& alpha);

/// Merges units whose scaled weight is <= 1/2 in every component until at
/// most one such unit is left. Edge weights add position by position.
NormalizedCover combine_light_units(NormalizedCover nc);

/// Weight kept by a choice per unit: the index of the kept edge (directed)
/// or of the dropped edge (undirected).
WeightVector decomposition_weight(const NormalizedCover& nc, std::span<const int> choice);

/// Original edges kept by a choice per unit.
PathCollection translate(const NormalizedCover& nc, std::span<const int> choice);

/**
 * @brief Deterministic decomposition by exhaustive search.
 *
 * Scales, normalises and combines, then searches all per-unit choices for
 * one maximising min_i w'_i(P). Units are ordered by decreasing largest
 * scaled component and choices are visited as a mixed-radix counter; ties
 * keep the first choice found. Branches that cannot beat the incumbent are
 * cut, which never changes the result.
 *
 * Throws ContractError if k < 2 or an edge is heavier than alpha * w(C).
 */
PathCollection lightweight(const CycleCover& cover, const Instance& instance,
                           const DecompositionConfig& cfg);

struct RandomDecomposition {
  PathCollection paths;
  std::size_t attempts = 0;
  bool fell_back = false;
};

/// Drops one uniformly random edge from every cycle.
PathCollection random_edge_removal(const CycleCover& cover, std::mt19937_64& rng);

/**
 * @brief Randomised decomposition for k >= 6, lightweight() otherwise.
 *
 * Retries random_edge_removal() until w(P) >= alpha * w(C); after
 * max_random_attempts failures it falls back to lightweight().
 */
RandomDecomposition rand_lightweight_detailed(const CycleCover& cover, const Instance& instance,
                                              const DecompositionConfig& cfg);

PathCollection rand_lightweight(const CycleCover& cover, const Instance& instance,
                                const DecompositionConfig& cfg);

/// k = 2, undirected, no lightness requirement: w(P) >= w(C)/2. From each
/// triangle removes the lowest-index edge that is neither the w1- nor the
/// w2-maximum.
PathCollection decompose_bicriteria_undirected(const CycleCover& cover, const Instance& instance);

/// k = 3, undirected, edges at most w(C)/3: w(P) >= w(C)/3.
PathCollection decompose_k3_undirected(const CycleCover& cover, const Instance& instance);

/// Every cycle of length >= k+1: w(P) >= w(C)/2. Keeps one maximiser per
/// objective and removes the lowest-index unmarked edge of each cycle.
PathCollection decompose_long_cycles(const CycleCover& cover, const Instance& instance);

/// exp(-2 (2k/3 - 1)^2 / k), the Hoeffding tail for random triangle
/// decompositions. Diagnostic only.
double hoeffding_pk(int k);

}  // namespace mctsp

#endif  // MCTSP_DECOMPOSE_HPP
