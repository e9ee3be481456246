/**
 * @file maxtsp.hpp
 * @brief Approximation algorithms for multi-criteria Max-TSP.
 *
 * atsp_alg() returns a (1/(k+1) - eps)-approximate Pareto curve of tours on
 * directed instances, stsp_alg() a (1/k - eps)-approximate one on undirected
 * instances (k >= 2). Both start from the Pareto curve of cycle covers,
 * decompose covers whose edges are all light, and recurse on k-1 objectives
 * around a heavy edge otherwise.
 */

#ifndef MCTSP_MAXTSP_HPP
#define MCTSP_MAXTSP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mctsp/core.hpp"
#include "mctsp/cyclecover.hpp"

namespace mctsp {

struct AlgoConfig {
  Ratio epsilon{1, 10};
  std::uint64_t rng_seed = 0;
  /// Use rand_lightweight() instead of lightweight() for light covers.
  bool randomized_decomposition = false;
  std::size_t max_random_attempts = 0;
  CoverCaps caps{};
};

/// Ratio the algorithm guarantees: 1/(k+1) - eps directed, 1/k - eps
/// undirected; 1/2 and 2/3 for the k = 1 base cases. Never negative.
Ratio approximation_ratio(Direction direction, std::size_t k, const Ratio& epsilon);

// ---------------------------------------------------------------------------
// Patching and single-objective base cases

/// Joins paths end-to-start in ascending order of their smallest vertex and
/// closes the tour. Throws ContractError unless the paths partition V.
HamiltonianCycle patch_paths(std::vector<std::vector<Vertex>> paths, Direction direction,
                             std::size_t n);
HamiltonianCycle patch_paths(const PathCollection& paths);

/// Max-weight cycle cover minus the lightest edge of each cycle, patched.
/// At least half the optimum.
HamiltonianCycle mono_maxatsp_half(const Instance& instance);

/// Undirected analogue; at least 2/3 of the optimum.
HamiltonianCycle mono_maxstsp_twothirds_style(const Instance& instance);

// ---------------------------------------------------------------------------
// Anchor patterns around a heavy arc (u,v)

/// Arcs (a,u), (u,b), (c,v), (v,d) with equalities among vertices allowed.
struct PabcdPattern {
  Vertex u = 0, v = 1;
  Vertex a = 0, b = 0, c = 0, d = 0;

  /// Deduplicated arc set.
  [[nodiscard]] std::vector<Edge> arcs() const;
};

/// The arcs form one or two vertex-disjoint simple directed paths.
bool is_legal_pabcd(const PabcdPattern& p);

/// The arcs form a single directed cycle through all n vertices.
bool pattern_is_full_tour(const PabcdPattern& p, std::size_t n);

/// Paths of a legal pattern as vertex sequences, ordered by first vertex.
std::vector<std::vector<Vertex>> pattern_paths(const PabcdPattern& p);

/**
 * @brief How a contracted graph maps back to the original one.
 *
 * Each pattern path s -> ... -> t becomes one vertex with the incoming arcs
 * of s and the outgoing arcs of t. Unaffected vertices keep their relative
 * order and come first; merged vertices follow in pattern_paths() order.
 */
struct ContractionMap {
  std::size_t original_n = 0;
  Vertex u = 0, v = 0;
  std::vector<std::vector<Vertex>> merged;
  /// Per contracted vertex: original vertex, or -1 when merged.
  std::vector<Vertex> original_of;
  /// Per contracted vertex: index into `merged`, or -1.
  std::vector<int> merged_of;

  [[nodiscard]] std::size_t contracted_n() const { return original_of.size(); }
};

struct Contraction {
  ContractionMap map;
  /// Empty when fewer than two vertices remain.
  std::optional<Instance> instance;
};

Contraction contract_pabcd(const Instance& instance, const PabcdPattern& p);

enum class ExpandMode { with_pattern, with_edge_uv };

/// Expands a tour of the contracted graph, given as its cyclic vertex order.
/// with_pattern splices every merged path back; with_edge_uv splices the
/// paths with u and v removed and inserts u -> v right after the first
/// vertex of the path that contained u.
HamiltonianCycle expand_tour(std::span<const Vertex> contracted_order, const ContractionMap& map,
                             ExpandMode mode);

// ---------------------------------------------------------------------------
// Multi-criteria algorithms

/// Directed, k >= 1. Entries sorted by weight vector.
ParetoSet<HamiltonianCycle> atsp_alg(const Instance& instance, const AlgoConfig& cfg);

/// Undirected, k >= 2. Entries sorted by weight vector.
ParetoSet<HamiltonianCycle> stsp_alg(const Instance& instance, const AlgoConfig& cfg);

/// atsp_alg / stsp_alg by direction; undirected k = 1 uses the mono case.
ParetoSet<HamiltonianCycle> solve(const Instance& instance, const AlgoConfig& cfg);

/// Union of m runs with seeds base_seed, base_seed+1, ..., Pareto-pruned.
ParetoSet<HamiltonianCycle> amplify(
    const std::function<ParetoSet<HamiltonianCycle>(std::uint64_t seed)>& run, std::size_t m,
    std::uint64_t base_seed);

}  // namespace mctsp

#endif  // MCTSP_MAXTSP_HPP
