/**
 * @file oracle.hpp
 * @brief Brute-force ground truth: exact Pareto curves of tours and cycle
 *        covers, coverage reports and the decomposition tightness search.
 *
 * Nothing here shares code with the cyclecover or maxtsp solvers, so the
 * two can be checked against each other.
 */

#ifndef MCTSP_ORACLE_HPP
#define MCTSP_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mctsp/core.hpp"

namespace mctsp {

struct OracleCaps {
  std::size_t tour_directed_max_n = 9;
  std::size_t tour_undirected_max_n = 10;
  std::size_t cover_directed_max_n = 8;
  std::size_t cover_undirected_max_n = 9;
};

/// All tours, Pareto-pruned, sorted by weight vector. Tours start at 0;
/// undirected ones have second vertex < last.
ParetoSet<HamiltonianCycle> tour_pareto_exact(const Instance& instance,
                                              const OracleCaps& caps = {});

/// All cycle covers, Pareto-pruned, sorted by weight vector.
ParetoSet<CycleCover> cover_pareto_exact(const Instance& instance, const OracleCaps& caps = {});

/// Number of cycle covers of the complete graph on n vertices, counted by
/// the same enumeration cover_pareto_exact() uses.
std::size_t count_cycle_covers(Direction direction, std::size_t n, const OracleCaps& caps = {});

/// 16 hex digits of FNV-1a over direction, n, k and all weights.
std::string instance_digest(const Instance& instance);

struct OracleReport {
  std::string digest;
  std::vector<WeightVector> oracle_vectors;
  std::vector<WeightVector> algorithm_vectors;
  Ratio ratio;
  bool covered = true;
  /// First oracle tour (in vector order) that no algorithm tour covers.
  std::optional<HamiltonianCycle> witness;
  std::optional<WeightVector> witness_weight;
  /// 0-based. The lowest objective no algorithm tour reaches on the witness,
  /// or the first failing objective of the first algorithm tour if every
  /// objective is reached by some tour.
  std::optional<std::size_t> failing_objective;
};

OracleReport verify_coverage(const Instance& instance, const ParetoSet<HamiltonianCycle>& algorithm,
                             const ParetoSet<HamiltonianCycle>& oracle, const Ratio& ratio);

struct TightnessBudget {
  std::size_t max_units = 4;
  Weight max_weight = 4;
  /// 0 means unlimited.
  std::size_t max_examined = 0;
};

struct TightnessWitness {
  std::optional<Instance> instance;
  std::optional<CycleCover> cover;
  /// max over decompositions of min_i w_i(P) / w_i(C), minimised over covers.
  Ratio best_ratio{1};
  std::size_t examined = 0;
  /// best_ratio reached the guaranteed threshold and the search stopped.
  bool reached_bound = false;
};

/**
 * @brief Smallest achievable decomposition ratio over light covers.
 *
 * Covers are disjoint 2-cycles (directed) or triangles (undirected) with
 * per-edge weights in {0, ..., max_weight}^k, all edges light at the
 * guaranteed threshold. Unit counts are tried in increasing order and the
 * search stops as soon as a cover meets the threshold.
 */
TightnessWitness search_tightness_witness(Direction direction, std::size_t k,
                                          const TightnessBudget& budget = {});

}  // namespace mctsp

#endif  // MCTSP_ORACLE_HPP
