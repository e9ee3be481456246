/**
 * @file core.hpp
 * @brief Instance model, weight vectors, cycle covers, path collections,
 *        tours and Pareto containers.
 *
 * All weights are nonnegative integers. Every comparison against a
 * fraction of a weight is done in exact integer arithmetic.
 */

#ifndef MCTSP_CORE_HPP
#define MCTSP_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mctsp/error.hpp"
#include "mctsp/rational.hpp"

namespace mctsp {

using Weight = std::int64_t;
using Vertex = int;

enum class Direction { directed, undirected };

std::string_view to_string(Direction d);

// ---------------------------------------------------------------------------
// WeightVector
// ---------------------------------------------------------------------------

class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t k) : components_(k, 0) {}
  WeightVector(std::initializer_list<Weight> values);
  explicit WeightVector(std::vector<Weight> values);

  [[nodiscard]] std::size_t size() const { return components_.size(); }
  [[nodiscard]] Weight operator[](std::size_t i) const { return components_[i]; }
  [[nodiscard]] const std::vector<Weight>& components() const { return components_; }
  [[nodiscard]] auto begin() const { return components_.begin(); }
  [[nodiscard]] auto end() const { return components_.end(); }

  WeightVector& operator+=(const WeightVector& other);
  [[nodiscard]] WeightVector scaled(Weight factor) const;
  /// Copy with component `i` removed.
  [[nodiscard]] WeightVector without(std::size_t i) const;

  friend WeightVector operator+(WeightVector a, const WeightVector& b) {
    a += b;
    return a;
  }
  /// Lexicographic; used only for canonical ordering of outputs.
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Weight> components_;
};

std::string to_string(const WeightVector& w);

/// a >= b componentwise and a > b in at least one component.
bool dominates(const WeightVector& a, const WeightVector& b);

/// part >= alpha * whole componentwise, exact.
bool at_least_fraction(const WeightVector& part, const WeightVector& whole,
                       const Ratio& alpha);

/// part_i / whole_i compared exactly against alpha for a single component.
bool at_least_fraction(Weight part, Weight whole, const Ratio& alpha);

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

/// Dense n x n matrix of one objective. Row = tail, column = head.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  Matrix(std::size_t n, std::vector<Weight> data);

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] Weight at(Vertex u, Vertex v) const {
    return data_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }
  Weight& at(Vertex u, Vertex v) {
    return data_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }
  [[nodiscard]] const std::vector<Weight>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Weight> data_;
};

/**
 * @brief Complete graph with k nonnegative integer objectives.
 *
 * Diagonal entries are ignored and stored as zero. Undirected instances
 * must be symmetric in every objective.
 */
class Instance {
 public:
  Instance(Direction direction, std::size_t n, std::vector<Matrix> weights);

  [[nodiscard]] Direction direction() const { return direction_; }
  [[nodiscard]] bool directed() const { return direction_ == Direction::directed; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t k() const { return weights_.size(); }
  [[nodiscard]] const Matrix& matrix(std::size_t i) const { return weights_[i]; }
  [[nodiscard]] const std::vector<Matrix>& matrices() const { return weights_; }

  [[nodiscard]] Weight weight(std::size_t i, Vertex u, Vertex v) const {
    return weights_[i].at(u, v);
  }
  [[nodiscard]] WeightVector edge_weight(Vertex u, Vertex v) const;

  /// Same graph with objective `i` deleted.
  [[nodiscard]] Instance without_objective(std::size_t i) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Direction direction_;
  std::size_t n_;
  std::vector<Matrix> weights_;
};

/// Smallest vertex count admitting a cycle cover.
constexpr std::size_t min_vertices(Direction d) {
  return d == Direction::directed ? 2 : 3;
}

// ---------------------------------------------------------------------------
// Edges, covers, paths, tours
// ---------------------------------------------------------------------------

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Orientation-free key of an undirected edge (smaller endpoint first).
inline Edge undirected_key(Edge e) {
  return e.from <= e.to ? e : Edge{e.to, e.from};
}

WeightVector total_weight(std::span<const Edge> edges, const Instance& instance);

/**
 * @brief Vertex-disjoint cycles covering all vertices.
 *
 * Directed cycles have length >= 2, undirected ones length >= 3. The edges
 * of cycle (v0, v1, ..., vl-1) are (v0,v1), ..., (vl-1,v0) in that order.
 */
class CycleCover {
 public:
  CycleCover(Direction direction, std::size_t n,
             std::vector<std::vector<Vertex>> cycles);

  [[nodiscard]] Direction direction() const { return direction_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] const std::vector<std::vector<Vertex>>& cycles() const { return cycles_; }

  [[nodiscard]] std::vector<Edge> cycle_edges(std::size_t c) const;
  /// All edges, cycle by cycle.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] WeightVector weight(const Instance& instance) const;

  /// Rotation (and, undirected, reflection) normalised form for comparison.
  [[nodiscard]] CycleCover canonical() const;

  friend bool operator==(const CycleCover&, const CycleCover&) = default;

 private:
  Direction direction_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> cycles_;
};

/**
 * @brief Edge subset whose edges form vertex-disjoint simple paths.
 *
 * Isolated vertices count as zero-length paths.
 */
class PathCollection {
 public:
  PathCollection(Direction direction, std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] Direction direction() const { return direction_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] WeightVector weight(const Instance& instance) const;

  /// Vertex sequences of all paths, isolated vertices included, ordered by
  /// smallest member. Directed paths run along their arcs; undirected ones
  /// start at their smaller endpoint.
  [[nodiscard]] std::vector<std::vector<Vertex>> paths() const;

  [[nodiscard]] bool is_subset_of(const CycleCover& cover) const;

 private:
  Direction direction_;
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Cyclic vertex order visiting each vertex once.
class HamiltonianCycle {
 public:
  HamiltonianCycle(Direction direction, std::vector<Vertex> order);

  [[nodiscard]] Direction direction() const { return direction_; }
  [[nodiscard]] std::size_t n() const { return order_.size(); }
  [[nodiscard]] const std::vector<Vertex>& order() const { return order_; }
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] WeightVector weight(const Instance& instance) const;
  [[nodiscard]] bool contains(Edge e) const;

  /// Rotated to start at vertex 0; undirected tours also reflected so the
  /// second vertex is smaller than the last.
  [[nodiscard]] HamiltonianCycle canonical() const;

  friend bool operator==(const HamiltonianCycle&, const HamiltonianCycle&) = default;

 private:
  Direction direction_;
  std::vector<Vertex> order_;
};

// ---------------------------------------------------------------------------
// ParetoSet
// ---------------------------------------------------------------------------

/**
 * @brief Nondominated (solution, weight) pairs.
 *
 * Inserting a vector that is dominated by, or equal to, an existing entry is
 * a no-op; inserting a vector that dominates entries removes them.
 */
template <typename Solution>
class ParetoSet {
 public:
  struct Entry {
    Solution solution;
    WeightVector weight;
  };

  explicit ParetoSet(std::size_t dimension) : dimension_(dimension) {}

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }

  /// False if `weight` is equal to or dominated by an entry.
  [[nodiscard]] bool admits(const WeightVector& weight) const {
    if (weight.size() != dimension_) {
      throw DimensionError("pareto_insert: vector of dimension " +
                           std::to_string(weight.size()) + " into set of dimension " +
                           std::to_string(dimension_));
    }
    for (const auto& e : entries_) {
      if (e.weight == weight || dominates(e.weight, weight)) return false;
    }
    return true;
  }

  /// Returns true if the solution was kept.
  bool insert(Solution solution, WeightVector weight) {
    if (!admits(weight)) return false;
    std::erase_if(entries_, [&](const Entry& e) { return dominates(weight, e.weight); });
    entries_.push_back(Entry{std::move(solution), std::move(weight)});
    return true;
  }

  void merge(const ParetoSet& other) {
    for (const auto& e : other.entries_) insert(e.solution, e.weight);
  }

  /// Weight vectors in lexicographic order.
  [[nodiscard]] std::vector<WeightVector> vectors() const {
    std::vector<WeightVector> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.weight);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Entries reordered lexicographically by weight vector.
  void sort() {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.weight < b.weight; });
  }

 private:
  std::size_t dimension_;
  std::vector<Entry> entries_;
};

/// Every reference vector z has a candidate y with y >= alpha * z.
bool alpha_covers(const Ratio& alpha, std::span<const WeightVector> candidate,
                  std::span<const WeightVector> reference);

template <typename A, typename B>
bool alpha_covers(const Ratio& alpha, const ParetoSet<A>& candidate,
                  const ParetoSet<B>& reference) {
  if (candidate.dimension() != reference.dimension()) {
    throw DimensionError("alpha_covers: dimension mismatch");
  }
  const auto c = candidate.vectors();
  const auto r = reference.vectors();
  return alpha_covers(alpha, c, r);
}

}  // namespace mctsp

#endif  // MCTSP_CORE_HPP
