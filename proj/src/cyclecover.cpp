#include "mctsp/cyclecover.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "assignment.hpp"

namespace mctsp {

namespace {

std::vector<std::vector<Vertex>> cycles_of_permutation(const std::vector<int>& succ) {
  std::vector<char> seen(succ.size(), 0);
  std::vector<std::vector<Vertex>> cycles;
  for (std::size_t s = 0; s < succ.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> c;
    for (auto v = static_cast<Vertex>(s); !seen[static_cast<std::size_t>(v)];
         v = succ[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      c.push_back(v);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

WeightVector cycles_weight(const std::vector<std::vector<Vertex>>& cycles,
                           const Instance& instance) {
  std::vector<Weight> w(instance.k(), 0);
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const auto u = c[j];
      const auto v = c[(j + 1) % c.size()];
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += instance.weight(i, u, v);
    }
  }
  return WeightVector(std::move(w));
}

CycleCover max_cover_directed(const Instance& instance, const Matrix& weights) {
  const int n = static_cast<int>(instance.n());
  std::vector<std::optional<std::int64_t>> profit(static_cast<std::size_t>(n * n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) profit[static_cast<std::size_t>(u * n + v)] = weights.at(u, v);
    }
  }
  const auto succ = detail::max_weight_assignment(profit, n);
  if (succ.empty()) throw StructuralError("no directed cycle cover exists");
  return CycleCover(Direction::directed, instance.n(), cycles_of_permutation(succ));
}

// Branch-and-bound over 2-factors. Bounds are kept doubled: every vertex
// still needing d incident edges contributes its d heaviest incident weights.
class UndirectedScalarSearch {
 public:
  UndirectedScalarSearch(std::size_t n, const Matrix& w) : n_(n), w_(w), covered_(n, 0) {
    top1_.assign(n, 0);
    top2_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v) continue;
        const auto x = w.at(static_cast<Vertex>(v), static_cast<Vertex>(u));
        if (x > top1_[v]) {
          top2_[v] = top1_[v];
          top1_[v] = x;
        } else if (x > top2_[v]) {
          top2_[v] = x;
        }
      }
    }
  }

  std::vector<std::vector<Vertex>> run() {
    next_cycle();
    return best_cycles_;
  }

 private:
  Weight bound2() const {
    Weight b = 2 * current_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!covered_[v]) b += top1_[v] + top2_[v];
    }
    if (open_.size() == 1) {
      const auto s = static_cast<std::size_t>(open_.front());
      b += top1_[s] + top2_[s];
    } else if (!open_.empty()) {
      b += top1_[static_cast<std::size_t>(open_.front())] +
           top1_[static_cast<std::size_t>(open_.back())];
    }
    return b;
  }

  bool prune() const { return best_ >= 0 && bound2() <= 2 * best_; }

  void next_cycle() {
    std::size_t s = 0;
    while (s < n_ && covered_[s]) ++s;
    if (s == n_) {
      if (current_ > best_) {
        best_ = current_;
        best_cycles_ = cycles_;
      }
      return;
    }
    covered_[s] = 1;
    open_.push_back(static_cast<Vertex>(s));
    extend();
    open_.pop_back();
    covered_[s] = 0;
  }

  void extend() {
    if (prune()) return;
    const auto last = open_.back();
    if (open_.size() >= 3 && open_[1] < last) {
      const auto closing = w_.at(last, open_.front());
      current_ += closing;
      cycles_.push_back(open_);
      auto saved = std::move(open_);
      open_.clear();
      next_cycle();
      open_ = std::move(saved);
      cycles_.pop_back();
      current_ -= closing;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (covered_[v]) continue;
      const auto x = w_.at(last, static_cast<Vertex>(v));
      covered_[v] = 1;
      open_.push_back(static_cast<Vertex>(v));
      current_ += x;
      extend();
      current_ -= x;
      open_.pop_back();
      covered_[v] = 0;
    }
  }

  std::size_t n_;
  const Matrix& w_;
  std::vector<char> covered_;
  std::vector<Weight> top1_, top2_;
  std::vector<Vertex> open_;
  std::vector<std::vector<Vertex>> cycles_;
  Weight current_ = 0;
  Weight best_ = -1;
  std::vector<std::vector<Vertex>> best_cycles_;
};

class CoverEnumerator {
 public:
  using Visit = std::function<void(const std::vector<std::vector<Vertex>>&)>;

  CoverEnumerator(Direction d, std::size_t n, const Visit& visit)
      : direction_(d), n_(n), visit_(visit), covered_(n, 0) {}

  void run() { next_cycle(); }

 private:
  void next_cycle() {
    std::size_t s = 0;
    while (s < n_ && covered_[s]) ++s;
    if (s == n_) {
      visit_(cycles_);
      return;
    }
    covered_[s] = 1;
    open_.push_back(static_cast<Vertex>(s));
    extend();
    open_.pop_back();
    covered_[s] = 0;
  }

  void extend() {
    const bool closable = direction_ == Direction::directed
                              ? open_.size() >= 2
                              : open_.size() >= 3 && open_[1] < open_.back();
    if (closable) {
      cycles_.push_back(open_);
      auto saved = std::move(open_);
      open_.clear();
      next_cycle();
      open_ = std::move(saved);
      cycles_.pop_back();
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (covered_[v]) continue;
      covered_[v] = 1;
      open_.push_back(static_cast<Vertex>(v));
      extend();
      open_.pop_back();
      covered_[v] = 0;
    }
  }

  Direction direction_;
  std::size_t n_;
  const Visit& visit_;
  std::vector<char> covered_;
  std::vector<Vertex> open_;
  std::vector<std::vector<Vertex>> cycles_;
};

ParetoSet<CycleCover> pareto_by_enumeration(const Instance& instance) {
  ParetoSet<CycleCover> out(instance.k());
  for_each_cover(instance.direction(), instance.n(),
                 [&](const std::vector<std::vector<Vertex>>& cycles) {
                   auto w = cycles_weight(cycles, instance);
                   if (out.admits(w)) {
                     out.insert(CycleCover(instance.direction(), instance.n(), cycles),
                                std::move(w));
                   }
                 });
  return out;
}

// Rows are tails assigned in order 0..n-1; state = set of used heads.
ParetoSet<CycleCover> pareto_by_bitmask_dp(const Instance& instance) {
  const std::size_t n = instance.n();
  const std::size_t k = instance.k();
  struct Node {
    std::uint32_t prev_index;
    int head;
  };
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<ParetoSet<Node>> dp;
  dp.reserve(full + 1);
  for (std::size_t s = 0; s <= full; ++s) dp.emplace_back(k);
  dp[0].insert(Node{0, -1}, WeightVector(k));

  for (std::size_t s = 0; s < full; ++s) {
    if (dp[s].empty()) continue;
    const auto row = static_cast<Vertex>(std::popcount(s));
    for (std::size_t h = 0; h < n; ++h) {
      if ((s >> h) & 1U || static_cast<Vertex>(h) == row) continue;
      const auto arc = instance.edge_weight(row, static_cast<Vertex>(h));
      auto& target = dp[s | (std::size_t{1} << h)];
      for (std::uint32_t idx = 0; idx < dp[s].size(); ++idx) {
        auto w = dp[s].entries()[idx].weight + arc;
        if (target.admits(w)) {
          target.insert(Node{idx, static_cast<int>(h)}, std::move(w));
        }
      }
    }
  }

  ParetoSet<CycleCover> out(k);
  for (const auto& entry : dp[full]) {
    std::vector<int> succ(n, -1);
    std::size_t s = full;
    const Node* node = &entry.solution;
    for (std::size_t row = n; row-- > 0;) {
      succ[row] = node->head;
      const auto prev_state = s & ~(std::size_t{1} << static_cast<std::size_t>(node->head));
      if (row > 0) node = &dp[prev_state].entries()[node->prev_index].solution;
      s = prev_state;
    }
    out.insert(CycleCover(Direction::directed, n, cycles_of_permutation(succ)), entry.weight);
  }
  return out;
}

}  // namespace

CoverBackend default_backend(Direction d) {
  return d == Direction::directed ? CoverBackend::bitmask_dp : CoverBackend::enumeration;
}

CycleCover max_cover_scalar(const Instance& instance, const Matrix& weights) {
  if (weights.n() != instance.n()) throw DimensionError("weight matrix size differs from instance");
  if (instance.n() < min_vertices(instance.direction())) {
    throw StructuralError("instance too small for a cycle cover");
  }
  if (instance.directed()) return max_cover_directed(instance, weights);
  UndirectedScalarSearch search(instance.n(), weights);
  return CycleCover(Direction::undirected, instance.n(), search.run());
}

void for_each_cover(Direction direction, std::size_t n,
                    const std::function<void(const std::vector<std::vector<Vertex>>&)>& visit) {
  CoverEnumerator(direction, n, visit).run();
}

ParetoSet<CycleCover> cover_pareto(const CoverParetoRequest& request) {
  const auto& instance = request.instance;
  if (request.epsilon < 0) throw ContractError("cover_pareto: epsilon must be >= 0");
  ParetoSet<CycleCover> out(instance.k());
  switch (request.backend) {
    case CoverBackend::bitmask_dp:
      if (!instance.directed()) {
        throw BackendError("bitmask-dp backend supports directed instances only");
      }
      if (instance.n() > request.caps.bitmask_dp_max_n) {
        throw CapacityError("bitmask-dp cover backend: n=" + std::to_string(instance.n()) +
                            " exceeds cap " + std::to_string(request.caps.bitmask_dp_max_n));
      }
      out = pareto_by_bitmask_dp(instance);
      break;
    case CoverBackend::enumeration:
      if (instance.n() > request.caps.enumeration_max_n) {
        throw CapacityError("enumeration cover backend: n=" + std::to_string(instance.n()) +
                            " exceeds cap " + std::to_string(request.caps.enumeration_max_n));
      }
      out = pareto_by_enumeration(instance);
      break;
  }
  out.sort();
  return out;
}

}  // namespace mctsp
