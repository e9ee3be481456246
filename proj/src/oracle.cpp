#include "mctsp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mctsp {

namespace {

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
}

WeightVector order_weight(const std::vector<Vertex>& order, const Instance& inst) {
  WeightVector w(inst.k());
  std::vector<Weight> acc(inst.k(), 0);
  for (std::size_t t = 0; t < order.size(); ++t) {
    const auto x = order[t];
    const auto y = order[(t + 1) % order.size()];
    for (std::size_t i = 0; i < inst.k(); ++i) acc[i] += inst.weight(i, x, y);
  }
  return WeightVector(std::move(acc));
}

// Directed covers are the fixed-point-free permutations.
void each_directed_cover(std::size_t n,
                         const std::function<void(std::vector<std::vector<Vertex>>)>& visit) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool fixed_point = false;
    for (std::size_t x = 0; x < n; ++x) fixed_point |= perm[x] == static_cast<Vertex>(x);
    if (fixed_point) continue;
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> cycles;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> cycle;
      for (auto x = static_cast<Vertex>(s); !seen[static_cast<std::size_t>(x)];
           x = perm[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        cycle.push_back(x);
      }
      cycles.push_back(std::move(cycle));
    }
    visit(std::move(cycles));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Undirected covers are the 2-regular spanning edge sets. Edges are decided
// in row-major order; a vertex must have degree 2 once its row is done.
void each_undirected_cover(std::size_t n,
                           const std::function<void(std::vector<std::vector<Vertex>>)>& visit) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  std::vector<int> degree(n, 0);
  std::vector<std::vector<Vertex>> adj(n);

  auto emit = [&] {
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> cycles;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> cycle{static_cast<Vertex>(s)};
      seen[s] = 1;
      Vertex prev = -1;
      Vertex cur = static_cast<Vertex>(s);
      while (true) {
        const auto& nb = adj[static_cast<std::size_t>(cur)];
        const Vertex next = nb[0] != prev ? nb[0] : nb[1];
        if (next == static_cast<Vertex>(s)) break;
        prev = cur;
        cur = next;
        seen[static_cast<std::size_t>(cur)] = 1;
        cycle.push_back(cur);
      }
      cycles.push_back(std::move(cycle));
    }
    visit(std::move(cycles));
  };

  std::function<void(std::size_t)> step = [&](std::size_t idx) {
    if (idx == pairs.size()) {
      if (std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; })) emit();
      return;
    }
    const auto [x, y] = pairs[idx];
    const bool row_ends = idx + 1 == pairs.size() || pairs[idx + 1].first != x;
    auto xs = static_cast<std::size_t>(x);
    auto ys = static_cast<std::size_t>(y);
    if (degree[xs] < 2 && degree[ys] < 2) {
      ++degree[xs];
      ++degree[ys];
      adj[xs].push_back(y);
      adj[ys].push_back(x);
      if (!row_ends || degree[xs] == 2) step(idx + 1);
      adj[xs].pop_back();
      adj[ys].pop_back();
      --degree[xs];
      --degree[ys];
    }
    if (!row_ends || degree[xs] == 2) step(idx + 1);
  };
  if (!pairs.empty()) step(0);
}

void each_cover(Direction direction, std::size_t n,
                const std::function<void(std::vector<std::vector<Vertex>>)>& visit) {
  if (direction == Direction::directed) {
    each_directed_cover(n, visit);
  } else {
    each_undirected_cover(n, visit);
  }
}

std::size_t cover_cap(Direction d, const OracleCaps& caps) {
  return d == Direction::directed ? caps.cover_directed_max_n : caps.cover_undirected_max_n;
}

}  // namespace

ParetoSet<HamiltonianCycle> tour_pareto_exact(const Instance& instance, const OracleCaps& caps) {
  const auto n = instance.n();
  require_cap(n, instance.directed() ? caps.tour_directed_max_n : caps.tour_undirected_max_n,
              "tour_pareto_exact");
  ParetoSet<HamiltonianCycle> out(instance.k());
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (!instance.directed() && order[1] > order.back()) continue;
    auto w = order_weight(order, instance);
    if (out.admits(w)) out.insert(HamiltonianCycle(instance.direction(), order), std::move(w));
  } while (std::next_permutation(order.begin() + 1, order.end()));
  out.sort();
  return out;
}

ParetoSet<CycleCover> cover_pareto_exact(const Instance& instance, const OracleCaps& caps) {
  require_cap(instance.n(), cover_cap(instance.direction(), caps), "cover_pareto_exact");
  ParetoSet<CycleCover> out(instance.k());
  each_cover(instance.direction(), instance.n(), [&](std::vector<std::vector<Vertex>> cycles) {
    WeightVector w(instance.k());
    for (const auto& c : cycles) w += order_weight(c, instance);
    if (out.admits(w)) {
      out.insert(CycleCover(instance.direction(), instance.n(), std::move(cycles)), std::move(w));
    }
  });
  out.sort();
  return out;
}

std::size_t count_cycle_covers(Direction direction, std::size_t n, const OracleCaps& caps) {
  require_cap(n, cover_cap(direction, caps), "count_cycle_covers");
  std::size_t count = 0;
  each_cover(direction, n, [&](const std::vector<std::vector<Vertex>>&) { ++count; });
  return count;
}

std::string instance_digest(const Instance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t value) {
    for (int b = 0; b < 8; ++b) {
      h ^= (value >> (8 * b)) & 0xFFU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(instance.directed() ? 1 : 2);
  mix(instance.n());
  mix(instance.k());
  for (const auto& m : instance.matrices()) {
    for (auto w : m.data()) mix(static_cast<std::uint64_t>(w));
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int d = 15; d >= 0; --d) {
    out[static_cast<std::size_t>(d)] = hex[h & 0xFU];
    h >>= 4;
  }
  return out;
}

OracleReport verify_coverage(const Instance& instance, const ParetoSet<HamiltonianCycle>& algorithm,
                             const ParetoSet<HamiltonianCycle>& oracle, const Ratio& ratio) {
  OracleReport report;
  report.digest = instance_digest(instance);
  report.oracle_vectors = oracle.vectors();
  report.algorithm_vectors = algorithm.vectors();
  report.ratio = ratio;

  auto sorted = oracle.entries();
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.weight < b.weight; });
  for (const auto& ref : sorted) {
    const bool hit = std::any_of(algorithm.begin(), algorithm.end(), [&](const auto& e) {
      return at_least_fraction(e.weight, ref.weight, ratio);
    });
    if (hit) continue;
    report.covered = false;
    report.witness = ref.solution;
    report.witness_weight = ref.weight;
    for (std::size_t i = 0; i < ref.weight.size() && !report.failing_objective; ++i) {
      const bool reached = std::any_of(algorithm.begin(), algorithm.end(), [&](const auto& e) {
        return at_least_fraction(e.weight[i], ref.weight[i], ratio);
      });
      if (!reached) report.failing_objective = i;
    }
    if (!report.failing_objective && !report.algorithm_vectors.empty()) {
      const auto& first = report.algorithm_vectors.front();
      for (std::size_t i = 0; i < first.size(); ++i) {
        if (!at_least_fraction(first[i], ref.weight[i], ratio)) {
          report.failing_objective = i;
          break;
        }
      }
    }
    if (!report.failing_objective) report.failing_objective = 0;
    break;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Tightness search

namespace {

class TightnessSearch {
 public:
  TightnessSearch(Direction direction, std::size_t k, const TightnessBudget& budget)
      : direction_(direction), k_(k), budget_(budget),
        unit_edges_(direction == Direction::directed ? 2 : 3),
        threshold_(threshold(direction, k)) {
    const auto base = static_cast<std::size_t>(budget.max_weight) + 1;
    std::size_t types = 1;
    for (std::size_t d = 0; d < unit_edges_ * k_; ++d) types *= base;
    for (std::size_t t = 0; t < types; ++t) {
      std::vector<std::vector<Weight>> unit(unit_edges_, std::vector<Weight>(k_));
      auto rest = t;
      for (auto& edge : unit) {
        for (auto& w : edge) {
          w = static_cast<Weight>(rest % base);
          rest /= base;
        }
      }
      types_.push_back(std::move(unit));
    }
  }

  TightnessWitness run() {
    for (std::size_t m = 1; m <= budget_.max_units && !stop_; ++m) {
      picked_.clear();
      enumerate(m, 0);
    }
    if (best_units_) {
      result_.instance = build_instance(*best_units_);
      result_.cover = build_cover(best_units_->size());
    }
    return result_;
  }

 private:
  static Ratio threshold(Direction d, std::size_t k) {
    const auto kk = static_cast<std::int64_t>(k);
    if (d == Direction::directed) return k == 1 ? Ratio(1, 2) : Ratio(1, kk + 1);
    return k == 1 ? Ratio(2, 3) : Ratio(1, kk);
  }

  void enumerate(std::size_t m, std::size_t from) {
    if (stop_) return;
    if (picked_.size() == m) {
      examine();
      return;
    }
    for (std::size_t t = from; t < types_.size() && !stop_; ++t) {
      picked_.push_back(t);
      enumerate(m, t);
      picked_.pop_back();
    }
  }

  void examine() {
    if (budget_.max_examined && result_.examined >= budget_.max_examined) {
      stop_ = true;
      return;
    }
    ++result_.examined;
    std::vector<Weight> total(k_, 0);
    for (auto t : picked_) {
      for (const auto& edge : types_[t]) {
        for (std::size_t i = 0; i < k_; ++i) total[i] += edge[i];
      }
    }
    for (auto w : total) {
      if (w == 0) return;
    }
    for (auto t : picked_) {
      for (const auto& edge : types_[t]) {
        for (std::size_t i = 0; i < k_; ++i) {
          if (Ratio(edge[i]) > threshold_ * total[i]) return;
        }
      }
    }

    // Best decomposition; stop early once it cannot beat the incumbent.
    const auto m = picked_.size();
    std::vector<std::size_t> choice(m, 0);
    Ratio cover_best(0);
    while (true) {
      std::vector<Weight> kept(k_, 0);
      for (std::size_t u = 0; u < m; ++u) {
        const auto& unit = types_[picked_[u]];
        for (std::size_t j = 0; j < unit_edges_; ++j) {
          const bool keep = direction_ == Direction::directed ? j == choice[u] : j != choice[u];
          if (!keep) continue;
          for (std::size_t i = 0; i < k_; ++i) kept[i] += unit[j][i];
        }
      }
      Ratio worst(1);
      for (std::size_t i = 0; i < k_; ++i) worst = std::min(worst, Ratio(kept[i], total[i]));
      cover_best = std::max(cover_best, worst);
      if (cover_best >= result_.best_ratio) return;
      std::size_t pos = 0;
      while (pos < m && ++choice[pos] == unit_edges_) choice[pos++] = 0;
      if (pos == m) break;
    }
    result_.best_ratio = cover_best;
    best_units_ = picked_;
    if (cover_best <= threshold_) {
      result_.reached_bound = true;
      stop_ = true;
    }
  }

  Instance build_instance(const std::vector<std::size_t>& units) const {
    const auto n = units.size() * unit_edges_;
    std::vector<Matrix> weights(k_, Matrix(n));
    for (std::size_t u = 0; u < units.size(); ++u) {
      const auto& unit = types_[units[u]];
      const auto base = static_cast<Vertex>(u * unit_edges_);
      for (std::size_t j = 0; j < unit_edges_; ++j) {
        const Vertex x = base + static_cast<Vertex>(j);
        const Vertex y = base + static_cast<Vertex>((j + 1) % unit_edges_);
        for (std::size_t i = 0; i < k_; ++i) {
          weights[i].at(x, y) = unit[j][i];
          if (direction_ == Direction::undirected) weights[i].at(y, x) = unit[j][i];
        }
      }
    }
    return Instance(direction_, n, std::move(weights));
  }

  CycleCover build_cover(std::size_t m) const {
    std::vector<std::vector<Vertex>> cycles;
    for (std::size_t u = 0; u < m; ++u) {
      std::vector<Vertex> c;
      for (std::size_t j = 0; j < unit_edges_; ++j) c.push_back(static_cast<Vertex>(u * unit_edges_ + j));
      cycles.push_back(std::move(c));
    }
    return CycleCover(direction_, m * unit_edges_, std::move(cycles));
  }

  Direction direction_;
  std::size_t k_;
  TightnessBudget budget_;
  std::size_t unit_edges_;
  Ratio threshold_;
  std::vector<std::vector<std::vector<Weight>>> types_;
  std::vector<std::size_t> picked_;
  std::optional<std::vector<std::size_t>> best_units_;
  TightnessWitness result_;
  bool stop_ = false;
};

}  // namespace

TightnessWitness search_tightness_witness(Direction direction, std::size_t k,
                                          const TightnessBudget& budget) {
  if (k == 0) throw DimensionError("search_tightness_witness: k must be positive");
  if (budget.max_units == 0 || budget.max_weight < 1) {
    throw ContractError("search_tightness_witness: empty search budget");
  }
  return TightnessSearch(direction, k, budget).run();
}

}  // namespace mctsp
