#include "mctsp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

namespace mctsp {

namespace {

using Wide = __int128;

WeightVector unit_weight(const Unit& u, std::size_t k) {
  WeightVector w(k);
  for (const auto& e : u.edges) w += e.weight;
  return w;
}

bool unit_is_light(const Unit& u, const NormalizedCover& nc) {
  const auto w = unit_weight(u, nc.total.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (nc.scale[i] * w[i] > Ratio(1, 2)) return false;
  }
  return true;
}

void require_light(const CycleCover& cover, const Instance& instance, const Ratio& alpha,
                   const char* who) {
  const auto total = cover.weight(instance);
  for (const auto& e : cover.edges()) {
    const auto w = instance.edge_weight(e.from, e.to);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (static_cast<Wide>(w[i]) * alpha.denominator() >
          static_cast<Wide>(total[i]) * alpha.numerator()) {
        throw ContractError(std::string(who) + ": edge (" + std::to_string(e.from) + "," +
                            std::to_string(e.to) + ") has weight " + to_string(w) +
                            " above " + to_string(alpha) + " of cover weight " +
                            to_string(total) + " in objective " + std::to_string(i + 1));
      }
    }
  }
}

void require_direction(const CycleCover& cover, const Instance& instance) {
  if (cover.direction() != instance.direction() || cover.n() != instance.n()) {
    throw ContractError("cover does not belong to the instance");
  }
}

/// p/q with q > 0; compared exactly.
struct Fraction {
  Wide num = 0;
  Wide den = 1;
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
};

/**
 * Depth-first search over per-unit choices maximising
 * min over active objectives of kept_i / total_i.
 */
class MaxMinSearch {
 public:
  MaxMinSearch(const NormalizedCover& nc, std::vector<std::size_t> order, const Ratio& alpha,
               std::size_t budget)
      : nc_(nc), order_(std::move(order)), alpha_(alpha), budget_(budget) {
    const auto k = nc.total.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (nc.total[i] > 0) active_.push_back(i);
    }
    const auto r = nc.unit_size();
    const auto m = order_.size();
    kept_.resize(m);
    for (std::size_t u = 0; u < m; ++u) {
      const auto& unit = nc.units[order_[u]];
      const auto uw = unit_weight(unit, k);
      for (std::size_t o = 0; o < r; ++o) {
        std::vector<Weight> kept(active_.size());
        for (std::size_t a = 0; a < active_.size(); ++a) {
          const auto i = active_[a];
          kept[a] = nc.direction == Direction::directed ? unit.edges[o].weight[i]
                                                        : uw[i] - unit.edges[o].weight[i];
        }
        kept_[u].push_back(std::move(kept));
      }
    }
    suffix_.assign(m + 1, std::vector<Weight>(active_.size(), 0));
    for (std::size_t u = m; u-- > 0;) {
      for (std::size_t a = 0; a < active_.size(); ++a) {
        Weight best = 0;
        for (const auto& opt : kept_[u]) best = std::max(best, opt[a]);
        suffix_[u][a] = suffix_[u + 1][a] + best;
      }
    }
  }

  /// Choice per sorted position.
  std::vector<int> run() {
    choice_.assign(order_.size(), 0);
    if (active_.empty()) return choice_;
    current_.assign(active_.size(), 0);
    dfs(0);
    return best_choice_;
  }

 private:
  Fraction value(const std::vector<Weight>& kept, const std::vector<Weight>* extra) const {
    Fraction v;
    bool first = true;
    for (std::size_t a = 0; a < active_.size(); ++a) {
      const Fraction f{kept[a] + (extra ? (*extra)[a] : 0), nc_.total[active_[a]]};
      if (first || f < v) v = f;
      first = false;
    }
    return v;
  }

  bool meets_alpha(const Fraction& f) const {
    return f.num * alpha_.denominator() >= f.den * alpha_.numerator();
  }

  void dfs(std::size_t u) {
    if (stop_) return;
    ++nodes_;
    if (nodes_ > budget_ && best_ && meets_alpha(*best_)) {
      stop_ = true;
      return;
    }
    if (u == order_.size()) {
      const auto v = value(current_, nullptr);
      if (!best_ || *best_ < v) {
        best_ = v;
        best_choice_ = choice_;
      }
      return;
    }
    if (best_ && value(current_, &suffix_[u]) <= *best_) return;
    for (std::size_t o = 0; o < kept_[u].size(); ++o) {
      for (std::size_t a = 0; a < active_.size(); ++a) current_[a] += kept_[u][o][a];
      choice_[u] = static_cast<int>(o);
      dfs(u + 1);
      for (std::size_t a = 0; a < active_.size(); ++a) current_[a] -= kept_[u][o][a];
      if (stop_) return;
    }
  }

  const NormalizedCover& nc_;
  std::vector<std::size_t> order_;
  Ratio alpha_;
  std::size_t budget_;
  std::vector<std::size_t> active_;
  std::vector<std::vector<std::vector<Weight>>> kept_;
  std::vector<std::vector<Weight>> suffix_;
  std::vector<Weight> current_;
  std::vector<int> choice_;
  std::vector<int> best_choice_;
  std::optional<Fraction> best_;
  std::size_t nodes_ = 0;
  bool stop_ = false;
};

}  // namespace

Ratio guaranteed_alpha(Direction direction, std::size_t k) {
  if (k == 0) throw DimensionError("k must be positive");
  const auto kk = static_cast<std::int64_t>(k);
  if (direction == Direction::directed) return Ratio(1, kk + 1);
  return k == 1 ? Ratio(2, 3) : Ratio(1, kk);
}

bool is_light(const CycleCover& cover, const Instance& instance, const Ratio& alpha) {
  try {
    require_light(cover, instance, alpha, "is_light");
  } catch (const ContractError&) {
    return false;
  }
  return true;
}

NormalizedCover normalize(const CycleCover& cover, const Instance& instance) {
  require_direction(cover, instance);
  NormalizedCover nc;
  nc.direction = cover.direction();
  nc.n = cover.n();
  nc.total = cover.weight(instance);
  nc.scale.assign(instance.k(), Ratio(1));
  const auto r = nc.unit_size();
  for (std::size_t c = 0; c < cover.cycles().size(); ++c) {
    const auto edges = cover.cycle_edges(c);
    for (std::size_t start = 0; start < edges.size(); start += r) {
      Unit unit;
      for (std::size_t p = start; p < start + r; ++p) {
        if (p < edges.size()) {
          unit.edges.push_back(
              SyntheticEdge{instance.edge_weight(edges[p].from, edges[p].to), {edges[p]}});
        } else {
          unit.edges.push_back(SyntheticEdge{WeightVector(instance.k()), {}});
        }
      }
      nc.units.push_back(std::move(unit));
    }
  }
  return nc;
}

NormalizedCover rescale(NormalizedCover nc, const Ratio& alpha) {
  if (alpha <= 0 || alpha > 1) throw ContractError("alpha must lie in (0,1]");
  for (std::size_t i = 0; i < nc.total.size(); ++i) {
    nc.scale[i] = nc.total[i] == 0 ? Ratio(0) : Ratio(1) / (alpha * nc.total[i]);
  }
  return nc;
}

NormalizedCover combine_light_units(NormalizedCover nc) {
  std::vector<Unit> out;
  out.reserve(nc.units.size());
  std::optional<std::size_t> pending;
  for (auto& unit : nc.units) {
    if (!unit_is_light(unit, nc)) {
      out.push_back(std::move(unit));
      continue;
    }
    if (!pending) {
      pending = out.size();
      out.push_back(std::move(unit));
      continue;
    }
    auto& acc = out[*pending];
    for (std::size_t p = 0; p < acc.edges.size(); ++p) {
      acc.edges[p].weight += unit.edges[p].weight;
      auto& o = acc.edges[p].origins;
      o.insert(o.end(), unit.edges[p].origins.begin(), unit.edges[p].origins.end());
    }
    if (!unit_is_light(acc, nc)) pending.reset();
  }
  nc.units = std::move(out);
  return nc;
}

WeightVector decomposition_weight(const NormalizedCover& nc, std::span<const int> choice) {
  if (choice.size() != nc.units.size()) throw DimensionError("one choice per unit required");
  WeightVector w(nc.total.size());
  for (std::size_t u = 0; u < nc.units.size(); ++u) {
    const auto& edges = nc.units[u].edges;
    for (std::size_t p = 0; p < edges.size(); ++p) {
      const bool kept = nc.direction == Direction::directed
                            ? static_cast<int>(p) == choice[u]
                            : static_cast<int>(p) != choice[u];
      if (kept) w += edges[p].weight;
    }
  }
  return w;
}

PathCollection translate(const NormalizedCover& nc, std::span<const int> choice) {
  if (choice.size() != nc.units.size()) throw DimensionError("one choice per unit required");
  std::vector<Edge> kept;
  for (std::size_t u = 0; u < nc.units.size(); ++u) {
    const auto& edges = nc.units[u].edges;
    if (choice[u] < 0 || static_cast<std::size_t>(choice[u]) >= edges.size()) {
      throw ContractError("choice out of range for unit " + std::to_string(u));
    }
    for (std::size_t p = 0; p < edges.size(); ++p) {
      const bool keep = nc.direction == Direction::directed
                            ? static_cast<int>(p) == choice[u]
                            : static_cast<int>(p) != choice[u];
      if (keep) kept.insert(kept.end(), edges[p].origins.begin(), edges[p].origins.end());
    }
  }
  return PathCollection(nc.direction, nc.n, std::move(kept));
}

PathCollection lightweight(const CycleCover& cover, const Instance& instance,
                           const DecompositionConfig& cfg) {
  require_direction(cover, instance);
  if (instance.k() < 2) throw ContractError("lightweight: requires k >= 2");
  if (cfg.alpha <= 0 || cfg.alpha > 1) throw ContractError("lightweight: alpha must lie in (0,1]");
  require_light(cover, instance, cfg.alpha, "lightweight");

  const auto nc = combine_light_units(rescale(normalize(cover, instance), cfg.alpha));

  // Decreasing largest scaled component, i.e. largest unit_i / total_i.
  std::vector<std::size_t> order(nc.units.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ratio> key(nc.units.size(), Ratio(0));
  for (std::size_t u = 0; u < nc.units.size(); ++u) {
    const auto w = unit_weight(nc.units[u], nc.total.size());
    for (std::size_t i = 0; i < w.size(); ++i) key[u] = std::max(key[u], nc.scale[i] * w[i]);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[b] < key[a]; });

  MaxMinSearch search(nc, order, cfg.alpha, cfg.search_node_budget);
  const auto sorted_choice = search.run();
  std::vector<int> choice(nc.units.size(), 0);
  for (std::size_t p = 0; p < order.size(); ++p) choice[order[p]] = sorted_choice[p];
  return translate(nc, choice);
}

PathCollection random_edge_removal(const CycleCover& cover, std::mt19937_64& rng) {
  std::vector<Edge> kept;
  for (std::size_t c = 0; c < cover.cycles().size(); ++c) {
    const auto edges = cover.cycle_edges(c);
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const auto drop = pick(rng);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != drop) kept.push_back(edges[j]);
    }
  }
  return PathCollection(cover.direction(), cover.n(), std::move(kept));
}

RandomDecomposition rand_lightweight_detailed(const CycleCover& cover, const Instance& instance,
                                              const DecompositionConfig& cfg) {
  require_direction(cover, instance);
  if (instance.k() < 6) return RandomDecomposition{lightweight(cover, instance, cfg), 0, false};
  require_light(cover, instance, cfg.alpha, "rand_lightweight");

  const auto total = cover.weight(instance);
  const auto attempts = cfg.max_random_attempts ? cfg.max_random_attempts : 64 * instance.k();
  std::mt19937_64 rng(cfg.rng_seed);
  for (std::size_t a = 1; a <= attempts; ++a) {
    auto p = random_edge_removal(cover, rng);
    if (at_least_fraction(p.weight(instance), total, cfg.alpha)) {
      return RandomDecomposition{std::move(p), a, false};
    }
  }
  return RandomDecomposition{lightweight(cover, instance, cfg), attempts, true};
}

PathCollection rand_lightweight(const CycleCover& cover, const Instance& instance,
                                const DecompositionConfig& cfg) {
  return rand_lightweight_detailed(cover, instance, cfg).paths;
}

PathCollection decompose_bicriteria_undirected(const CycleCover& cover, const Instance& instance) {
  require_direction(cover, instance);
  if (instance.k() != 2) throw DimensionError("bi-criteria decomposition needs k = 2");
  if (cover.direction() != Direction::undirected) {
    throw ContractError("bi-criteria decomposition needs an undirected cover");
  }
  const auto nc = normalize(cover, instance);
  std::vector<int> drop(nc.units.size(), 0);
  for (std::size_t u = 0; u < nc.units.size(); ++u) {
    const auto& e = nc.units[u].edges;
    auto argmax = [&](std::size_t i) {
      std::size_t best = 0;
      for (std::size_t p = 1; p < e.size(); ++p) {
        if (e[p].weight[i] > e[best].weight[i]) best = p;
      }
      return best;
    };
    const auto m1 = argmax(0);
    const auto m2 = argmax(1);
    for (std::size_t p = 0; p < e.size(); ++p) {
      if (p != m1 && p != m2) {
        drop[u] = static_cast<int>(p);
        break;
      }
    }
  }
  return translate(nc, drop);
}

PathCollection decompose_k3_undirected(const CycleCover& cover, const Instance& instance) {
  require_direction(cover, instance);
  if (instance.k() != 3) throw DimensionError("k=3 decomposition needs k = 3");
  if (cover.direction() != Direction::undirected) {
    throw ContractError("k=3 decomposition needs an undirected cover");
  }
  require_light(cover, instance, Ratio(1, 3), "decompose_k3_undirected");
  const auto nc = normalize(cover, instance);

  // Per unit: the w3-maximum goes to both candidates; the other two edges
  // are split between Q and Q' keeping their w2 totals balanced.
  std::vector<int> drop_q(nc.units.size()), drop_q2(nc.units.size());
  Weight w2_q = 0, w2_q2 = 0, w1_q = 0, w1_q2 = 0;
  for (std::size_t u = 0; u < nc.units.size(); ++u) {
    const auto& e = nc.units[u].edges;
    std::size_t top3 = 0;
    for (std::size_t p = 1; p < 3; ++p) {
      if (e[p].weight[2] > e[top3].weight[2]) top3 = p;
    }
    std::size_t lo = top3 == 0 ? 1 : 0;
    std::size_t hi = top3 == 2 ? 1 : 2;
    if (e[hi].weight[1] < e[lo].weight[1]) std::swap(lo, hi);
    std::size_t into_q = lo, into_q2 = hi;
    if (w2_q < w2_q2) std::swap(into_q, into_q2);
    w2_q += e[into_q].weight[1];
    w2_q2 += e[into_q2].weight[1];
    w1_q += e[into_q].weight[0];
    w1_q2 += e[into_q2].weight[0];
    // P' u Q keeps top3 and into_q, so it drops into_q2.
    drop_q[u] = static_cast<int>(into_q2);
    drop_q2[u] = static_cast<int>(into_q);
  }
  return translate(nc, w1_q >= w1_q2 ? drop_q : drop_q2);
}

PathCollection decompose_long_cycles(const CycleCover& cover, const Instance& instance) {
  require_direction(cover, instance);
  const auto k = instance.k();
  std::vector<Edge> kept;
  for (std::size_t c = 0; c < cover.cycles().size(); ++c) {
    const auto edges = cover.cycle_edges(c);
    if (edges.size() < k + 1) {
      throw ContractError("decompose_long_cycles: cycle of length " +
                          std::to_string(edges.size()) + " is shorter than k+1 = " +
                          std::to_string(k + 1));
    }
    std::vector<char> marked(edges.size(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < edges.size(); ++j) {
        if (instance.weight(i, edges[j].from, edges[j].to) >
            instance.weight(i, edges[best].from, edges[best].to)) {
          best = j;
        }
      }
      marked[best] = 1;
    }
    const auto drop = static_cast<std::size_t>(
        std::find(marked.begin(), marked.end(), 0) - marked.begin());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != drop) kept.push_back(edges[j]);
    }
  }
  return PathCollection(cover.direction(), cover.n(), std::move(kept));
}

double hoeffding_pk(int k) {
  if (k < 2) throw ContractError("hoeffding_pk: k must be >= 2");
  const double t = 2.0 * k / 3.0 - 1.0;
  return std::exp(-2.0 * t * t / k);
}

}  // namespace mctsp
