#include <algorithm>
#include <string>

#include "mctsp/cyclecover.hpp"
#include "mctsp/maxtsp.hpp"

namespace mctsp {

Ratio approximation_ratio(Direction direction, std::size_t k, const Ratio& epsilon) {
  if (k == 0) throw DimensionError("k must be positive");
  Ratio r;
  if (k == 1) {
    r = direction == Direction::directed ? Ratio(1, 2) : Ratio(2, 3);
  } else {
    const auto kk = static_cast<std::int64_t>(k);
    r = (direction == Direction::directed ? Ratio(1, kk + 1) : Ratio(1, kk)) - epsilon;
  }
  return r < 0 ? Ratio(0) : r;
}

HamiltonianCycle patch_paths(std::vector<std::vector<Vertex>> paths, Direction direction,
                             std::size_t n) {
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (const auto& p : paths) {
    if (p.empty()) throw ContractError("patch_paths: empty path");
    for (auto v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
        throw ContractError("patch_paths: paths are not vertex-disjoint (vertex " +
                            std::to_string(v) + ")");
      }
      seen[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
  }
  if (count != n) throw ContractError("patch_paths: paths do not cover every vertex");
  std::stable_sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  std::vector<Vertex> order;
  order.reserve(n);
  for (const auto& p : paths) order.insert(order.end(), p.begin(), p.end());
  return HamiltonianCycle(direction, std::move(order));
}

HamiltonianCycle patch_paths(const PathCollection& paths) {
  return patch_paths(paths.paths(), paths.direction(), paths.n());
}

namespace {

HamiltonianCycle drop_lightest_and_patch(const Instance& instance) {
  if (instance.k() != 1) throw DimensionError("single-objective base case needs k = 1");
  const auto cover = max_cover_scalar(instance, instance.matrix(0));
  std::vector<Edge> kept;
  for (std::size_t c = 0; c < cover.cycles().size(); ++c) {
    const auto edges = cover.cycle_edges(c);
    std::size_t lightest = 0;
    for (std::size_t j = 1; j < edges.size(); ++j) {
      if (instance.weight(0, edges[j].from, edges[j].to) <
          instance.weight(0, edges[lightest].from, edges[lightest].to)) {
        lightest = j;
      }
    }
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != lightest) kept.push_back(edges[j]);
    }
  }
  return patch_paths(PathCollection(instance.direction(), instance.n(), std::move(kept)));
}

}  // namespace

HamiltonianCycle mono_maxatsp_half(const Instance& instance) {
  if (!instance.directed()) throw ContractError("mono_maxatsp_half needs a directed instance");
  return drop_lightest_and_patch(instance);
}

HamiltonianCycle mono_maxstsp_twothirds_style(const Instance& instance) {
  if (instance.directed()) {
    throw ContractError("mono_maxstsp_twothirds_style needs an undirected instance");
  }
  return drop_lightest_and_patch(instance);
}

ParetoSet<HamiltonianCycle> amplify(
    const std::function<ParetoSet<HamiltonianCycle>(std::uint64_t seed)>& run, std::size_t m,
    std::uint64_t base_seed) {
  if (m == 0) throw ContractError("amplify: m must be >= 1");
  auto out = run(base_seed);
  for (std::size_t r = 1; r < m; ++r) out.merge(run(base_seed + r));
  out.sort();
  return out;
}

ParetoSet<HamiltonianCycle> solve(const Instance& instance, const AlgoConfig& cfg) {
  if (instance.directed()) return atsp_alg(instance, cfg);
  if (instance.k() == 1) {
    ParetoSet<HamiltonianCycle> out(1);
    auto tour = mono_maxstsp_twothirds_style(instance);
    auto w = tour.weight(instance);
    out.insert(std::move(tour), std::move(w));
    return out;
  }
  return stsp_alg(instance, cfg);
}

}  // namespace mctsp
