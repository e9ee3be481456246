#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>

#include "heavy.hpp"
#include "mctsp/decompose.hpp"
#include "mctsp/maxtsp.hpp"

namespace mctsp {

namespace {

using Mask = std::uint32_t;

bool in_mask(Mask m, Vertex x) { return (m >> static_cast<unsigned>(x)) & 1U; }

Instance zero_incident(const Instance& inst, Mask u_set) {
  std::vector<Matrix> weights = inst.matrices();
  const auto n = static_cast<Vertex>(inst.n());
  for (auto& m : weights) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (in_mask(u_set, x) || in_mask(u_set, y)) m.at(x, y) = 0;
      }
    }
  }
  return Instance(Direction::undirected, inst.n(), std::move(weights));
}

class StspSolver {
 public:
  StspSolver(const Instance& inst, const AlgoConfig& cfg)
      : inst_(inst), cfg_(cfg), alpha_(guaranteed_alpha(Direction::undirected, inst.k())),
        out_(inst.k()) {}

  ParetoSet<HamiltonianCycle> run() {
    const auto covers = cover_pareto(
        CoverParetoRequest{inst_, cfg_.epsilon, CoverBackend::enumeration, cfg_.caps});
    std::uint64_t index = 0;
    for (const auto& entry : covers) {
      const auto& cover = entry.solution;
      if (inst_.k() == 2) {
        insert(patch_paths(decompose_bicriteria_undirected(cover, inst_)));
      } else if (const auto heavy = detail::heaviest_edge(cover, inst_, alpha_); !heavy) {
        DecompositionConfig dc;
        dc.alpha = alpha_;
        dc.rng_seed = cfg_.rng_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
        dc.max_random_attempts = cfg_.max_random_attempts;
        insert(patch_paths(cfg_.randomized_decomposition ? rand_lightweight(cover, inst_, dc)
                                                         : lightweight(cover, inst_, dc)));
      } else {
        heavy_block(heavy->edge.from, heavy->edge.to);
      }
      ++index;
    }
    out_.sort();
    return std::move(out_);
  }

 private:
  void insert(HamiltonianCycle tour) {
    auto w = tour.weight(inst_);
    if (out_.admits(w)) out_.insert(std::move(tour), std::move(w));
  }

  void heavy_block(Vertex u, Vertex v) {
    std::vector<Vertex> others;
    for (Vertex x = 0; x < static_cast<Vertex>(inst_.n()); ++x) {
      if (x != u && x != v) others.push_back(x);
    }
    const auto max_l = std::min(others.size(), 4 * inst_.k());
    const Mask base = (Mask{1} << static_cast<unsigned>(u)) | (Mask{1} << static_cast<unsigned>(v));
    for (Mask sub = 0; sub < (Mask{1} << others.size()); ++sub) {
      if (static_cast<std::size_t>(std::popcount(sub)) > max_l) continue;
      Mask u_set = base;
      for (std::size_t t = 0; t < others.size(); ++t) {
        if ((sub >> t) & 1U) u_set |= Mask{1} << static_cast<unsigned>(others[t]);
      }
      for (std::size_t j = 0; j < inst_.k(); ++j) {
        if (done_.insert({u_set, j}).second) u_block(u_set, j);
      }
    }
  }

  void u_block(Mask u_set, std::size_t j) {
    const auto reduced = zero_incident(inst_.without_objective(j), u_set);
    const auto sub = solve(reduced, cfg_);
    std::set<std::vector<Edge>> seen;
    for (const auto& e : sub) {
      std::vector<Edge> kept;
      for (const auto& f : e.solution.edges()) {
        if (!(in_mask(u_set, f.from) && in_mask(u_set, f.to))) kept.push_back(undirected_key(f));
      }
      std::sort(kept.begin(), kept.end());
      if (!seen.insert(kept).second) continue;
      if (kept.size() == inst_.n()) {
        insert(e.solution);
        continue;
      }
      complete(PathCollection(Direction::undirected, inst_.n(), std::move(kept)).paths());
    }
  }

  // Every way of joining the paths into one tour. The first path keeps its
  // orientation when it has an edge; otherwise reflections are skipped by
  // requiring the second item to be smaller than the last.
  void complete(std::vector<std::vector<Vertex>> items) {
    const auto lead = std::find_if(items.begin(), items.end(),
                                   [](const auto& p) { return p.size() >= 2; });
    if (lead != items.end()) std::rotate(items.begin(), lead, lead + 1);
    const bool fixed = items.front().size() >= 2;
    std::vector<char> used(items.size(), 0);
    std::vector<std::size_t> picked{0};
    used[0] = 1;
    std::vector<Vertex> order(items.front().begin(), items.front().end());
    extend(items, used, picked, order, fixed);
  }

  void extend(const std::vector<std::vector<Vertex>>& items, std::vector<char>& used,
              std::vector<std::size_t>& picked, std::vector<Vertex>& order, bool fixed) {
    if (picked.size() == items.size()) {
      if (!fixed && items.size() >= 3 && picked[1] > picked.back()) return;
      insert(HamiltonianCycle(Direction::undirected, order));
      return;
    }
    for (std::size_t t = 1; t < items.size(); ++t) {
      if (used[t]) continue;
      used[t] = 1;
      picked.push_back(t);
      const auto& p = items[t];
      const auto mark = order.size();
      order.insert(order.end(), p.begin(), p.end());
      extend(items, used, picked, order, fixed);
      if (p.size() >= 2) {
        std::reverse(order.begin() + static_cast<std::ptrdiff_t>(mark), order.end());
        extend(items, used, picked, order, fixed);
      }
      order.resize(mark);
      picked.pop_back();
      used[t] = 0;
    }
  }

  const Instance& inst_;
  const AlgoConfig& cfg_;
  Ratio alpha_;
  ParetoSet<HamiltonianCycle> out_;
  std::set<std::pair<Mask, std::size_t>> done_;
};

}  // namespace

ParetoSet<HamiltonianCycle> stsp_alg(const Instance& instance, const AlgoConfig& cfg) {
  if (instance.directed()) throw ContractError("stsp_alg needs an undirected instance");
  if (instance.k() < 2) throw DimensionError("stsp_alg needs k >= 2");
  if (instance.n() > 31) throw CapacityError("stsp_alg supports at most 31 vertices");
  return StspSolver(instance, cfg).run();
}

}  // namespace mctsp
