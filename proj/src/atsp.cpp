#include <algorithm>
#include <numeric>
#include <set>

#include "heavy.hpp"
#include "mctsp/decompose.hpp"
#include "mctsp/maxtsp.hpp"

namespace mctsp {

namespace {

void insert_tour(ParetoSet<HamiltonianCycle>& out, HamiltonianCycle tour, const Instance& inst) {
  auto w = tour.weight(inst);
  if (out.admits(w)) out.insert(std::move(tour), std::move(w));
}

PathCollection decompose_light(const CycleCover& cover, const Instance& inst, const Ratio& alpha,
                               const AlgoConfig& cfg, std::uint64_t salt) {
  DecompositionConfig dc;
  dc.alpha = alpha;
  dc.rng_seed = cfg.rng_seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  dc.max_random_attempts = cfg.max_random_attempts;
  return cfg.randomized_decomposition ? rand_lightweight(cover, inst, dc)
                                      : lightweight(cover, inst, dc);
}

class AtspSolver {
 public:
  AtspSolver(const Instance& inst, const AlgoConfig& cfg)
      : inst_(inst), cfg_(cfg), alpha_(guaranteed_alpha(Direction::directed, inst.k())),
        out_(inst.k()) {}

  ParetoSet<HamiltonianCycle> run() {
    const auto covers = cover_pareto(
        CoverParetoRequest{inst_, cfg_.epsilon, CoverBackend::bitmask_dp, cfg_.caps});
    std::uint64_t index = 0;
    for (const auto& entry : covers) {
      const auto& cover = entry.solution;
      const auto heavy = detail::heaviest_edge(cover, inst_, alpha_);
      if (!heavy) {
        insert_tour(out_, patch_paths(decompose_light(cover, inst_, alpha_, cfg_, index)), inst_);
      } else if (done_.insert(heavy->edge).second) {
        heavy_block(heavy->edge.from, heavy->edge.to);
      }
      ++index;
    }
    out_.sort();
    return std::move(out_);
  }

 private:
  void heavy_block(Vertex u, Vertex v) {
    const auto n = static_cast<Vertex>(inst_.n());
    bool tiny = false;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        for (Vertex c = 0; c < n; ++c) {
          for (Vertex d = 0; d < n; ++d) {
            const PabcdPattern p{u, v, a, b, c, d};
            if (pattern_is_full_tour(p, inst_.n())) {
              insert_tour(out_, pattern_tour(p), inst_);
              continue;
            }
            if (!is_legal_pabcd(p)) continue;
            const auto contraction = contract_pabcd(inst_, p);
            if (!contraction.instance) {
              tiny = true;
              const Vertex single = 0;
              for (auto mode : {ExpandMode::with_pattern, ExpandMode::with_edge_uv}) {
                insert_tour(out_, expand_tour(std::span(&single, 1), contraction.map, mode), inst_);
              }
              continue;
            }
            for (std::size_t i = 0; i < inst_.k(); ++i) {
              const auto sub = atsp_alg(contraction.instance->without_objective(i), cfg_);
              for (const auto& e : sub) {
                for (auto mode : {ExpandMode::with_pattern, ExpandMode::with_edge_uv}) {
                  insert_tour(out_, expand_tour(e.solution.order(), contraction.map, mode), inst_);
                }
              }
            }
          }
        }
      }
    }
    if (tiny) all_tours_through(u, v);
  }

  HamiltonianCycle pattern_tour(const PabcdPattern& p) const {
    const auto arcs = p.arcs();
    std::vector<Vertex> order{p.u};
    while (order.size() < inst_.n()) {
      const auto it = std::find_if(arcs.begin(), arcs.end(),
                                   [&](const Edge& e) { return e.from == order.back(); });
      order.push_back(it->to);
    }
    return HamiltonianCycle(Direction::directed, std::move(order));
  }

  // Only reached when a pattern swallows the whole graph, so n <= 5.
  void all_tours_through(Vertex u, Vertex v) {
    std::vector<Vertex> rest;
    for (Vertex x = 0; x < static_cast<Vertex>(inst_.n()); ++x) {
      if (x != u && x != v) rest.push_back(x);
    }
    do {
      std::vector<Vertex> order{u, v};
      order.insert(order.end(), rest.begin(), rest.end());
      insert_tour(out_, HamiltonianCycle(Direction::directed, std::move(order)), inst_);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  const Instance& inst_;
  const AlgoConfig& cfg_;
  Ratio alpha_;
  ParetoSet<HamiltonianCycle> out_;
  std::set<Edge> done_;
};

}  // namespace

ParetoSet<HamiltonianCycle> atsp_alg(const Instance& instance, const AlgoConfig& cfg) {
  if (!instance.directed()) throw ContractError("atsp_alg needs a directed instance");
  if (instance.k() == 1) {
    ParetoSet<HamiltonianCycle> out(1);
    insert_tour(out, mono_maxatsp_half(instance), instance);
    return out;
  }
  return AtspSolver(instance, cfg).run();
}

}  // namespace mctsp
