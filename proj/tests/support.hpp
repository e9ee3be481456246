// Shared fixtures for the test binaries. Nothing here calls into the
// algorithms under test; weights and lightness are recomputed directly.

#ifndef MCTSP_TESTS_SUPPORT_HPP
#define MCTSP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mctsp/core.hpp"

namespace mctsp::test {

inline Instance random_instance(Direction d, std::size_t n, std::size_t k, Weight max_w,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<Weight> dist(0, max_w);
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix m(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        const auto vx = static_cast<Vertex>(x);
        const auto vy = static_cast<Vertex>(y);
        m.at(vx, vy) = (d == Direction::undirected && y < x) ? m.at(vy, vx) : dist(rng);
      }
    }
    ms.push_back(std::move(m));
  }
  return Instance(d, n, std::move(ms));
}

struct CoverCase {
  Instance instance;
  CycleCover cover;
};

/// Random cycle structure with random weights on the cover edges and zero
/// elsewhere. Cycle lengths are drawn from [min_len, max_len].
inline CoverCase random_cover(Direction d, std::size_t k, std::size_t cycles, std::size_t min_len,
                              std::size_t max_len, Weight max_w, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::vector<std::size_t> lengths(cycles);
  for (auto& l : lengths) l = len(rng);
  const auto n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<Vertex>> cyc;
  std::size_t at = 0;
  for (auto l : lengths) {
    cyc.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(at),
                     perm.begin() + static_cast<std::ptrdiff_t>(at + l));
    at += l;
  }
  std::uniform_int_distribution<Weight> dist(0, max_w);
  std::vector<Matrix> ms(k, Matrix(n));
  for (const auto& c : cyc) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      const auto x = c[t];
      const auto y = c[(t + 1) % c.size()];
      for (auto& m : ms) {
        const auto w = dist(rng);
        m.at(x, y) = w;
        if (d == Direction::undirected) m.at(y, x) = w;
      }
    }
  }
  return CoverCase{Instance(d, n, std::move(ms)), CycleCover(d, n, std::move(cyc))};
}

inline WeightVector edges_weight(const std::vector<Edge>& edges, const Instance& inst) {
  std::vector<Weight> w(inst.k(), 0);
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < inst.k(); ++i) w[i] += inst.weight(i, e.from, e.to);
  }
  return WeightVector(std::move(w));
}

/// w(e) * den <= w(C) * num for every edge and objective.
inline bool all_edges_light(const CoverCase& c, const Ratio& alpha) {
  const auto total = edges_weight(c.cover.edges(), c.instance);
  for (const auto& e : c.cover.edges()) {
    for (std::size_t i = 0; i < c.instance.k(); ++i) {
      if (static_cast<__int128>(c.instance.weight(i, e.from, e.to)) * alpha.denominator() >
          static_cast<__int128>(total[i]) * alpha.numerator()) {
        return false;
      }
    }
  }
  return true;
}

/// part_i * den >= whole_i * num for every i.
inline bool meets(const WeightVector& part, const WeightVector& whole, const Ratio& alpha) {
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (static_cast<__int128>(part[i]) * alpha.denominator() <
        static_cast<__int128>(whole[i]) * alpha.numerator()) {
      return false;
    }
  }
  return true;
}

/// Light cover by rejection sampling.
inline CoverCase random_light_cover(Direction d, std::size_t k, std::size_t cycles,
                                    std::size_t min_len, std::size_t max_len, Weight max_w,
                                    const Ratio& alpha, std::mt19937_64& rng) {
  while (true) {
    auto c = random_cover(d, k, cycles, min_len, max_len, max_w, rng);
    if (all_edges_light(c, alpha)) return c;
  }
}

/// Every permutation-based tour, for k = 1 optimum checks.
inline Weight brute_force_max_tour(const Instance& inst) {
  std::vector<Vertex> order(inst.n());
  std::iota(order.begin(), order.end(), 0);
  Weight best = 0;
  do {
    Weight w = 0;
    for (std::size_t t = 0; t < order.size(); ++t) {
      w += inst.weight(0, order[t], order[(t + 1) % order.size()]);
    }
    best = std::max(best, w);
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

}  // namespace mctsp::test

#endif  // MCTSP_TESTS_SUPPORT_HPP
