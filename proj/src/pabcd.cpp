#include <algorithm>
#include <map>
#include <string>

#include "mctsp/maxtsp.hpp"

namespace mctsp {

std::vector<Edge> PabcdPattern::arcs() const {
  std::vector<Edge> out;
  for (const Edge e : {Edge{a, u}, Edge{u, b}, Edge{c, v}, Edge{v, d}}) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

namespace {

struct Degrees {
  std::map<Vertex, int> in, out;
};

Degrees degrees(const std::vector<Edge>& arcs) {
  Degrees d;
  for (const auto& e : arcs) {
    ++d.out[e.from];
    ++d.in[e.to];
  }
  return d;
}

bool degrees_at_most_one(const std::vector<Edge>& arcs) {
  const auto d = degrees(arcs);
  for (const auto& [_, c] : d.in) {
    if (c > 1) return false;
  }
  for (const auto& [_, c] : d.out) {
    if (c > 1) return false;
  }
  for (const auto& e : arcs) {
    if (e.from == e.to) return false;
  }
  return true;
}

Vertex successor(const std::vector<Edge>& arcs, Vertex x) {
  for (const auto& e : arcs) {
    if (e.from == x) return e.to;
  }
  return -1;
}

}  // namespace

bool is_legal_pabcd(const PabcdPattern& p) {
  if (p.u == p.v) return false;
  const auto arcs = p.arcs();
  if (!degrees_at_most_one(arcs)) return false;
  // With in/out-degree <= 1 the arc set is paths and cycles; a cycle has no
  // vertex of in-degree zero, so every arc must be reachable from a start.
  const auto d = degrees(arcs);
  std::size_t reached = 0;
  for (const auto& [x, _] : d.out) {
    if (d.in.count(x)) continue;
    for (Vertex y = x; successor(arcs, y) != -1; y = successor(arcs, y)) ++reached;
  }
  return reached == arcs.size();
}

bool pattern_is_full_tour(const PabcdPattern& p, std::size_t n) {
  if (p.u == p.v) return false;
  const auto arcs = p.arcs();
  if (arcs.size() != n || !degrees_at_most_one(arcs)) return false;
  const auto d = degrees(arcs);
  if (d.in.size() != n || d.out.size() != n) return false;
  std::size_t steps = 0;
  Vertex y = p.u;
  do {
    y = successor(arcs, y);
    ++steps;
  } while (y != p.u && steps <= n);
  return steps == n;
}

std::vector<std::vector<Vertex>> pattern_paths(const PabcdPattern& p) {
  if (!is_legal_pabcd(p)) throw ContractError("pattern is not legal");
  const auto arcs = p.arcs();
  const auto d = degrees(arcs);
  std::vector<std::vector<Vertex>> out;
  for (const auto& [x, _] : d.out) {
    if (d.in.count(x)) continue;
    std::vector<Vertex> path{x};
    for (Vertex y = successor(arcs, x); y != -1; y = successor(arcs, y)) path.push_back(y);
    out.push_back(std::move(path));
  }
  return out;
}

Contraction contract_pabcd(const Instance& instance, const PabcdPattern& p) {
  if (!instance.directed()) throw ContractError("contraction needs a directed instance");
  if (!is_legal_pabcd(p)) {
    throw ContractError("contract_pabcd: illegal pattern u=" + std::to_string(p.u) +
                        " v=" + std::to_string(p.v) + " a=" + std::to_string(p.a) +
                        " b=" + std::to_string(p.b) + " c=" + std::to_string(p.c) +
                        " d=" + std::to_string(p.d));
  }
  const auto n = instance.n();
  for (const Vertex x : {p.u, p.v, p.a, p.b, p.c, p.d}) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) {
      throw ContractError("contract_pabcd: pattern vertex out of range");
    }
  }

  Contraction result;
  auto& map = result.map;
  map.original_n = n;
  map.u = p.u;
  map.v = p.v;
  map.merged = pattern_paths(p);

  std::vector<char> in_pattern(n, 0);
  for (const auto& path : map.merged) {
    for (auto x : path) in_pattern[static_cast<std::size_t>(x)] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!in_pattern[x]) {
      map.original_of.push_back(static_cast<Vertex>(x));
      map.merged_of.push_back(-1);
    }
  }
  for (std::size_t m = 0; m < map.merged.size(); ++m) {
    map.original_of.push_back(-1);
    map.merged_of.push_back(static_cast<int>(m));
  }

  const auto cn = map.contracted_n();
  if (cn < min_vertices(Direction::directed)) return result;

  // Arcs enter a merged vertex at its first vertex and leave from its last.
  auto entry = [&](std::size_t x) {
    return map.merged_of[x] < 0 ? map.original_of[x]
                                : map.merged[static_cast<std::size_t>(map.merged_of[x])].front();
  };
  auto exit = [&](std::size_t x) {
    return map.merged_of[x] < 0 ? map.original_of[x]
                                : map.merged[static_cast<std::size_t>(map.merged_of[x])].back();
  };
  std::vector<Matrix> weights;
  for (std::size_t i = 0; i < instance.k(); ++i) {
    Matrix m(cn);
    for (std::size_t x = 0; x < cn; ++x) {
      for (std::size_t y = 0; y < cn; ++y) {
        if (x != y) {
          m.at(static_cast<Vertex>(x), static_cast<Vertex>(y)) =
              instance.weight(i, exit(x), entry(y));
        }
      }
    }
    weights.push_back(std::move(m));
  }
  result.instance.emplace(Direction::directed, cn, std::move(weights));
  return result;
}

HamiltonianCycle expand_tour(std::span<const Vertex> contracted_order, const ContractionMap& map,
                             ExpandMode mode) {
  const auto cn = map.contracted_n();
  std::vector<char> seen(cn, 0);
  if (contracted_order.size() != cn) {
    throw ContractError("expand_tour: tour length differs from contracted graph size");
  }
  for (auto x : contracted_order) {
    if (x < 0 || static_cast<std::size_t>(x) >= cn || seen[static_cast<std::size_t>(x)]) {
      throw ContractError("expand_tour: tour is not a permutation of the contracted graph");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  if (mode == ExpandMode::with_edge_uv && map.merged.empty()) {
    throw ContractError("expand_tour: with_edge_uv needs a pattern contraction");
  }

  std::vector<Vertex> order;
  order.reserve(map.original_n);
  for (auto x : contracted_order) {
    const auto m = map.merged_of[static_cast<std::size_t>(x)];
    if (m < 0) {
      order.push_back(map.original_of[static_cast<std::size_t>(x)]);
      continue;
    }
    const auto& path = map.merged[static_cast<std::size_t>(m)];
    if (mode == ExpandMode::with_pattern) {
      order.insert(order.end(), path.begin(), path.end());
      continue;
    }
    const bool holds_u = std::find(path.begin(), path.end(), map.u) != path.end();
    bool first = true;
    for (auto y : path) {
      if (y == map.u || y == map.v) continue;
      order.push_back(y);
      if (first && holds_u) {
        order.push_back(map.u);
        order.push_back(map.v);
      }
      first = false;
    }
  }
  return HamiltonianCycle(Direction::directed, std::move(order));
}

}  // namespace mctsp
