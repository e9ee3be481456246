#include "mctsp/core.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mctsp {

namespace {

using Wide = __int128;

void require_same_size(const WeightVector& a, const WeightVector& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": vectors of dimension " +
                         std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

void check_vertex(Vertex v, std::size_t n, const char* what) {
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw StructuralError(std::string(what) + ": vertex " + std::to_string(v) +
                          " out of range for n=" + std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Ratio helpers

std::string to_string(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Ratio parse_ratio(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc{} || ptr != last) {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Ratio(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const auto whole_text = text.substr(0, dot);
    const bool negative = !whole_text.empty() && whole_text.front() == '-';
    const std::int64_t whole = whole_text.empty() || whole_text == "-" ? 0 : parse_int(whole_text);
    const std::int64_t part = frac.empty() ? 0 : parse_int(frac);
    if (part < 0) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    const std::int64_t magnitude = (whole < 0 ? -whole : whole) * scale + part;
    return Ratio(negative ? -magnitude : magnitude, scale);
  }
  return Ratio(parse_int(text));
}

// ---------------------------------------------------------------------------
// WeightVector

std::string_view to_string(Direction d) {
  return d == Direction::directed ? "directed" : "undirected";
}

WeightVector::WeightVector(std::initializer_list<Weight> values)
    : WeightVector(std::vector<Weight>(values)) {}

WeightVector::WeightVector(std::vector<Weight> values) : components_(std::move(values)) {
  for (auto v : components_) {
    if (v < 0) throw ContractError("weight vector component is negative");
  }
}

WeightVector& WeightVector::operator+=(const WeightVector& other) {
  require_same_size(*this, other, "operator+");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

WeightVector WeightVector::scaled(Weight factor) const {
  if (factor < 0) throw ContractError("negative scale factor");
  WeightVector out = *this;
  for (auto& v : out.components_) v *= factor;
  return out;
}

WeightVector WeightVector::without(std::size_t i) const {
  WeightVector out;
  out.components_.reserve(components_.size() - 1);
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (j != i) out.components_.push_back(components_[j]);
  }
  return out;
}

std::string to_string(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

bool dominates(const WeightVector& a, const WeightVector& b) {
  require_same_size(a, b, "dominates");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

bool at_least_fraction(Weight part, Weight whole, const Ratio& alpha) {
  return static_cast<Wide>(part) * alpha.denominator() >=
         static_cast<Wide>(whole) * alpha.numerator();
}

bool at_least_fraction(const WeightVector& part, const WeightVector& whole,
                       const Ratio& alpha) {
  require_same_size(part, whole, "at_least_fraction");
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (!at_least_fraction(part[i], whole[i], alpha)) return false;
  }
  return true;
}

bool alpha_covers(const Ratio& alpha, std::span<const WeightVector> candidate,
                  std::span<const WeightVector> reference) {
  for (const auto& z : reference) {
    bool found = false;
    for (const auto& y : candidate) {
      if (at_least_fraction(y, z, alpha)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Instance

Matrix::Matrix(std::size_t n, std::vector<Weight> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n) throw DimensionError("matrix data does not have n*n entries");
}

Instance::Instance(Direction direction, std::size_t n, std::vector<Matrix> weights)
    : direction_(direction), n_(n), weights_(std::move(weights)) {
  if (n_ < min_vertices(direction_)) {
    throw StructuralError(std::string(to_string(direction_)) + " instance needs n >= " +
                          std::to_string(min_vertices(direction_)) + ", got " +
                          std::to_string(n_));
  }
  if (weights_.empty()) throw DimensionError("instance needs at least one objective");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    auto& m = weights_[i];
    if (m.n() != n_) throw DimensionError("objective matrix has wrong size");
    for (std::size_t u = 0; u < n_; ++u) {
      m.at(static_cast<Vertex>(u), static_cast<Vertex>(u)) = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        const auto w = m.at(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (w < 0) throw ContractError("negative edge weight");
        if (direction_ == Direction::undirected &&
            w != m.at(static_cast<Vertex>(v), static_cast<Vertex>(u))) {
          throw StructuralError("undirected objective " + std::to_string(i + 1) +
                                " is not symmetric at (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
        }
      }
    }
  }
}

WeightVector Instance::edge_weight(Vertex u, Vertex v) const {
  std::vector<Weight> w(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) w[i] = weights_[i].at(u, v);
  return WeightVector(std::move(w));
}

Instance Instance::without_objective(std::size_t i) const {
  if (i >= weights_.size()) throw DimensionError("objective index out of range");
  if (weights_.size() == 1) throw DimensionError("cannot remove the only objective");
  std::vector<Matrix> rest;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (j != i) rest.push_back(weights_[j]);
  }
  return Instance(direction_, n_, std::move(rest));
}

WeightVector total_weight(std::span<const Edge> edges, const Instance& instance) {
  std::vector<Weight> w(instance.k(), 0);
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += instance.weight(i, e.from, e.to);
  }
  return WeightVector(std::move(w));
}

// ---------------------------------------------------------------------------
// CycleCover

CycleCover::CycleCover(Direction direction, std::size_t n,
                       std::vector<std::vector<Vertex>> cycles)
    : direction_(direction), n_(n), cycles_(std::move(cycles)) {
  std::vector<char> seen(n_, 0);
  const std::size_t min_len = min_vertices(direction_);
  for (const auto& c : cycles_) {
    if (c.size() < min_len) {
      throw StructuralError(std::string(to_string(direction_)) + " cycle of length " +
                            std::to_string(c.size()) + " (minimum " +
                            std::to_string(min_len) + ")");
    }
    for (auto v : c) {
      check_vertex(v, n_, "cycle cover");
      if (seen[static_cast<std::size_t>(v)]) {
        throw StructuralError("cycle cover visits vertex " + std::to_string(v) + " twice");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (std::size_t v = 0; v < n_; ++v) {
    if (!seen[v]) throw StructuralError("cycle cover misses vertex " + std::to_string(v));
  }
}

std::vector<Edge> CycleCover::cycle_edges(std::size_t c) const {
  const auto& cyc = cycles_.at(c);
  std::vector<Edge> out;
  out.reserve(cyc.size());
  for (std::size_t j = 0; j < cyc.size(); ++j) {
    out.push_back(Edge{cyc[j], cyc[(j + 1) % cyc.size()]});
  }
  return out;
}

std::vector<Edge> CycleCover::edges() const {
  std::vector<Edge> out;
  out.reserve(n_);
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    auto ce = cycle_edges(c);
    out.insert(out.end(), ce.begin(), ce.end());
  }
  return out;
}

WeightVector CycleCover::weight(const Instance& instance) const {
  const auto e = edges();
  return total_weight(e, instance);
}

namespace {

std::vector<Vertex> canonical_cycle(std::vector<Vertex> c, Direction d) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  if (d == Direction::undirected && c.size() > 2 && c[1] > c.back()) {
    std::reverse(c.begin() + 1, c.end());
  }
  return c;
}

}  // namespace

CycleCover CycleCover::canonical() const {
  std::vector<std::vector<Vertex>> cs;
  cs.reserve(cycles_.size());
  for (const auto& c : cycles_) cs.push_back(canonical_cycle(c, direction_));
  std::sort(cs.begin(), cs.end());
  return CycleCover(direction_, n_, std::move(cs));
}

// ---------------------------------------------------------------------------
// PathCollection

PathCollection::PathCollection(Direction direction, std::size_t n, std::vector<Edge> edges)
    : direction_(direction), n_(n), edges_(std::move(edges)) {
  std::vector<int> out_deg(n_, 0), in_deg(n_, 0);
  for (const auto& e : edges_) {
    check_vertex(e.from, n_, "path collection");
    check_vertex(e.to, n_, "path collection");
    if (e.from == e.to) throw StructuralError("path collection contains a self-loop");
    ++out_deg[static_cast<std::size_t>(e.from)];
    ++in_deg[static_cast<std::size_t>(e.to)];
  }
  for (std::size_t v = 0; v < n_; ++v) {
    const bool bad = direction_ == Direction::directed
                         ? (out_deg[v] > 1 || in_deg[v] > 1)
                         : (out_deg[v] + in_deg[v] > 2);
    if (bad) {
      throw StructuralError("path collection: vertex " + std::to_string(v) +
                            " has too many incident edges");
    }
  }
  // Degree bounds hold, so a cycle would leave a component with as many
  // edges as vertices; union-find detects it.
  std::vector<Vertex> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& e : edges_) {
    const auto a = find(e.from);
    const auto b = find(e.to);
    if (a == b) throw StructuralError("path collection contains a cycle");
    parent[static_cast<std::size_t>(a)] = b;
  }
}

WeightVector PathCollection::weight(const Instance& instance) const {
  return total_weight(edges_, instance);
}

std::vector<std::vector<Vertex>> PathCollection::paths() const {
  std::vector<std::vector<Vertex>> adj(n_);
  std::vector<Vertex> succ(n_, -1), pred(n_, -1);
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.from)].push_back(e.to);
    adj[static_cast<std::size_t>(e.to)].push_back(e.from);
    succ[static_cast<std::size_t>(e.from)] = e.to;
    pred[static_cast<std::size_t>(e.to)] = e.from;
  }
  std::vector<char> used(n_, 0);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t s = 0; s < n_; ++s) {
    if (used[s]) continue;
    std::vector<Vertex> path;
    if (direction_ == Direction::directed) {
      // Walk back to the start of the path containing s.
      Vertex start = static_cast<Vertex>(s);
      while (pred[static_cast<std::size_t>(start)] != -1) start = pred[static_cast<std::size_t>(start)];
      for (Vertex v = start; v != -1; v = succ[static_cast<std::size_t>(v)]) path.push_back(v);
    } else {
      // Walk to one endpoint, then walk the whole path from there.
      auto walk = [&](Vertex from) {
        std::vector<Vertex> seq{from};
        Vertex prev = -1, cur = from;
        for (;;) {
          Vertex next = -1;
          for (auto w : adj[static_cast<std::size_t>(cur)]) {
            if (w != prev) {
              next = w;
              break;
            }
          }
          if (next == -1) break;
          seq.push_back(next);
          prev = cur;
          cur = next;
        }
        return seq;
      };
      path = walk(walk(static_cast<Vertex>(s)).back());
      if (path.size() > 1 && path.back() < path.front()) std::reverse(path.begin(), path.end());
    }
    for (auto v : path) used[static_cast<std::size_t>(v)] = 1;
    out.push_back(std::move(path));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return out;
}

bool PathCollection::is_subset_of(const CycleCover& cover) const {
  auto cover_edges = cover.edges();
  auto key = [&](Edge e) { return direction_ == Direction::directed ? e : undirected_key(e); };
  for (auto& e : cover_edges) e = key(e);
  std::sort(cover_edges.begin(), cover_edges.end());
  for (const auto& e : edges_) {
    if (!std::binary_search(cover_edges.begin(), cover_edges.end(), key(e))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// HamiltonianCycle

HamiltonianCycle::HamiltonianCycle(Direction direction, std::vector<Vertex> order)
    : direction_(direction), order_(std::move(order)) {
  const auto n = order_.size();
  if (n < min_vertices(direction_)) {
    throw StructuralError("tour on " + std::to_string(n) + " vertices is too short");
  }
  std::vector<char> seen(n, 0);
  for (auto v : order_) {
    check_vertex(v, n, "tour");
    if (seen[static_cast<std::size_t>(v)]) {
      throw StructuralError("tour visits vertex " + std::to_string(v) + " twice");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

std::vector<Edge> HamiltonianCycle::edges() const {
  std::vector<Edge> out;
  out.reserve(order_.size());
  for (std::size_t j = 0; j < order_.size(); ++j) {
    out.push_back(Edge{order_[j], order_[(j + 1) % order_.size()]});
  }
  return out;
}

WeightVector HamiltonianCycle::weight(const Instance& instance) const {
  if (instance.n() != order_.size()) throw DimensionError("tour and instance sizes differ");
  const auto e = edges();
  return total_weight(e, instance);
}

bool HamiltonianCycle::contains(Edge e) const {
  for (const auto& f : edges()) {
    if (f == e) return true;
    if (direction_ == Direction::undirected && f.from == e.to && f.to == e.from) return true;
  }
  return false;
}

HamiltonianCycle HamiltonianCycle::canonical() const {
  return HamiltonianCycle(direction_, canonical_cycle(order_, direction_));
}

}  // namespace mctsp
