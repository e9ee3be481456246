#include "heavy.hpp"

namespace mctsp::detail {

std::optional<HeavyEdge> heaviest_edge(const CycleCover& cover, const Instance& instance,
                                       const Ratio& alpha) {
  using Wide = __int128;
  const auto total = cover.weight(instance);
  const auto edges = cover.edges();
  std::optional<HeavyEdge> best;
  Wide best_violation = 0;
  for (std::size_t i = 0; i < instance.k(); ++i) {
    for (const auto& e : edges) {
      const Wide violation = Wide{instance.weight(i, e.from, e.to)} * alpha.denominator() -
                             Wide{total[i]} * alpha.numerator();
      if (violation > best_violation) {
        best_violation = violation;
        best = HeavyEdge{e, i};
      }
    }
  }
  return best;
}

}  // namespace mctsp::detail
