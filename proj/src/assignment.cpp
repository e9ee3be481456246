#include "assignment.hpp"

#include <limits>

namespace mctsp::detail {

std::vector<int> max_weight_assignment(
    const std::vector<std::optional<std::int64_t>>& profit, int n) {
  // Minimise cost = -profit; forbidden cells cost more than any feasible
  // assignment can, so they are only used when no feasible one exists.
  std::int64_t max_abs = 0;
  for (const auto& p : profit) {
    if (p && (*p < 0 ? -*p : *p) > max_abs) max_abs = *p < 0 ? -*p : *p;
  }
  const std::int64_t forbidden = (max_abs + 1) * (2 * n + 1);
  auto cost = [&](int r, int c) -> std::int64_t {
    const auto& p = profit[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(c)];
    return p ? -*p : forbidden;
  };

  constexpr auto inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      std::int64_t delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const auto cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  for (int r = 0; r < n; ++r) {
    if (!profit[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(row_to_col[r])]) {
      return {};
    }
  }
  return row_to_col;
}

}  // namespace mctsp::detail
