// Copyright 2026 The seldkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seld/assignment.h"

#include <cmath>
#include <limits>

#include "seld/error.h"

namespace seld {

namespace {

// Assigns every row of an n x m matrix with n <= m. 1-based internally.
std::vector<int> SolveWide(std::span<const double> cost, int n, int m,
                           bool transposed) {
  auto at = [&](int i, int j) {
    return transposed ? cost[static_cast<size_t>(j) * n + i]
                      : cost[static_cast<size_t>(i) * m + j];
  };
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(m + 1, 0.0);
  std::vector<int> p(m + 1, 0);
  std::vector<int> way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = at(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
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
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= m; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace

std::vector<int> SolveAssignment(std::span<const double> cost, int rows,
                                 int cols) {
  if (rows < 0 || cols < 0 ||
      cost.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    ThrowInvalidArgument("cost matrix size does not match its shape");
  }
  for (double c : cost) {
    if (!std::isfinite(c)) ThrowInvalidArgument("cost matrix is not finite");
  }
  if (rows == 0 || cols == 0) return std::vector<int>(rows, -1);
  if (rows <= cols) return SolveWide(cost, rows, cols, false);

  const std::vector<int> col_to_row = SolveWide(cost, cols, rows, true);
  std::vector<int> row_to_col(rows, -1);
  for (int c = 0; c < cols; ++c) row_to_col[col_to_row[c]] = c;
  return row_to_col;
}

double AssignmentCost(std::span<const double> cost, int cols,
                      const std::vector<int>& row_to_col) {
  double total = 0.0;
  for (size_t r = 0; r < row_to_col.size(); ++r) {
    if (row_to_col[r] >= 0) total += cost[r * cols + row_to_col[r]];
  }
  return total;
}

}  // namespace seld
