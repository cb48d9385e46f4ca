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

#ifndef SELD_ASSIGNMENT_H_
#define SELD_ASSIGNMENT_H_

#include <span>
#include <vector>

namespace seld {

// Rectangular minimum-cost assignment (Kuhn-Munkres with potentials).
// `cost` is rows x cols, row-major. Exactly min(rows, cols) pairs are made.
// Returns the column assigned to each row, or -1 for unassigned rows.
// Throws kInvalidArgument if the size does not match or a cost is not finite.
std::vector<int> SolveAssignment(std::span<const double> cost, int rows,
                                 int cols);

// Sum of cost over assigned rows.
double AssignmentCost(std::span<const double> cost, int cols,
                      const std::vector<int>& row_to_col);

}  // namespace seld

#endif  // SELD_ASSIGNMENT_H_
