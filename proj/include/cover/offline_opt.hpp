// Copyright 2026 The unitcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Offline minimum unit cover, computed as a minimum partition into clusters
// whose smallest enclosing ball has radius at most `radius`.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cover/geometry.hpp"

namespace cover {

inline constexpr std::size_t kMaxExactPoints = 22;

struct OptResult {
  std::size_t count = 0;
  /// Partition of the input indices, one cluster per ball.
  std::vector<std::vector<std::size_t>> clusters;
  /// Smallest enclosing ball of each cluster.
  std::vector<Ball> balls;
};

/// Exact optimum for 1 <= n <= kMaxExactPoints points.
///
/// Memoized recursion over the bitmask of uncovered points: the lowest
/// uncovered point is grouped with every maximal feasible subset of the
/// uncovered points containing it. Feasibility is the enclosing-ball test
/// within kTolerance, pre-filtered by pairwise distance <= 2 * radius.
OptResult opt_cover_exact(std::span<const Point> points, double radius = 1.0);

/// All nonempty subsets (as bitmasks, ascending) whose smallest enclosing
/// ball has radius <= radius + kTolerance. Downward closed.
std::vector<std::uint32_t> feasible_clusters(std::span<const Point> points, double radius = 1.0);

/// Centered replay in input order. An upper bound on the optimum, never used
/// as the denominator of a ratio.
std::size_t greedy_cover(std::span<const Point> points, double radius = 1.0);

}  // namespace cover
