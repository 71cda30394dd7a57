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

#include "cover/offline_opt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "cover/error.hpp"
#include "cover/kernels.hpp"

namespace cover {

namespace {

void validate(std::span<const Point> points, double radius, std::size_t max_n) {
  if (points.empty()) throw ArgumentError("at least one point is required");
  if (points.size() > max_n) {
    throw ArgumentError("exact optimum supports at most " + std::to_string(max_n) +
                        " points (got " + std::to_string(points.size()) +
                        "); use greedy_cover for an upper bound");
  }
  if (!(radius > 0.0)) throw ArgumentError("radius must be > 0");
  for (const Point& p : points) require_same_dim(points[0], p);
}

class ClusterOracle {
 public:
  ClusterOracle(std::span<const Point> pts, double radius)
      : pts_(pts), radius_(radius), near_(pts.size(), 0) {
    const double limit = 2.0 * (radius + kTolerance);
    simd::PointColumns cols(pts[0].dim());
    for (const Point& p : pts) cols.push_back(p);
    std::vector<double> d2(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      cols.squared_distances(pts[i], d2);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (std::sqrt(d2[j]) <= limit) near_[i] |= 1u << j;
      }
    }
  }

  std::uint32_t near(std::size_t i) const { return near_[i]; }

  bool feasible(std::uint32_t mask) {
    if (std::popcount(mask) <= 1) return true;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const int i = std::countr_zero(m);
      if ((mask & ~near_[static_cast<std::size_t>(i)]) != 0) return false;
    }
    if (std::popcount(mask) == 2) return true;
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    const bool ok = smallest_enclosing_ball(subset(mask)).radius <= radius_ + kTolerance;
    cache_.emplace(mask, ok);
    return ok;
  }

  std::vector<Point> subset(std::uint32_t mask) const {
    std::vector<Point> out;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      out.push_back(pts_[static_cast<std::size_t>(std::countr_zero(m))]);
    }
    return out;
  }

 private:
  std::span<const Point> pts_;
  double radius_;
  std::vector<std::uint32_t> near_;
  std::unordered_map<std::uint32_t, bool> cache_;
};

// Visits `cur` and every feasible superset of it built from members of
// `cand`, adding indices in increasing order.
template <typename Visit>
void for_each_feasible(ClusterOracle& oracle, std::uint32_t cur, std::uint32_t cand, Visit&& visit) {
  visit(cur);
  for (std::uint32_t m = cand; m != 0; m &= m - 1) {
    const std::uint32_t bit = m & (~m + 1);
    const std::uint32_t next = cur | bit;
    if (!oracle.feasible(next)) continue;
    // Only indices above `bit` remain candidates, so each set is seen once.
    for_each_feasible(oracle, next, cand & ~((bit << 1) - 1), visit);
  }
}

class ExactSolver {
 public:
  ExactSolver(std::span<const Point> pts, double radius)
      : oracle_(pts, radius),
        memo_(std::size_t{1} << pts.size(), -1),
        choice_(std::size_t{1} << pts.size(), 0) {}

  int solve(std::uint32_t mask) {
    if (mask == 0) return 0;
    if (memo_[mask] >= 0) return memo_[mask];
    if (oracle_.feasible(mask)) {
      choice_[mask] = mask;
      return memo_[mask] = 1;
    }
    const int lowest = std::countr_zero(mask);
    const std::uint32_t self = 1u << lowest;
    const std::uint32_t cand = mask & oracle_.near(static_cast<std::size_t>(lowest)) & ~self;
    int best = 1 << 30;
    std::uint32_t best_set = self;
    for_each_feasible(oracle_, self, cand, [&](std::uint32_t s) {
      if (best == 2) return;  // 1 is ruled out above
      // Monotonicity: a non-maximal set is never better than its extension.
      for (std::uint32_t m = cand & ~s; m != 0; m &= m - 1) {
        if (oracle_.feasible(s | (m & (~m + 1)))) return;
      }
      const int v = 1 + solve(mask & ~s);
      if (v < best) {
        best = v;
        best_set = s;
      }
    });
    choice_[mask] = best_set;
    return memo_[mask] = static_cast<std::int8_t>(best);
  }

  std::uint32_t choice(std::uint32_t mask) const { return choice_[mask]; }

 private:
  ClusterOracle oracle_;
  std::vector<std::int8_t> memo_;
  std::vector<std::uint32_t> choice_;
};

}  // namespace

OptResult opt_cover_exact(std::span<const Point> points, double radius) {
  validate(points, radius, kMaxExactPoints);
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << points.size()) - 1);
  ExactSolver solver(points, radius);
  OptResult out;
  out.count = static_cast<std::size_t>(solver.solve(all));
  for (std::uint32_t mask = all; mask != 0;) {
    const std::uint32_t s = solver.choice(mask);
    std::vector<std::size_t> cluster;
    std::vector<Point> members;
    for (std::uint32_t m = s; m != 0; m &= m - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(m));
      cluster.push_back(i);
      members.push_back(points[i]);
    }
    out.balls.push_back(smallest_enclosing_ball(members));
    out.clusters.push_back(std::move(cluster));
    mask &= ~s;
  }
  return out;
}

std::vector<std::uint32_t> feasible_clusters(std::span<const Point> points, double radius) {
  validate(points, radius, kMaxExactPoints);
  ClusterOracle oracle(points, radius);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::uint32_t self = 1u << i;
    const std::uint32_t higher = oracle.near(i) & ~((self << 1) - 1);
    for_each_feasible(oracle, self, higher, [&](std::uint32_t s) { out.push_back(s); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t greedy_cover(std::span<const Point> points, double radius) {
  if (points.empty()) return 0;
  if (!(radius > 0.0)) throw ArgumentError("radius must be > 0");
  simd::PointColumns centers(points[0].dim());
  std::vector<double> d2;
  for (const Point& p : points) {
    d2.resize(centers.size());
    centers.squared_distances(p, d2);
    const bool covered = std::any_of(d2.begin(), d2.end(), [&](double v) {
      return std::sqrt(v) - radius <= kTolerance;
    });
    if (!covered) centers.push_back(p);
  }
  return centers.size();
}

}  // namespace cover
