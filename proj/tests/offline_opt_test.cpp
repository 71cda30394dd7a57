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


#include <random>
#include <vector>

#include "cover/error.hpp"
#include "cover/offline_opt.hpp"
#include "cover/online.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cover;

TEST_CASE("small cases") {
  const std::vector<Point> none;
  CHECK_THROWS_AS(opt_cover_exact(none), ArgumentError);
  CHECK(greedy_cover(none) == 0);
  const std::vector<Point> two{Point{0.0, 0.0}, Point{2.0, 0.0}};
  CHECK(opt_cover_exact(two).count == 1);
  const std::vector<Point> apart{Point{0.0, 0.0}, Point{2.1, 0.0}};
  CHECK(opt_cover_exact(apart).count == 2);
  CHECK(opt_cover_exact(apart, 1.05).count == 1);
}

TEST_CASE("clusters partition the input and fit their balls") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = oracle::random_points(rng, 1 + trial % 12, 2, 2.5);
    const OptResult r = opt_cover_exact(pts);
    REQUIRE(r.clusters.size() == r.count);
    REQUIRE(r.balls.size() == r.count);
    std::vector<int> seen(pts.size(), 0);
    for (std::size_t c = 0; c < r.count; ++c) {
      CHECK(r.balls[c].radius <= 1.0 + kTolerance);
      for (std::size_t i : r.clusters[c]) {
        ++seen[i];
        CHECK(contains(r.balls[c], pts[i]));
      }
    }
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("exact optimum matches partition brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const auto pts = oracle::random_points(rng, 1 + trial % 8, d, 1.8);
    CHECK(opt_cover_exact(pts).count == oracle::partition_opt(pts));
  }
}

TEST_CASE("feasible clusters are exactly the sets with small enclosing balls") {
  std::mt19937_64 rng(4);
  const auto pts = oracle::random_points(rng, 7, 2, 1.5);
  const auto feasible = feasible_clusters(pts);
  std::vector<bool> mark(1U << pts.size(), false);
  for (std::uint32_t m : feasible) mark[m] = true;
  for (std::uint32_t m = 1; m < mark.size(); ++m) {
    std::vector<Point> s;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (m >> i & 1U) s.push_back(pts[i]);
    CHECK(mark[m] == (oracle::seb_radius(s) <= 1.0 + 1e-9));
  }
}

TEST_CASE("greedy is an upper bound") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto pts = oracle::random_points(rng, 1 + trial % 14, 2, 3.0);
    CHECK(greedy_cover(pts) >= opt_cover_exact(pts).count);
  }
}

TEST_CASE("too many points") {
  std::mt19937_64 rng(1);
  const auto pts = oracle::random_points(rng, kMaxExactPoints + 1, 2, 3.0);
  CHECK_THROWS_AS(opt_cover_exact(pts), ArgumentError);
}

// Property: centered centers inside one optimal ball are more than pi/3
// apart as seen from its center, so Centered stays within the kissing bound.
TEST_CASE("property: centered against the optimum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const bool plane = trial % 2 == 0;
    const std::size_t d = plane ? 2 : 3;
    std::uniform_real_distribution<double> u(0.0, 4.0);
    const std::size_t n = 1 + trial % (plane ? 12 : 10);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> c(d);
      for (double& x : c) x = plane ? u(rng) : u(rng) * 0.6;
      pts.emplace_back(std::move(c));
    }
    const OptResult opt = opt_cover_exact(pts);
    CenteredAlgorithm c(d);
    for (const Point& p : pts) c.observe(p);
    for (const Ball& ob : opt.balls) {
      std::vector<Point> in;
      for (const Ball& b : c.state().balls())
        if (contains(ob, b.center)) in.push_back(b.center);
      for (std::size_t i = 0; i < in.size(); ++i)
        for (std::size_t j = i + 1; j < in.size(); ++j) CHECK(angle_at(ob.center, in[i], in[j]) > kPi / 3.0 - 1e-9);
    }
    CHECK(c.state().size() <= (plane ? 5 : 12) * opt.count);
  }
}
