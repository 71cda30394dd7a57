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

// Independent reference implementations for the tests. Nothing here calls
// into the library beyond Point arithmetic.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cover/geometry.hpp"

namespace oracle {

using cover::Point;

// Center of the sphere through every point of s inside their affine hull,
// by Gaussian elimination on the Gram system. nullopt when degenerate.
inline std::optional<Point> circumcenter(const std::vector<Point>& s) {
  const std::size_t k = s.size() - 1;
  const std::size_t d = s[0].dim();
  if (k == 0) return s[0];
  std::vector<std::vector<double>> v(k, std::vector<double>(d));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d; ++j) v[i][j] = s[i + 1][j] - s[0][j];
  // Solve sum_b lambda_b <v_a, v_b> = |v_a|^2 / 2.
  std::vector<std::vector<double>> m(k, std::vector<double>(k + 1));
  for (std::size_t a = 0; a < k; ++a) {
    double sq = 0.0;
    for (std::size_t b = 0; b < k; ++b) {
      double g = 0.0;
      for (std::size_t j = 0; j < d; ++j) g += v[a][j] * v[b][j];
      m[a][b] = g;
    }
    for (std::size_t j = 0; j < d; ++j) sq += v[a][j] * v[a][j];
    m[a][k] = sq / 2.0;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (std::abs(m[piv][c]) < 1e-12) return std::nullopt;
    std::swap(m[c], m[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (std::size_t q = c; q <= k; ++q) m[r][q] -= f * m[c][q];
    }
  }
  std::vector<double> out(s[0].coords().begin(), s[0].coords().end());
  for (std::size_t a = 0; a < k; ++a) {
    const double lambda = m[a][k] / m[a][a];
    for (std::size_t j = 0; j < d; ++j) out[j] += lambda * v[a][j];
  }
  return Point(std::move(out));
}

// Smallest enclosing ball radius by trying every support set of size <= d+1.
inline double seb_radius(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n <= 1) return 0.0;
  const std::size_t d = pts[0].dim();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx;
  auto visit = [&](auto&& self, std::size_t from) -> void {
    if (idx.size() >= 2) {
      std::vector<Point> s;
      for (std::size_t i : idx) s.push_back(pts[i]);
      if (auto c = circumcenter(s)) {
        const double r = cover::distance(*c, s[0]);
        bool ok = r < best;
        for (std::size_t i = 0; ok && i < n; ++i) ok = cover::distance(*c, pts[i]) <= r + 1e-12;
        if (ok) best = r;
      }
    }
    if (idx.size() == d + 1) return;
    for (std::size_t i = from; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

// Minimum number of blocks over all set partitions whose blocks each fit in
// a ball of the given radius. Enumerates restricted growth strings.
inline std::size_t partition_opt(std::span<const Point> pts, double radius = 1.0) {
  const std::size_t n = pts.size();
  if (n == 0) return 0;
  std::vector<std::optional<bool>> fits(std::size_t{1} << n);
  auto block_fits = [&](std::uint32_t mask) {
    auto& slot = fits[mask];
    if (!slot) {
      std::vector<Point> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) s.push_back(pts[i]);
      slot = seb_radius(s) <= radius + 1e-9;
    }
    return *slot;
  };
  std::size_t best = n;
  std::vector<std::uint32_t> blocks;
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (blocks.size() >= best) return;
    if (i == n) {
      best = blocks.size();
      return;
    }
    const std::uint32_t bit = 1U << i;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!block_fits(blocks[b] | bit)) continue;
      blocks[b] |= bit;
      self(self, i + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    self(self, i + 1);
    blocks.pop_back();
  };
  go(go, 0);
  return best;
}

// Closed forms of the Rankin-type bound in the plane and in space.
inline double rankin_d2() { return cover::kPi / (2.0 * (1.0 - cover::kPi / 4.0)); }
inline double rankin_d3() { return 1.0 / (std::sqrt(2.0) * (0.75 - std::sqrt(2.0) / 2.0)); }

// R_1 = 0, R_{t+1} = (R_t + t^(1/d)) / 2, written out directly; r[i] = R_{i+1}.
inline std::vector<double> charikar(int d, std::size_t terms) {
  std::vector<double> r{0.0};
  for (std::size_t t = 1; t < terms; ++t) r.push_back(0.5 * (r.back() + std::pow(double(t), 1.0 / d)));
  return r;
}

inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, std::size_t d,
                                        double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(d);
    for (double& x : c) x = u(rng);
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace oracle
