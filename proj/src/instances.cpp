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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cover/error.hpp"
#include "cover/harness.hpp"
#include "cover/lattice.hpp"

namespace cover {

namespace {

std::size_t draw_count(const InstanceParams& params, std::mt19937_64& rng) {
  if (params.n) return *params.n;
  return std::uniform_int_distribution<std::size_t>(1, 12)(rng);
}

std::vector<Point> random_ball_points(const InstanceParams& params, std::mt19937_64& rng) {
  const std::size_t n = draw_count(params, rng);
  const std::size_t d = params.dim;
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Point> out;
  out.reserve(n);
  while (out.size() < n) {
    std::vector<double> v(d);
    double n2 = 0.0;
    for (double& x : v) {
      x = gauss(rng);
      n2 += x * x;
    }
    if (n2 < 1e-24) continue;
    const double r = params.spread * std::pow(unif(rng), 1.0 / static_cast<double>(d));
    const double s = r / std::sqrt(n2);
    for (double& x : v) x *= s;
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<Point> lattice_sample(std::vector<Point> pool, const InstanceParams& params,
                                  std::mt19937_64& rng) {
  const std::size_t n = draw_count(params, rng);
  if (n > pool.size()) {
    throw ArgumentError("only " + std::to_string(pool.size()) + " lattice points within the spread");
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(n), pool.end());
  return pool;
}

std::vector<Point> pentagon() {
  std::vector<Point> out;
  for (int k = 0; k < 5; ++k) {
    const double t = kTwoPi * k / 5.0;
    out.push_back(Point{std::cos(t), std::sin(t)});
  }
  return out;
}

std::vector<Point> icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Point> out;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      out.push_back(normalized(Point{0.0, a, b}));
      out.push_back(normalized(Point{a, b, 0.0}));
      out.push_back(normalized(Point{b, 0.0, a}));
    }
  }
  return out;
}

}  // namespace

PointSet generate_instance(std::string_view kind, std::uint64_t seed, const InstanceParams& params) {
  if (params.dim == 0) throw ArgumentError("dimension must be >= 1");
  if (!(params.spread > 0.0)) throw ArgumentError("spread must be > 0");
  std::mt19937_64 rng(seed);
  if (kind == "random") return {params.dim, random_ball_points(params, rng)};
  if (kind == "pentagon") return {2, pentagon()};
  if (kind == "icosahedron") return {3, icosahedron()};
  if (kind == "lattice-square" || kind == "lattice-hex") {
    if (params.dim != 2) throw ArgumentError(std::string(kind) + " instances are planar");
    const Point origin{0.0, 0.0};
    std::vector<Point> pool = kind == "lattice-square"
                                  ? square_lattice_points(origin, params.spread)
                                  : hex_lattice_points(origin, params.spread);
    return {2, lattice_sample(std::move(pool), params, rng)};
  }
  throw ArgumentError("unknown instance kind: " + std::string(kind));
}

std::vector<std::string> instance_kinds() {
  return {"random", "lattice-square", "lattice-hex", "pentagon", "icosahedron"};
}

}  // namespace cover
