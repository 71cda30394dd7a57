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

#include "cover/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cover/error.hpp"
#include "cover/kernels.hpp"

namespace cover {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

void require_planar(const Point& p) {
  if (p.dim() != 2) throw ArgumentError("lattice points must be two-dimensional");
}

void sort_by_distance(std::vector<Point>& pts, const Point& center) {
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    const double da = squared_distance(a, center);
    const double db = squared_distance(b, center);
    if (std::abs(da - db) > 1e-9) return da < db;
    return std::atan2(a[1] - center[1], a[0] - center[0]) <
           std::atan2(b[1] - center[1], b[0] - center[0]);
  });
}

}  // namespace

Lattice parse_lattice(std::string_view name) {
  if (name == "square") return Lattice::Square;
  if (name == "hex") return Lattice::Hex;
  throw ArgumentError("unknown lattice: " + std::string(name));
}

std::string_view lattice_name(Lattice lattice) {
  return lattice == Lattice::Square ? "square" : "hex";
}

// ---------------------------------------------------------------------------
// Square lattice

std::array<std::int64_t, 2> snap_square(const Point& p) {
  require_planar(p);
  std::array<std::int64_t, 2> out{};
  for (std::size_t k = 0; k < 2; ++k) {
    const double r = std::round(p[k]);
    if (std::abs(p[k] - r) > 1e-9) {
      throw ArgumentError("not an integer point: coordinate " + std::to_string(p[k]));
    }
    out[k] = static_cast<std::int64_t>(r);
  }
  return out;
}

bool is_square_lattice_point(const Point& p) {
  if (p.dim() != 2) return false;
  return std::abs(p[0] - std::round(p[0])) <= 1e-9 && std::abs(p[1] - std::round(p[1])) <= 1e-9;
}

LatticeGroupId square_lattice_group(const Point& p) {
  const auto [x, y] = snap_square(p);
  const std::int64_t band = floor_div(y, 2);
  const std::int64_t shift = floor_mod(band, 2);
  return {floor_div(x - shift, 2), band};
}

Ball square_group_disk(LatticeGroupId g) {
  const double shift = static_cast<double>(floor_mod(g.b, 2));
  return Ball(Point{2.0 * static_cast<double>(g.a) + shift + 0.5,
                    2.0 * static_cast<double>(g.b) + 0.5},
              1.0);
}

LatticeGroupId square_aligned_group(const Point& p) {
  const auto [x, y] = snap_square(p);
  return {floor_div(x, 2), floor_div(y, 2)};
}

std::vector<Point> square_lattice_points(const Point& center, double radius) {
  require_planar(center);
  std::vector<Point> out;
  const auto lo_x = static_cast<std::int64_t>(std::floor(center[0] - radius));
  const auto hi_x = static_cast<std::int64_t>(std::ceil(center[0] + radius));
  const auto lo_y = static_cast<std::int64_t>(std::floor(center[1] - radius));
  const auto hi_y = static_cast<std::int64_t>(std::ceil(center[1] + radius));
  for (std::int64_t x = lo_x; x <= hi_x; ++x) {
    for (std::int64_t y = lo_y; y <= hi_y; ++y) {
      Point p{static_cast<double>(x), static_cast<double>(y)};
      if (distance(p, center) <= radius + 1e-9) out.push_back(std::move(p));
    }
  }
  sort_by_distance(out, center);
  return out;
}

// ---------------------------------------------------------------------------
// Hexagonal lattice

Point hex_point(std::int64_t a, std::int64_t b) {
  const double da = static_cast<double>(a);
  const double db = static_cast<double>(b);
  return Point{da + 0.5 * db, 0.5 * kSqrt3 * db};
}

std::array<std::int64_t, 2> hex_coords(const Point& p) {
  require_planar(p);
  const auto b = static_cast<std::int64_t>(std::llround(p[1] / (0.5 * kSqrt3)));
  const auto a = static_cast<std::int64_t>(std::llround(p[0] - 0.5 * static_cast<double>(b)));
  if (distance(hex_point(a, b), p) > 1e-6) {
    throw ArgumentError("not a hexagonal lattice point: (" + std::to_string(p[0]) + ", " +
                        std::to_string(p[1]) + ")");
  }
  return {a, b};
}

bool is_hex_lattice_point(const Point& p) {
  if (p.dim() != 2) return false;
  const double b = std::round(p[1] / (0.5 * kSqrt3));
  const double a = std::round(p[0] - 0.5 * b);
  return std::hypot(a + 0.5 * b - p[0], 0.5 * kSqrt3 * b - p[1]) <= 1e-6;
}

Point snap_hex(const Point& p) {
  const auto [a, b] = hex_coords(p);
  return hex_point(a, b);
}

LatticeGroupId hex_lattice_group(const Point& p) {
  const auto [a, b] = hex_coords(p);
  static constexpr std::array<std::array<std::int64_t, 2>, 7> kSteps{
      {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};
  for (const auto& s : kSteps) {
    const std::int64_t x = a + s[0], y = b + s[1];
    // (x, y) = u*(2, 1) + v*(-1, 3) has u = (3x + y)/7, v = (2y - x)/7.
    if (floor_mod(3 * x + y, 7) == 0 && floor_mod(2 * y - x, 7) == 0) return {x, y};
  }
  throw Error("hexagonal lattice point without a group");
}

Ball hex_group_disk(LatticeGroupId g) { return Ball(hex_point(g.a, g.b), 1.0); }

std::vector<Point> hex_lattice_points(const Point& center, double radius) {
  require_planar(center);
  const double cb = center[1] / (0.5 * kSqrt3);
  const auto b_lo = static_cast<std::int64_t>(std::floor(cb - radius / (0.5 * kSqrt3))) - 1;
  const auto b_hi = static_cast<std::int64_t>(std::ceil(cb + radius / (0.5 * kSqrt3))) + 1;
  std::vector<Point> out;
  for (std::int64_t b = b_lo; b <= b_hi; ++b) {
    const double shift = 0.5 * static_cast<double>(b);
    const auto a_lo = static_cast<std::int64_t>(std::floor(center[0] - radius - shift)) - 1;
    const auto a_hi = static_cast<std::int64_t>(std::ceil(center[0] + radius - shift)) + 1;
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
      Point p = hex_point(a, b);
      if (distance(p, center) <= radius + 1e-9) out.push_back(std::move(p));
    }
  }
  sort_by_distance(out, center);
  return out;
}

// ---------------------------------------------------------------------------
// Partition check

int max_groups_per_disk(Lattice lattice, const GroupFn& group, double search_radius) {
  if (!(search_radius > 0.0)) throw ArgumentError("search radius must be > 0");
  const Point origin = Point::zero(2);
  auto points_within = [&](double r) {
    return lattice == Lattice::Square ? square_lattice_points(origin, r)
                                      : hex_lattice_points(origin, r);
  };
  const std::vector<Point> window = points_within(search_radius);
  const std::vector<Point> all = points_within(search_radius + 2.5);

  simd::PointColumns cols(2);
  std::vector<LatticeGroupId> ids;
  for (const Point& p : all) {
    cols.push_back(p);
    ids.push_back(group(p));
  }

  std::vector<Point> candidates = window;
  const double pair_limit = 2.0 + 1e-9;
  std::vector<std::vector<std::size_t>> near(window.size());
  for (std::size_t a = 0; a < window.size(); ++a) {
    for (std::size_t b = a + 1; b < window.size(); ++b) {
      if (distance(window[a], window[b]) <= pair_limit) {
        near[a].push_back(b);
        candidates.push_back(midpoint(window[a], window[b]));
      }
    }
  }
  for (std::size_t a = 0; a < window.size(); ++a) {
    for (std::size_t x = 0; x < near[a].size(); ++x) {
      for (std::size_t y = x + 1; y < near[a].size(); ++y) {
        const Point& p = window[a];
        const Point& q = window[near[a][x]];
        const Point& r = window[near[a][y]];
        if (distance(q, r) > pair_limit) continue;
        const double ax = q[0] - p[0], ay = q[1] - p[1];
        const double bx = r[0] - p[0], by = r[1] - p[1];
        const double det = 2.0 * (ax * by - ay * bx);
        if (std::abs(det) < 1e-12) continue;
        const double a2 = ax * ax + ay * ay;
        const double b2 = bx * bx + by * by;
        const Point c{p[0] + (by * a2 - ay * b2) / det, p[1] + (ax * b2 - bx * a2) / det};
        if (distance(c, p) <= 1.0 + 1e-9) candidates.push_back(c);
      }
    }
  }

  const double limit = (1.0 + kTolerance) * (1.0 + kTolerance);
  std::vector<double> d2(all.size());
  std::vector<LatticeGroupId> seen;
  int best = 0;
  for (const Point& c : candidates) {
    cols.squared_distances(c, d2);
    seen.clear();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (d2[i] <= limit) seen.push_back(ids[i]);
    }
    std::sort(seen.begin(), seen.end());
    const auto distinct = std::unique(seen.begin(), seen.end()) - seen.begin();
    best = std::max(best, static_cast<int>(distinct));
  }
  return best;
}

int verify_partition(Lattice lattice, double search_radius) {
  if (lattice == Lattice::Square) {
    return max_groups_per_disk(lattice, square_lattice_group, search_radius);
  }
  return max_groups_per_disk(lattice, hex_lattice_group, search_radius);
}

}  // namespace cover
