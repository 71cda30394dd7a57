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

// Planar lattices and their unit-disk partitions.
//
// Square lattice Z^2: rows are paired into bands r = floor(y/2); odd bands
// are shifted by one column, and each band is cut into 2x2 bricks
// gx = floor((x - s)/2), s = r mod 2. The brick's disk has center
// (2gx + s + 1/2, 2r + 1/2) and radius 1.
//
// Hexagonal lattice: the triangular point lattice a*(1, 0) + b*(1/2, sqrt3/2)
// with unit spacing. The index-7 sublattice spanned by (2, 1) and (-1, 3) in
// (a, b) coordinates is a perfect code: every point is either a sublattice
// point or adjacent to exactly one. A group is a sublattice point with its
// six neighbours, covered by the unit disk around it.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "cover/geometry.hpp"

namespace cover {

struct LatticeGroupId {
  std::int64_t a;
  std::int64_t b;
  friend auto operator<=>(const LatticeGroupId&, const LatticeGroupId&) = default;
};

enum class Lattice { Square, Hex };

Lattice parse_lattice(std::string_view name);
std::string_view lattice_name(Lattice lattice);

/// Throws ArgumentError unless p is within 1e-9 of an integer point.
std::array<std::int64_t, 2> snap_square(const Point& p);
bool is_square_lattice_point(const Point& p);

LatticeGroupId square_lattice_group(const Point& p);
Ball square_group_disk(LatticeGroupId g);
/// Aligned (non-staggered) 2x2 blocks; kept for comparison, not used by
/// the algorithm.
LatticeGroupId square_aligned_group(const Point& p);

inline const double kSqrt3 = 1.7320508075688772;

/// Coordinates of a*(1, 0) + b*(1/2, sqrt3/2).
Point hex_point(std::int64_t a, std::int64_t b);
/// (a, b) of a hexagonal lattice point; throws ArgumentError if p is not
/// within 1e-6 of one.
std::array<std::int64_t, 2> hex_coords(const Point& p);
bool is_hex_lattice_point(const Point& p);
/// Exact lattice coordinates of p (removes drift).
Point snap_hex(const Point& p);
/// Group id: the (a, b) coordinates of the group's sublattice point.
LatticeGroupId hex_lattice_group(const Point& p);
Ball hex_group_disk(LatticeGroupId g);

/// Lattice points within `radius` of `center`, sorted by distance then angle.
std::vector<Point> square_lattice_points(const Point& center, double radius);
std::vector<Point> hex_lattice_points(const Point& center, double radius);

using GroupFn = std::function<LatticeGroupId(const Point&)>;

/// Largest number of distinct groups whose points one unit disk can cover,
/// over disks anchored at lattice points, at midpoints of lattice pairs at
/// distance <= 2, and at circumcenters of lattice triples with circumradius
/// <= 1, all inside the search window.
int max_groups_per_disk(Lattice lattice, const GroupFn& group, double search_radius);

/// max_groups_per_disk with the algorithm's own partition.
int verify_partition(Lattice lattice, double search_radius);

}  // namespace cover
