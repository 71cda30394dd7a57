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


#include <cmath>
#include <map>
#include <vector>

#include "cover/error.hpp"
#include "cover/lattice.hpp"
#include "doctest.h"

using namespace cover;

TEST_CASE("square groups are 2x2 bricks inside their disk") {
  std::map<LatticeGroupId, int> size;
  for (const Point& p : square_lattice_points(Point{0.0, 0.0}, 9.0)) {
    const LatticeGroupId g = square_lattice_group(p);
    CHECK(contains(square_group_disk(g), p));
    ++size[g];
  }
  // Groups whose disk sits well inside the window are complete.
  for (const auto& [g, n] : size) {
    if (norm(square_group_disk(g).center) < 7.0) CHECK(n == 4);
  }
}

TEST_CASE("hex groups are seven-point hexagons inside their disk") {
  std::map<LatticeGroupId, int> size;
  for (const Point& p : hex_lattice_points(Point{0.0, 0.0}, 9.0)) {
    REQUIRE(is_hex_lattice_point(p));
    const LatticeGroupId g = hex_lattice_group(p);
    CHECK(contains(hex_group_disk(g), p));
    ++size[g];
  }
  for (const auto& [g, n] : size) {
    if (norm(hex_group_disk(g).center) < 7.0) CHECK(n == 7);
  }
}

TEST_CASE("hex coordinates") {
  CHECK(distance(hex_point(1, 0), hex_point(0, 1)) == doctest::Approx(1.0));
  CHECK(hex_coords(hex_point(-3, 5)) == std::array<std::int64_t, 2>{-3, 5});
  CHECK_FALSE(is_hex_lattice_point(Point{0.5, 0.5}));
  CHECK(snap_hex(Point{1.0 + 1e-8, -1e-8}) == hex_point(1, 0));
  CHECK_THROWS_AS(snap_hex(Point{0.98, 0.03}), Error);
  CHECK(is_square_lattice_point(Point{2.0, -7.0}));
  CHECK_FALSE(is_square_lattice_point(Point{2.5, -7.0}));
}

TEST_CASE("a unit disk meets at most three groups") {
  CHECK(verify_partition(Lattice::Square, 6.0) == 3);
  CHECK(verify_partition(Lattice::Hex, 6.0) == 3);
}

TEST_CASE("aligned bricks let a disk meet four groups") {
  CHECK(max_groups_per_disk(Lattice::Square, square_aligned_group, 6.0) == 4);
}

TEST_CASE("lattice names") {
  CHECK(parse_lattice("hex") == Lattice::Hex);
  CHECK(lattice_name(Lattice::Square) == "square");
  CHECK_THROWS_AS(parse_lattice("cubic"), ArgumentError);
  CHECK_THROWS_AS(verify_partition(Lattice::Square, 0.0), ArgumentError);
}
