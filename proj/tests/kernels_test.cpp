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


#include <cstring>
#include <random>
#include <vector>

#include "cover/kernels.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cover;
using namespace cover::simd;

TEST_CASE("columns round trip") {
  PointColumns cols(3);
  for (int i = 0; i < 37; ++i) cols.push_back(Point{double(i), -double(i), 0.5 * i});
  CHECK(cols.size() == 37);
  CHECK(cols.at(20) == Point{20.0, -20.0, 10.0});
  cols.clear();
  CHECK(cols.empty());
}

TEST_CASE("scalar kernel matches squared_distance") {
  std::mt19937_64 rng(3);
  for (std::size_t d = 1; d <= 9; ++d) {
    const auto pts = oracle::random_points(rng, 23, d, 3.0);
    PointColumns cols(d);
    for (const Point& p : pts) cols.push_back(p);
    const Point q = oracle::random_points(rng, 1, d, 3.0)[0];
    std::vector<double> out(pts.size());
    squared_distances(Isa::Scalar, cols.data().data(), cols.stride(), cols.size(), d,
                      q.coords().data(), out.data());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(out[i] == squared_distance(pts[i], q));
  }
}

TEST_CASE("avx2 kernel is bit-identical to scalar") {
  if (!isa_available(Isa::Avx2)) {
    MESSAGE("avx2 not available; skipped");
    return;
  }
  std::mt19937_64 rng(17);
  for (std::size_t d = 1; d <= 12; ++d) {
    for (std::size_t n : {1, 3, 4, 5, 8, 31, 64, 101}) {
      const auto pts = oracle::random_points(rng, n, d, 1e3);
      PointColumns cols(d);
      for (const Point& p : pts) cols.push_back(p);
      const Point q = oracle::random_points(rng, 1, d, 1e3)[0];
      std::vector<double> a(n), b(n);
      squared_distances(Isa::Scalar, cols.data().data(), cols.stride(), n, d, q.coords().data(),
                        a.data());
      squared_distances(Isa::Avx2, cols.data().data(), cols.stride(), n, d, q.coords().data(),
                        b.data());
      CHECK(std::memcmp(a.data(), b.data(), n * sizeof(double)) == 0);
    }
  }
}

TEST_CASE("forcing the isa") {
  force_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  PointColumns cols(2);
  cols.push_back(Point{0.0, 0.0});
  cols.push_back(Point{1.0, 0.0});
  cols.push_back(Point{3.0, 0.0});
  CHECK(count_within(cols, Point{0.0, 0.0}, 1.0) == 2);
  force_isa(std::nullopt);
  CHECK(isa_available(active_isa()));
  CHECK(isa_name(Isa::Scalar) == "scalar");
}
