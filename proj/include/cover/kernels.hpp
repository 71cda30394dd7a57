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

// Batched distance kernels. A scalar reference implementation and an AVX2
// variant are compiled side by side; the variant is picked at runtime from
// CPUID unless overridden (COVER_SIMD=scalar|avx2 or force_isa()).
//
// Both variants accumulate sum_j (c_j - p_j)^2 in coordinate order with
// separate multiply and add, so their results are bit-identical to each
// other and to cover::squared_distance().

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cover/geometry.hpp"

namespace cover::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
/// Variant used by the dispatching entry points below.
Isa active_isa();
/// Pins the variant (nullopt restores auto-detection). Throws if unavailable.
void force_isa(std::optional<Isa> isa);

/// Column-major point store: coordinate j of point i is column(j)[i].
class PointColumns {
 public:
  explicit PointColumns(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t stride() const { return capacity_; }
  std::span<const double> data() const { return data_; }
  Point at(std::size_t i) const;

  void push_back(const Point& p);
  void clear();

  /// out[i] = squared_distance(at(i), p) via the active kernel.
  void squared_distances(const Point& p, std::span<double> out) const;

 private:
  void grow();

  std::size_t dim_;
  std::size_t size_ = 0;
  std::size_t capacity_ = 0;
  std::vector<double> data_;
};

/// Raw kernel entry points, `cols` laid out as in PointColumns.
using SquaredDistancesFn = void (*)(const double* cols, std::size_t stride, std::size_t n,
                                    std::size_t dim, const double* p, double* out);

void squared_distances(Isa isa, const double* cols, std::size_t stride, std::size_t n,
                       std::size_t dim, const double* p, double* out);

/// Number of points with squared distance <= limit_sq.
std::size_t count_within(const PointColumns& pts, const Point& p, double limit_sq);

}  // namespace cover::simd
