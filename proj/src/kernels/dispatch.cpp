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
#include <atomic>
#include <cstdlib>
#include <string>

#include "cover/error.hpp"
#include "cover/kernels.hpp"
#include "kernels_impl.hpp"

namespace cover::simd {

namespace {

bool cpu_has_avx2() {
#if defined(COVER_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("COVER_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Isa::Scalar;
    if (v == "avx2" && cpu_has_avx2()) return Isa::Avx2;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

// -1: not yet detected.
std::atomic<int> g_isa{-1};

SquaredDistancesFn kernel_for(Isa isa) {
#if defined(COVER_HAVE_AVX2)
  if (isa == Isa::Avx2) return &detail::squared_distances_avx2;
#endif
  (void)isa;
  return &detail::squared_distances_scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

Isa active_isa() {
  int v = g_isa.load(std::memory_order_relaxed);
  if (v < 0) {
    v = static_cast<int>(detect());
    g_isa.store(v, std::memory_order_relaxed);
  }
  return static_cast<Isa>(v);
}

void force_isa(std::optional<Isa> isa) {
  if (!isa) {
    g_isa.store(static_cast<int>(detect()), std::memory_order_relaxed);
    return;
  }
  if (!isa_available(*isa)) {
    throw ArgumentError("SIMD variant not available: " + std::string(isa_name(*isa)));
  }
  g_isa.store(static_cast<int>(*isa), std::memory_order_relaxed);
}

void squared_distances(Isa isa, const double* cols, std::size_t stride, std::size_t n,
                       std::size_t dim, const double* p, double* out) {
  if (!isa_available(isa)) {
    throw ArgumentError("SIMD variant not available: " + std::string(isa_name(isa)));
  }
  kernel_for(isa)(cols, stride, n, dim, p, out);
}

PointColumns::PointColumns(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw ArgumentError("PointColumns: dimension must be >= 1");
}

Point PointColumns::at(std::size_t i) const {
  std::vector<double> c(dim_);
  for (std::size_t j = 0; j < dim_; ++j) c[j] = data_[j * capacity_ + i];
  return Point(std::move(c));
}

void PointColumns::grow() {
  const std::size_t cap = std::max<std::size_t>(16, capacity_ * 2);
  std::vector<double> next(cap * dim_, 0.0);
  for (std::size_t j = 0; j < dim_; ++j) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(j * capacity_), size_,
                next.begin() + static_cast<std::ptrdiff_t>(j * cap));
  }
  data_ = std::move(next);
  capacity_ = cap;
}

void PointColumns::push_back(const Point& p) {
  if (p.dim() != dim_) throw ArgumentError("PointColumns: dimension mismatch");
  if (size_ == capacity_) grow();
  for (std::size_t j = 0; j < dim_; ++j) data_[j * capacity_ + size_] = p[j];
  ++size_;
}

void PointColumns::clear() { size_ = 0; }

void PointColumns::squared_distances(const Point& p, std::span<double> out) const {
  if (p.dim() != dim_) throw ArgumentError("PointColumns: dimension mismatch");
  if (out.size() < size_) throw ArgumentError("PointColumns: output span too small");
  if (size_ == 0) return;
  kernel_for(active_isa())(data_.data(), capacity_, size_, dim_, p.coords().data(), out.data());
}

std::size_t count_within(const PointColumns& pts, const Point& p, double limit_sq) {
  std::vector<double> d2(pts.size());
  pts.squared_distances(p, d2);
  return static_cast<std::size_t>(
      std::count_if(d2.begin(), d2.end(), [limit_sq](double v) { return v <= limit_sq; }));
}

}  // namespace cover::simd
