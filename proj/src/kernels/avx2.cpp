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

// Built with -mavx2 only. Never called unless CPUID reports AVX2.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace cover::simd::detail {

void squared_distances_avx2(const double* cols, std::size_t stride, std::size_t n,
                            std::size_t dim, const double* p, double* out) {
  std::size_t i = 0;
  // Four points per lane group; mul and add stay separate (no FMA) so the
  // rounding matches the scalar loop exactly.
  for (; i + 8 <= n; i += 8) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (std::size_t j = 0; j < dim; ++j) {
      const __m256d q = _mm256_set1_pd(p[j]);
      const double* col = cols + j * stride + i;
      const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(col), q);
      const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(col + 4), q);
      acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(d0, d0));
      acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(d1, d1));
    }
    _mm256_storeu_pd(out + i, acc0);
    _mm256_storeu_pd(out + i + 4, acc1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < dim; ++j) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(cols + j * stride + i), _mm256_set1_pd(p[j]));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < n) squared_distances_scalar(cols + i, stride, n - i, dim, p, out + i);
}

}  // namespace cover::simd::detail
