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

#pragma once

#include <cstddef>

namespace cover::simd::detail {

void squared_distances_scalar(const double* cols, std::size_t stride, std::size_t n,
                              std::size_t dim, const double* p, double* out);

#if defined(COVER_HAVE_AVX2)
void squared_distances_avx2(const double* cols, std::size_t stride, std::size_t n,
                            std::size_t dim, const double* p, double* out);
#endif

}  // namespace cover::simd::detail
