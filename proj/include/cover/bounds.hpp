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

// Numeric bounds: Newton (kissing) numbers, Rankin's upper bound on the
// number of unit balls that can touch a unit ball with pairwise angles at
// least pi/3, and a volume recurrence for online lower bounds.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cover {

/// Known kissing numbers: 1 -> 2, 2 -> 6, 3 -> 12, 4 -> 24.
std::optional<int> newton_number_known(int d);

/// Rankin's bound A*_d for d >= 2 (d <= 600):
///
///   sqrt(pi) Gamma((d-1)/2)
///   -----------------------------------------------------------------
///   2 sqrt2 Gamma(d/2) * int_0^{pi/4} sin^{d-2}(t) (cos t - cos(pi/4)) dt
///
/// The integral uses adaptive Simpson to relative error `rel_tol`.
double rankin_upper(int d, double rel_tol = 1e-9);

/// sqrt(pi/8) d^{3/2} 2^{d/2}, the growth rate of rankin_upper.
double rankin_asymptotic(int d);

struct CharikarTable {
  /// R_1, R_2, ... up to and including the first value above 1.
  std::vector<double> values;
  /// Largest t with R_t <= 1.
  std::size_t max_t = 0;
};

/// R_1 = 0, R_{t+1} = (R_t + t^{1/d}) / 2.
CharikarTable charikar_recurrence(int d);

/// Upper bound on the competitive ratio of the Centered algorithm.
double centered_ratio_bound(int d);

/// Asymptotic results with unknown constants; kept as text only.
std::vector<std::string> asymptotic_notes();

/// Everything above for one dimension, keys in a fixed order.
nlohmann::ordered_json bounds_report(int d);

}  // namespace cover
