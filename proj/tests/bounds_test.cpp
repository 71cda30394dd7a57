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

#include "cover/bounds.hpp"
#include "cover/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cover;

TEST_CASE("rankin bound agrees with closed forms") {
  CHECK(rankin_upper(2) == doctest::Approx(oracle::rankin_d2()).epsilon(1e-9));
  CHECK(rankin_upper(3) == doctest::Approx(oracle::rankin_d3()).epsilon(1e-9));
}

TEST_CASE("rankin bound dominates known kissing numbers") {
  for (int d = 2; d <= 24; ++d) {
    if (auto n = newton_number_known(d)) CHECK(rankin_upper(d) >= *n);
  }
  CHECK(newton_number_known(3) == 12);
  CHECK_FALSE(newton_number_known(5));
}

TEST_CASE("rankin quadrature is stable and grows like the asymptotic form") {
  for (int d : {2, 3, 4, 8, 16, 64, 200}) {
    const double a = rankin_upper(d, 1e-6);
    const double b = rankin_upper(d, 0.5e-6);
    CHECK(std::abs(a - b) <= 1e-6 * b);
  }
  // High-precision reference values for the sharply peaked integrand.
  CHECK(rankin_upper(100) == doctest::Approx(7.31172942606504279e17).epsilon(1e-8));
  CHECK(rankin_upper(300) == doctest::Approx(4.70485523729067970e48).epsilon(1e-8));
  for (int d : {100, 300, 600}) CHECK(rankin_upper(d) / rankin_asymptotic(d) == doctest::Approx(1.0).epsilon(0.05));
  CHECK_THROWS_AS(rankin_upper(1), ArgumentError);
  CHECK_THROWS_AS(rankin_upper(601), ArgumentError);
}

TEST_CASE("charikar recurrence matches direct iteration") {
  for (int d = 1; d <= 10; ++d) {
    const CharikarTable t = charikar_recurrence(d);
    const auto want = oracle::charikar(d, t.values.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(t.values[i] == doctest::Approx(want[i]).epsilon(1e-15));
    CHECK(t.values.back() > 1.0);
    CHECK(t.values[t.values.size() - 2] <= 1.0);
    CHECK(t.max_t == t.values.size() - 1);
  }
  const CharikarTable one = charikar_recurrence(1);
  REQUIRE(one.values.size() == 3);
  CHECK(one.values[2] == 1.25);
}

TEST_CASE("centered bound") {
  CHECK(centered_ratio_bound(2) == 5.0);
  CHECK(centered_ratio_bound(3) == 12.0);
  CHECK(centered_ratio_bound(6) <= rankin_upper(6));
}

TEST_CASE("report") {
  const auto r = bounds_report(2);
  CHECK(r.contains("rankin_upper"));
  CHECK(bounds_report(1)["rankin_upper"].is_null());
  CHECK_FALSE(asymptotic_notes().empty());
}
