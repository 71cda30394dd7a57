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

#include "cover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "cover/error.hpp"
#include "cover/geometry.hpp"

namespace cover {

namespace {

constexpr int kMaxRankinDim = 600;

struct Simpson {
  const std::function<double(double)>& f;
  int evaluations = 0;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  double run(double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = eval(a), fm = eval(m), fb = eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return refine(a, b, fa, fm, fb, whole, tol, 50);
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = eval(lm), frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return refine(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           refine(m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
  }
};

double rankin_integral(int d, double rel_tol) {
  const double c45 = std::cos(kPi / 4.0);
  const std::function<double(double)> f = [d, c45](double t) {
    return std::pow(std::sin(t), d - 2) * (std::cos(t) - c45);
  };
  // A fixed 256-panel pass sets the scale for the relative tolerance.
  const int panels = 256;
  const double h = (kPi / 4.0) / panels;
  double coarse = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = i * h;
    coarse += h / 6.0 * (f(a) + 4.0 * f(a + h / 2.0) + f(a + h));
  }
  if (!(coarse > 0.0)) throw Error("rankin integral underflows at d = " + std::to_string(d));
  // Refine panel by panel: in high d the mass sits in a narrow band below
  // pi/4 that a single top-level Simpson step samples as nearly zero.
  Simpson s{f};
  double total = 0.0;
  for (int i = 0; i < panels; ++i) total += s.run(i * h, (i + 1) * h, rel_tol * coarse / panels);
  return total;
}

}  // namespace

std::optional<int> newton_number_known(int d) {
  if (d < 1) throw ArgumentError("dimension must be >= 1");
  switch (d) {
    case 1: return 2;
    case 2: return 6;
    case 3: return 12;
    case 4: return 24;
    default: return std::nullopt;
  }
}

double rankin_upper(int d, double rel_tol) {
  if (d < 2) throw ArgumentError("rankin_upper needs d >= 2 (the integrand is undefined at d = 1)");
  if (d > kMaxRankinDim) {
    throw ArgumentError("rankin_upper overflows beyond d = " + std::to_string(kMaxRankinDim));
  }
  if (!(rel_tol > 0.0)) throw ArgumentError("tolerance must be > 0");
  const double gamma_ratio = std::exp(std::lgamma((d - 1) / 2.0) - std::lgamma(d / 2.0));
  const double value =
      std::sqrt(kPi) * gamma_ratio / (2.0 * std::sqrt(2.0) * rankin_integral(d, rel_tol));
  if (!std::isfinite(value)) throw Error("rankin_upper is not finite at d = " + std::to_string(d));
  return value;
}

double rankin_asymptotic(int d) {
  if (d < 1) throw ArgumentError("dimension must be >= 1");
  const double x = d;
  return std::sqrt(kPi / 8.0) * std::pow(x, 1.5) * std::pow(2.0, x / 2.0);
}

CharikarTable charikar_recurrence(int d) {
  if (d < 1) throw ArgumentError("dimension must be >= 1");
  CharikarTable out;
  double r = 0.0;
  out.values.push_back(r);
  for (std::size_t t = 1; r <= 1.0; ++t) {
    out.max_t = t;
    r = (r + std::pow(static_cast<double>(t), 1.0 / d)) / 2.0;
    out.values.push_back(r);
  }
  return out;
}

double centered_ratio_bound(int d) {
  if (d < 1) throw ArgumentError("dimension must be >= 1");
  switch (d) {
    case 1: return 2.0;
    case 2: return 5.0;
    case 3: return 12.0;
    case 4: return 24.0;
    default: break;
  }
  const double rankin = rankin_upper(d);
  if (auto n = newton_number_known(d)) return std::min<double>(*n, rankin);
  return rankin;
}

std::vector<std::string> asymptotic_notes() {
  return {
      "kissing number N(B_d) <= 2^(0.401 d (1 + o(1)))",
      "kissing number N(B_d) >= Omega(d^(3/2) (2/sqrt3)^d)",
  };
}

nlohmann::ordered_json bounds_report(int d) {
  if (d < 1) throw ArgumentError("dimension must be >= 1");
  nlohmann::ordered_json j;
  j["dimension"] = d;
  const auto newton = newton_number_known(d);
  j["newton_known"] = newton ? nlohmann::ordered_json(*newton) : nlohmann::ordered_json(nullptr);
  j["rankin_upper"] = d >= 2 ? nlohmann::ordered_json(rankin_upper(d)) : nlohmann::ordered_json(nullptr);
  j["rankin_asymptotic"] = rankin_asymptotic(d);
  j["centered_ratio_bound"] = centered_ratio_bound(d);
  const CharikarTable table = charikar_recurrence(d);
  j["charikar_table"] = {{"values", table.values}, {"max_t", table.max_t}};
  j["notes"] = asymptotic_notes();
  return j;
}

}  // namespace cover
