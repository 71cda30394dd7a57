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

#include "cover/adversaries.hpp"
#include "cover/error.hpp"

namespace cover {

PlanarFourInequalities planar_four_inequalities(double eps) {
  const double e2 = eps * eps;
  const double qx = 2.0 - eps + e2;
  const double a = 1.0 - (eps + e2) / 2.0;
  const double b = 1.0 + eps - std::sqrt(eps / 2.0);
  return {
      1.0 + e2,
      (-1.0 + eps) * (-1.0 + eps) + 2.0 * eps,
      (1.0 - eps + e2) * (1.0 - eps + e2) + 2.0 * eps,
      qx * qx + 2.0 * eps,
      a * a + eps / 2.0,
      e2 + b * b,
  };
}

PlanarFourAdversary::PlanarFourAdversary(double eps)
    : Adversary(2), eps_(eps), frame_(Frame::identity(2)) {
  if (!(eps > 0.0 && eps <= 0.01)) throw ArgumentError("planar4 needs 0 < eps <= 0.01");
  const PlanarFourInequalities in = planar_four_inequalities(eps);
  const bool ok = in.p2_from_c1 > 1.0 && in.q_from_c1_sq > 1.0 && in.q_from_c2_sq_lower > 1.0 &&
                  in.q_p2_sq < 4.0 && in.case2_p1_sq_upper < 1.0 && in.case2_p3_sq_upper < 1.0;
  if (!ok) throw Error("planar4: inequalities fail at this eps");
}

Point PlanarFourAdversary::script_p2() const { return {1.0 + eps_ * eps_, 0.0}; }
Point PlanarFourAdversary::script_p3() const { return {0.0, 1.0 + eps_}; }
Point PlanarFourAdversary::script_q() const { return {-1.0 + eps_, std::sqrt(2.0 * eps_)}; }
Point PlanarFourAdversary::script_r() const { return {1.0 + eps_, 1.0 + eps_}; }

AdversaryMove PlanarFourAdversary::step(std::span<const Ball> balls, Norm norm) {
  const std::vector<Ball> unit = as_unit_balls(balls, norm);
  switch (unit.size()) {
    case 0:
      return Emit{Point::zero(2)};
    case 1: {
      // c1 goes to the origin and p1 onto the nonnegative x-axis.
      const Point& c1 = unit[0].center;
      const Point off = emitted()[0] - c1;
      const Point u = cover::norm(off) < 1e-12 ? Point{1.0, 0.0} : normalized(off);
      frame_ = Frame(c1, {u, Point{-u[1], u[0]}});
      return Emit{frame_.to_world(script_p2())};
    }
    case 2:
      // The reflection fixes the x-axis, which holds c1, p1 and p2.
      if (frame_.to_script(unit[1].center)[1] > 0.0) frame_ = frame_.reflected(1);
      return Emit{frame_.to_world(script_p3())};
    case 3: {
      const bool take_r = contains(unit[2], frame_.to_world(script_q()));
      chose_r_ = take_r;
      return Emit{frame_.to_world(take_r ? script_r() : script_q())};
    }
    case 4: {
      const Point center = *chose_r_ ? Point{0.5, 0.5} : midpoint(script_q(), script_p2());
      return Stop{Ball(frame_.to_world(center), 1.0)};
    }
    default:
      throw LegalityError("planar4: game is over");
  }
}

}  // namespace cover
