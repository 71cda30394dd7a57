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
#include <string>

#include "cover/adversaries.hpp"
#include "cover/error.hpp"

namespace cover {

namespace {

// Balls the hemisphere construction may see: unit balls, or cubes of half
// side at most 1/2 (handled natively).
void require_unit(std::span<const Ball> balls, Norm norm) {
  const double cap = norm == Norm::L2 ? 1.0 : 0.5;
  for (const Ball& b : balls) {
    if (b.radius > cap + kTolerance) throw LegalityError("ball is larger than a unit ball");
  }
}

}  // namespace

SimplexAdversary::SimplexAdversary(std::size_t dim, std::optional<double> eps)
    : Adversary(dim), eps_(eps.value_or(1.0 / (4.0 * static_cast<double>(dim)))) {
  if (!(eps_ > 0.0 && eps_ < 1.0 / (2.0 * static_cast<double>(dim)))) {
    throw ArgumentError("simplex needs 0 < eps < 1/(2d)");
  }
}

AdversaryMove SimplexAdversary::step(std::span<const Ball> balls, Norm norm) {
  require_unit(balls, norm);
  const std::size_t d = dimension();
  const std::size_t k = balls.size();
  if (k == 0) return Emit{Point::zero(d)};
  if (k == d + 1) return Stop{smallest_enclosing_ball(emitted())};
  if (k > d + 1) throw LegalityError("simplex: game is over");

  const Subsphere s =
      k == 1 ? Subsphere::full(Point::zero(d), 1.0 + eps_) : hemisphere_boundary(*hemisphere_);
  hemisphere_.emplace(hemisphere_avoiding(s, balls[k - 1], norm));
  const Point p = pole(*hemisphere_);

  // The new point sits on the sphere and is orthogonal to the earlier ones.
  if (std::abs(cover::norm(p) - (1.0 + eps_)) > 1e-9) {
    throw LegalityError("simplex: pole is off the sphere of radius 1 + eps");
  }
  const Point u = normalized(p);
  for (const Point& v : directions_) {
    if (std::abs(dot(u, v)) >= 1e-9) throw LegalityError("simplex: directions are not orthogonal");
  }
  directions_.push_back(u);
  return Emit{p};
}

PlusTwoAdversary::PlusTwoAdversary(std::size_t dim, double eps)
    : Adversary(dim), simplex_(dim, eps) {
  if (dim != 2 && dim != 3) throw ArgumentError("plus2 is defined for d = 2 and d = 3");
}

AdversaryMove PlusTwoAdversary::step(std::span<const Ball> balls, Norm norm) {
  const std::size_t d = dimension();
  if (balls.size() <= d) {
    // The outer next() repeats the clearance checks, so warnings are not
    // copied from the inner game.
    return simplex_.next(balls, norm);
  }
  if (balls.size() == d + 2) return Stop{Ball(*certificate_center_, 1.0)};
  if (balls.size() > d + 2) throw LegalityError("plus2: game is over");

  const std::vector<Ball> unit = as_unit_balls(balls, norm);
  const Ball seb = smallest_enclosing_ball(emitted());
  const Point& c = seb.center;
  const double rho = 2.0 - seb.radius;
  outer_radius_ = rho;

  std::optional<Subsphere> circle;
  if (d == 2) {
    circle.emplace(Subsphere::full(c, rho));
  } else {
    std::size_t far = 0;
    double far_dist = -1.0;
    for (std::size_t i = 0; i < unit.size(); ++i) {
      const double t = distance(unit[i].center, c);
      if (t > far_dist) {
        far_dist = t;
        far = i;
      }
    }
    if (far_dist < 1e-9) {
      const Point p = c + rho * Point::unit(d, 0);
      certificate_center_ = c + (1.0 - seb.radius) * Point::unit(d, 0);
      return Emit{p};
    }
    // Great circle orthogonal to the farthest center's direction.
    const Hemisphere h(Subsphere::full(c, rho), normalized(unit[far].center - c));
    circle.emplace(hemisphere_boundary(h));
  }

  const Arc free = circle_uncovered(*circle, unit);
  const auto theta = free.longest_run_midpoint();
  if (!theta) throw LegalityError("plus2: the outer circle is fully covered");
  const Point p = circle_point(*circle, *theta);
  certificate_center_ = c + (1.0 - seb.radius) * normalized(p - c);
  return Emit{p};
}

}  // namespace cover
