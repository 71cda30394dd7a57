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

// Adaptive adversaries for online unit covering.
//
// An adversary presents a point, watches the ball the algorithm opens for
// it, and chooses the next point so that no open ball contains it. When it
// stops it hands back a single unit ball containing every point presented,
// so the offline optimum is 1 and the number of balls opened is the ratio.
//
// Every geometric claim the constructions rely on is re-checked at runtime:
// each new point must clear every earlier ball by more than kTolerance
// (a clearance below kAssertMargin is recorded as a warning), and the
// certificate must contain every point. Failures raise LegalityError.

#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cover/geometry.hpp"

namespace cover {

struct Emit {
  Point point;
};

struct Stop {
  Ball certificate;
};

using AdversaryMove = std::variant<Emit, Stop>;

/// Rigid motion x -> origin + sum_j s_j * columns[j].
class Frame {
 public:
  Frame(Point origin, std::vector<Point> columns);
  static Frame identity(std::size_t dim);

  Point to_world(const Point& script) const;
  Point to_script(const Point& world) const;
  /// Same frame with column `axis` negated (a reflection of script space).
  Frame reflected(std::size_t axis) const;

  const Point& origin() const { return origin_; }
  std::span<const Point> columns() const { return columns_; }

 private:
  Point origin_;
  std::vector<Point> columns_;
};

class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual std::string_view id() const = 0;
  std::size_t dimension() const { return dim_; }

  /// `balls` are the balls opened so far, one per point presented. Checks
  /// that each ball contains the point that triggered it, then moves.
  AdversaryMove next(std::span<const Ball> balls, Norm norm);

  const std::vector<Point>& emitted() const { return emitted_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 protected:
  explicit Adversary(std::size_t dim);

  virtual AdversaryMove step(std::span<const Ball> balls, Norm norm) = 0;

  void warn(std::string message) { warnings_.push_back(std::move(message)); }

 private:
  std::size_t dim_;
  std::vector<Point> emitted_;
  std::vector<std::string> warnings_;
};

/// L2 view of an algorithm's balls: cubes become their circumscribed balls.
/// Throws LegalityError if any resulting radius exceeds 1.
std::vector<Ball> as_unit_balls(std::span<const Ball> balls, Norm norm);

// ---------------------------------------------------------------------------
// Lenses: the set of centers of unit disks containing both p and q.

/// Max distance from `target` to a center of a unit disk covering p and q;
/// nullopt if no unit disk covers both. Planar.
std::optional<double> lens_max_distance(const Point& p, const Point& q, const Point& target);
/// Min distance from `target` to such a center; nullopt if the lens is empty.
std::optional<double> lens_min_distance(const Point& p, const Point& q, const Point& target);

// ---------------------------------------------------------------------------

/// Four-point game in the plane, epsilon = 0.01.
class PlanarFourAdversary final : public Adversary {
 public:
  explicit PlanarFourAdversary(double eps = 0.01);
  std::string_view id() const override { return "planar4"; }

  /// Script coordinates of the fixed candidates.
  Point script_p2() const;
  Point script_p3() const;
  Point script_q() const;
  Point script_r() const;
  const Frame& frame() const { return frame_; }
  /// True if the fourth point was r, false if q; unset before step 4.
  std::optional<bool> chose_r() const { return chose_r_; }

 protected:
  AdversaryMove step(std::span<const Ball> balls, Norm norm) override;

 private:
  double eps_;
  Frame frame_;
  std::optional<bool> chose_r_;
};

/// Numeric form of the inequalities the planar game depends on.
struct PlanarFourInequalities {
  double p2_from_c1;          // 1 + eps^2
  double q_from_c1_sq;        // 1 + eps^2
  double q_from_c2_sq_lower;  // (1 - eps + eps^2)^2 + 2 eps
  double q_p2_sq;             // |q p2|^2
  double case2_p1_sq_upper;   // (1 - (eps + eps^2)/2)^2 + eps/2
  double case2_p3_sq_upper;   // eps^2 + (1 + eps - sqrt(eps/2))^2
};
PlanarFourInequalities planar_four_inequalities(double eps);

/// d+1 points on a sphere of radius 1 + eps around the origin, each the pole
/// of a hemisphere that every earlier ball misses.
class SimplexAdversary final : public Adversary {
 public:
  /// eps defaults to 1/(4d).
  explicit SimplexAdversary(std::size_t dim, std::optional<double> eps = std::nullopt);
  std::string_view id() const override { return "simplex"; }
  double eps() const { return eps_; }
  /// Unit directions of p_1..p_i chosen so far.
  const std::vector<Point>& directions() const { return directions_; }

 protected:
  AdversaryMove step(std::span<const Ball> balls, Norm norm) override;

 private:
  double eps_;
  std::optional<Hemisphere> hemisphere_;
  std::vector<Point> directions_;
};

/// Simplex game followed by one more point on the sphere of radius 2 - R
/// around the simplex's enclosing ball (R its radius). d in {2, 3}.
class PlusTwoAdversary final : public Adversary {
 public:
  explicit PlusTwoAdversary(std::size_t dim, double eps = 0.01);
  std::string_view id() const override { return "plus2"; }
  /// Radius of the outer sphere once known.
  std::optional<double> outer_radius() const { return outer_radius_; }

 protected:
  AdversaryMove step(std::span<const Ball> balls, Norm norm) override;

 private:
  SimplexAdversary simplex_;
  std::optional<Point> certificate_center_;
  std::optional<double> outer_radius_;
};

/// Three-point game on Z^2: p1 = (0,0), p2/p3 = +-(1,1), then (2,0) or (0,2).
class SquareLatticeAdversary final : public Adversary {
 public:
  SquareLatticeAdversary();
  std::string_view id() const override { return "lat-square"; }

 protected:
  AdversaryMove step(std::span<const Ball> balls, Norm norm) override;

 private:
  double sign_ = 1.0;
  std::optional<Ball> certificate_;
};

/// Script for the hexagonal lattice game: points p1..p7 (index 0..6) and the
/// lattice reflection through p1 that swaps p2 and p3.
struct HexScript {
  std::array<Point, 7> p;
  double mirror_angle;  // direction of the mirror line through p1
};

/// Exhaustive search over lattice points within distance 5 of p1 for
/// points meeting every constraint of the case analysis. Throws Error if
/// the constraint system has no solution.
HexScript derive_hex_script();
/// Reflection of x in the line through `through` with direction `angle`.
Point reflect_in_line(const Point& x, const Point& through, double angle);

class HexLatticeAdversary final : public Adversary {
 public:
  HexLatticeAdversary();
  std::string_view id() const override { return "lat-hex"; }
  const HexScript& script() const { return script_; }
  /// Which script point (1-based) was presented third; 0 before then.
  int third_point() const { return third_; }

 protected:
  AdversaryMove step(std::span<const Ball> balls, Norm norm) override;

 private:
  Point map(const Point& x) const;

  HexScript script_;
  bool flipped_ = false;
  int third_ = 0;
  std::optional<Ball> certificate_;
};

/// Ids: planar4, simplex, plus2, lat-square, lat-hex.
std::unique_ptr<Adversary> make_adversary(std::string_view id, std::size_t dim);
std::vector<std::string> adversary_ids();
/// Number of balls the adversary forces in dimension d.
std::size_t adversary_bound(std::string_view id, std::size_t dim);

}  // namespace cover
