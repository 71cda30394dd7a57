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

// Euclidean primitives shared by the online algorithms, the offline optimum
// and the adversaries: points, closed balls, spheres of every dimension k < d
// living in an affine subspace, hemispheres and circular-arc coverage.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cover {

/// Containment slack used by every predicate that decides the game.
inline constexpr double kTolerance = 1e-9;
/// Minimum clearance an adversary expects between a new point and old balls.
inline constexpr double kAssertMargin = 1e-6;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class Norm { L2, Linf };

std::string_view norm_name(Norm norm);

/// A point (or a displacement vector) in R^d with finite coordinates.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point zero(std::size_t dim);
  /// Standard basis vector e_axis.
  static Point unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double s);

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

Point operator+(Point a, const Point& b);
Point operator-(Point a, const Point& b);
Point operator*(double s, Point a);
Point operator-(Point a);

double dot(const Point& a, const Point& b);
double norm(const Point& a);
/// Sum of squared coordinate differences, accumulated in coordinate order.
/// The SIMD kernels reproduce exactly this rounding sequence.
double squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);
double linf_distance(const Point& a, const Point& b);
Point normalized(const Point& a);
Point midpoint(const Point& a, const Point& b);

/// Throws ArgumentError unless both points live in the same space.
void require_same_dim(const Point& a, const Point& b);

/// Closed ball. Under Norm::Linf the radius is the half side of a cube.
struct Ball {
  Ball(Point center, double radius);

  Point center;
  double radius;
};

/// |center - p| <= radius + tol, the single closed containment predicate.
bool contains(const Ball& b, const Point& p, double tol = kTolerance);
bool contains(const Ball& b, const Point& p, Norm norm, double tol = kTolerance);

/// Signed clearance of p from b: distance to the center minus the radius.
double clearance(const Ball& b, const Point& p, Norm norm = Norm::L2);

/// Minimum-radius ball containing every point. Move-to-front recursion over
/// a fixed pseudo-random permutation, so results are reproducible.
Ball smallest_enclosing_ball(std::span<const Point> points);

/// Ball through the given points with center in their affine hull.
/// Affinely dependent points are skipped; returns nullopt for empty input.
std::optional<Ball> circumball(std::span<const Point> points);

/// Circumradius of a regular d-simplex (d+1 vertices) with the given side:
/// side * sqrt(d / (2(d+1))), the extremal case of Jung's theorem.
double jung_radius(double side, int d);

/// Angle poq in [0, pi].
double angle_at(const Point& o, const Point& p, const Point& q);

/// k-sphere: points at distance `radius` from `center` inside the affine
/// subspace center + span(basis). basis has k+1 orthonormal vectors.
struct Subsphere {
  Subsphere(Point center, double radius, std::vector<Point> basis);

  /// Full (d-1)-sphere with the standard basis.
  static Subsphere full(Point center, double radius);

  std::size_t k() const { return basis.size() - 1; }
  std::size_t ambient_dim() const { return center.dim(); }

  /// Orthogonal projection of x onto the sphere's affine hull.
  Point project(const Point& x) const;

  Point center;
  double radius;
  std::vector<Point> basis;
};

/// Closed hemisphere {x in S : <x - c, inward> >= 0}.
struct Hemisphere {
  Hemisphere(Subsphere sphere, Point inward);

  Subsphere sphere;
  Point inward;
};

Point pole(const Hemisphere& h);

/// Relative boundary: the (k-1)-sphere orthogonal to `inward`.
Subsphere hemisphere_boundary(const Hemisphere& h);

/// A hemisphere of s disjoint from b. The direction points away from the
/// projection of b's center onto the hull of s; concentric balls take the
/// first basis vector. The result is checked on sample points and a
/// LegalityError is raised if any sample lies within kTolerance of b.
Hemisphere hemisphere_avoiding(const Subsphere& s, const Ball& b,
                               Norm norm = Norm::L2);

/// Half-open angle interval [begin, end) in radians, 0 <= begin < end <= 2pi.
struct AngleInterval {
  double begin;
  double end;
  double length() const { return end - begin; }
};

/// A set of angles on a circle (a 1-sphere), stored as sorted disjoint
/// intervals of [0, 2pi).
class Arc {
 public:
  Arc(Subsphere circle, std::vector<AngleInterval> intervals);

  const Subsphere& circle() const { return circle_; }
  std::span<const AngleInterval> intervals() const { return intervals_; }
  double measure() const;
  bool empty() const { return intervals_.empty(); }
  bool contains_angle(double theta) const;

  /// Longest contiguous run, joining the pieces that meet at angle 0.
  /// Returns (start, length); start may be reported in [0, 2pi).
  std::optional<std::pair<double, double>> longest_run() const;
  /// Angle at the middle of the longest run.
  std::optional<double> longest_run_midpoint() const;

 private:
  Subsphere circle_;
  std::vector<AngleInterval> intervals_;
};

/// c + rho (cos t * e0 + sin t * e1).
Point circle_point(const Subsphere& circle, double theta);

/// Portion of the circle outside every ball.
Arc circle_uncovered(const Subsphere& circle, std::span<const Ball> balls);

}  // namespace cover
