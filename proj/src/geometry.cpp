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

#include "cover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <numeric>
#include <random>
#include <string>

#include "cover/error.hpp"

namespace cover {

std::string_view norm_name(Norm norm) {
  return norm == Norm::L2 ? "L2" : "Linf";
}

// ---------------------------------------------------------------------------
// Point

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ArgumentError("point must have dimension >= 1");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw ArgumentError("point coordinate is not finite");
  }
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

Point Point::zero(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

Point Point::unit(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw ArgumentError("unit vector axis out of range");
  std::vector<double> c(dim, 0.0);
  c[axis] = 1.0;
  return Point(std::move(c));
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw ArgumentError("dimension mismatch: " + std::to_string(a.dim()) +
                        " vs " + std::to_string(b.dim()));
  }
}

Point& Point::operator+=(const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& c : coords_) c *= s;
  return *this;
}

Point operator+(Point a, const Point& b) { return a += b; }
Point operator-(Point a, const Point& b) { return a -= b; }
Point operator*(double s, Point a) { return a *= s; }
Point operator-(Point a) { return a *= -1.0; }

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

double squared_distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double diff = a[i] - b[i];
    s = s + diff * diff;
  }
  return s;
}

double distance(const Point& a, const Point& b) {
  return std::sqrt(squared_distance(a, b));
}

double linf_distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Point normalized(const Point& a) {
  const double n = norm(a);
  if (n == 0.0) throw ArgumentError("cannot normalize the zero vector");
  return (1.0 / n) * a;
}

Point midpoint(const Point& a, const Point& b) { return 0.5 * (a + b); }

// ---------------------------------------------------------------------------
// Ball

Ball::Ball(Point c, double r) : center(std::move(c)), radius(r) {
  if (!std::isfinite(radius) || radius < 0.0) {
    throw ArgumentError("ball radius must be finite and >= 0");
  }
}

bool contains(const Ball& b, const Point& p, double tol) {
  return contains(b, p, Norm::L2, tol);
}

bool contains(const Ball& b, const Point& p, Norm norm, double tol) {
  if (tol < 0.0) throw ArgumentError("tolerance must be >= 0");
  return clearance(b, p, norm) <= tol;
}

double clearance(const Ball& b, const Point& p, Norm norm) {
  const double d = norm == Norm::L2 ? distance(b.center, p) : linf_distance(b.center, p);
  return d - b.radius;
}

// ---------------------------------------------------------------------------
// Circumball and smallest enclosing ball

namespace {

// Solves the small dense system a x = rhs in place by partial pivoting.
// Returns false if the matrix is numerically singular.
bool solve_dense(std::vector<double>& a, std::vector<double>& rhs, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (std::abs(a[piv * n + col]) < 1e-300) return false;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * rhs[c];
    rhs[i] = s / a[i * n + i];
  }
  return true;
}

// Ball through an affinely independent prefix-greedy subset of `pts`.
// `used` receives how many of the points made it into the support.
std::optional<Ball> solve_circumball(std::span<const Point> pts, std::size_t* used) {
  if (pts.empty()) {
    if (used) *used = 0;
    return std::nullopt;
  }
  const Point& p0 = pts[0];
  std::vector<Point> kept;
  std::vector<Point> ortho;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Point v = pts[i] - p0;
    Point r = v;
    for (const Point& q : ortho) r -= dot(r, q) * q;
    const double rn = norm(r);
    if (rn <= 1e-12 * std::max(1.0, norm(v))) continue;
    ortho.push_back((1.0 / rn) * r);
    kept.push_back(std::move(v));
  }
  if (used) *used = kept.size() + 1;
  const std::size_t k = kept.size();
  Point center = p0;
  if (k > 0) {
    std::vector<double> gram(k * k);
    std::vector<double> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) gram[i * k + j] = dot(kept[i], kept[j]);
      rhs[i] = 0.5 * gram[i * k + i];
    }
    if (!solve_dense(gram, rhs, k)) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i) center += rhs[i] * kept[i];
  }
  double r = 0.0;
  for (const Point& p : pts) r = std::max(r, distance(center, p));
  // Dependent points are not on the sphere; report the support radius only.
  if (k + 1 < pts.size()) r = distance(center, p0);
  return Ball(std::move(center), r);
}

class MoveToFront {
 public:
  explicit MoveToFront(std::span<const Point> pts) : pts_(pts), dim_(pts[0].dim()) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(0x5eb5eb5eb5eb5ebULL ^ pts.size());
    std::shuffle(order.begin(), order.end(), rng);
    list_.assign(order.begin(), order.end());
  }

  Ball run() {
    recurse(list_.end());
    return Ball(center_.value(), std::sqrt(std::max(0.0, radius_sq_)));
  }

 private:
  bool outside(const Point& p) const {
    if (!center_) return true;
    const double r = std::sqrt(std::max(0.0, radius_sq_));
    return distance(*center_, p) > r + 1e-12 * (1.0 + r);
  }

  bool push(const Point& p) {
    support_.push_back(p);
    std::size_t used = 0;
    auto ball = solve_circumball(support_, &used);
    if (!ball || used != support_.size()) {
      support_.pop_back();
      return false;
    }
    center_ = ball->center;
    radius_sq_ = ball->radius * ball->radius;
    return true;
  }

  void recurse(std::list<std::size_t>::iterator end) {
    if (support_.size() == dim_ + 1) return;
    for (auto it = list_.begin(); it != end;) {
      auto cur = it++;
      const Point& p = pts_[*cur];
      if (outside(p) && push(p)) {
        recurse(cur);
        support_.pop_back();
        list_.splice(list_.begin(), list_, cur);
      }
    }
  }

  std::span<const Point> pts_;
  std::size_t dim_;
  std::list<std::size_t> list_;
  std::vector<Point> support_;
  std::optional<Point> center_;
  double radius_sq_ = -1.0;
};

}  // namespace

std::optional<Ball> circumball(std::span<const Point> points) {
  for (const Point& p : points) require_same_dim(points[0], p);
  return solve_circumball(points, nullptr);
}

Ball smallest_enclosing_ball(std::span<const Point> points) {
  if (points.empty()) throw ArgumentError("smallest_enclosing_ball: empty input");
  for (const Point& p : points) require_same_dim(points[0], p);
  Ball b = MoveToFront(points).run();
  for (const Point& p : points) {
    if (!contains(b, p, kTolerance)) {
      throw Error("smallest_enclosing_ball: numerical failure, point outside result");
    }
  }
  return b;
}

double jung_radius(double side, int d) {
  if (d < 1) throw ArgumentError("jung_radius: dimension must be >= 1");
  if (!(side > 0.0)) throw ArgumentError("jung_radius: side must be > 0");
  return side * std::sqrt(static_cast<double>(d) / (2.0 * (d + 1)));
}

double angle_at(const Point& o, const Point& p, const Point& q) {
  const Point op = p - o;
  const Point oq = q - o;
  const double np = norm(op);
  const double nq = norm(oq);
  if (np == 0.0 || nq == 0.0) throw ArgumentError("angle_at: p or q coincides with o");
  const double c = dot(op, oq) / (np * nq);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

// ---------------------------------------------------------------------------
// Spheres and hemispheres

Subsphere::Subsphere(Point c, double r, std::vector<Point> b)
    : center(std::move(c)), radius(r), basis(std::move(b)) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ArgumentError("subsphere radius must be finite and > 0");
  }
  if (basis.empty() || basis.size() > center.dim()) {
    throw ArgumentError("subsphere basis must hold between 1 and d vectors");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require_same_dim(center, basis[i]);
    if (std::abs(dot(basis[i], basis[i]) - 1.0) > 1e-9) {
      throw ArgumentError("subsphere basis vector is not unit length");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(dot(basis[i], basis[j])) > 1e-9) {
        throw ArgumentError("subsphere basis is not orthogonal");
      }
    }
  }
}

Subsphere Subsphere::full(Point c, double r) {
  std::vector<Point> basis;
  for (std::size_t i = 0; i < c.dim(); ++i) basis.push_back(Point::unit(c.dim(), i));
  return Subsphere(std::move(c), r, std::move(basis));
}

Point Subsphere::project(const Point& x) const {
  const Point w = x - center;
  Point out = center;
  for (const Point& e : basis) out += dot(w, e) * e;
  return out;
}

Hemisphere::Hemisphere(Subsphere s, Point in) : sphere(std::move(s)), inward(std::move(in)) {
  require_same_dim(sphere.center, inward);
  if (std::abs(norm(inward) - 1.0) > 1e-9) {
    throw ArgumentError("hemisphere direction must be a unit vector");
  }
  Point in_span = Point::zero(inward.dim());
  for (const Point& e : sphere.basis) in_span += dot(inward, e) * e;
  if (distance(in_span, inward) > 1e-9) {
    throw ArgumentError("hemisphere direction must lie in the sphere's span");
  }
}

Point pole(const Hemisphere& h) { return h.sphere.center + h.sphere.radius * h.inward; }

Subsphere hemisphere_boundary(const Hemisphere& h) {
  const std::size_t k = h.sphere.k();
  if (k == 0) throw ArgumentError("a 0-hemisphere has no relative boundary");
  std::vector<std::size_t> order(h.sphere.basis.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(dot(h.sphere.basis[a], h.inward)) <
           std::abs(dot(h.sphere.basis[b], h.inward));
  });
  std::vector<Point> ortho{h.inward};
  for (std::size_t idx : order) {
    if (ortho.size() == k + 1) break;
    Point r = h.sphere.basis[idx];
    for (int pass = 0; pass < 2; ++pass) {
      for (const Point& q : ortho) r -= dot(r, q) * q;
    }
    const double rn = norm(r);
    if (rn < 1e-6) continue;
    ortho.push_back((1.0 / rn) * r);
  }
  if (ortho.size() != k + 1) throw Error("hemisphere_boundary: basis completion failed");
  ortho.erase(ortho.begin());
  return Subsphere(h.sphere.center, h.sphere.radius, std::move(ortho));
}

namespace {

std::vector<Point> hemisphere_samples(const Hemisphere& h) {
  std::vector<Point> out{pole(h)};
  if (h.sphere.k() == 0) return out;
  const Subsphere rim = hemisphere_boundary(h);
  const Point& c = h.sphere.center;
  const double r = h.sphere.radius;
  for (const Point& w : rim.basis) {
    for (double sign : {-1.0, 1.0}) {
      for (double t : {0.0, kPi / 6, kPi / 3, kPi / 2 - 1e-3, kPi / 2}) {
        out.push_back(c + r * (std::cos(t) * h.inward + (sign * std::sin(t)) * w));
      }
    }
  }
  for (std::size_t i = 0; i < rim.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < rim.basis.size(); ++j) {
      const Point diag = normalized(rim.basis[i] + rim.basis[j]);
      out.push_back(c + r * diag);
      out.push_back(c - r * diag);
    }
  }
  return out;
}

}  // namespace

Hemisphere hemisphere_avoiding(const Subsphere& s, const Ball& b, Norm norm) {
  require_same_dim(s.center, b.center);
  const Point offset = s.project(b.center) - s.center;
  Point inward = cover::norm(offset) < 1e-9 ? s.basis.front() : -normalized(offset);
  // Re-express inside the span to wash out rounding.
  Point in_span = Point::zero(inward.dim());
  for (const Point& e : s.basis) in_span += dot(inward, e) * e;
  Hemisphere h(s, normalized(in_span));
  for (const Point& x : hemisphere_samples(h)) {
    if (clearance(b, x, norm) <= kTolerance) {
      throw LegalityError("hemisphere_avoiding: hemisphere meets the ball");
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Arcs

namespace {

double wrap_angle(double t) {
  double w = std::fmod(t, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

std::vector<AngleInterval> merge(std::vector<AngleInterval> v) {
  std::sort(v.begin(), v.end(),
            [](const AngleInterval& a, const AngleInterval& b) { return a.begin < b.begin; });
  std::vector<AngleInterval> out;
  for (const AngleInterval& iv : v) {
    if (!out.empty() && iv.begin - out.back().end < 1e-12) {
      out.back().end = std::max(out.back().end, iv.end);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

}  // namespace

Arc::Arc(Subsphere circle, std::vector<AngleInterval> intervals)
    : circle_(std::move(circle)), intervals_(std::move(intervals)) {
  if (circle_.k() != 1) throw ArgumentError("arc requires a circle (k = 1)");
  double prev_end = 0.0;
  for (const AngleInterval& iv : intervals_) {
    if (!(iv.begin >= prev_end && iv.begin < iv.end && iv.end <= kTwoPi)) {
      throw ArgumentError("arc intervals must be sorted, disjoint and inside [0, 2pi)");
    }
    prev_end = iv.end;
  }
}

double Arc::measure() const {
  double m = 0.0;
  for (const AngleInterval& iv : intervals_) m += iv.length();
  return m;
}

bool Arc::contains_angle(double theta) const {
  const double t = wrap_angle(theta);
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [t](const AngleInterval& iv) { return iv.begin <= t && t < iv.end; });
}

std::optional<std::pair<double, double>> Arc::longest_run() const {
  if (intervals_.empty()) return std::nullopt;
  std::optional<std::pair<double, double>> best;
  auto consider = [&](double start, double len) {
    if (!best || len > best->second) best = std::make_pair(start, len);
  };
  const bool wraps = intervals_.size() >= 2 && intervals_.front().begin <= 1e-12 &&
                     intervals_.back().end >= kTwoPi - 1e-12;
  const std::size_t first = wraps ? 1 : 0;
  const std::size_t last = wraps ? intervals_.size() - 1 : intervals_.size();
  for (std::size_t i = first; i < last; ++i) consider(intervals_[i].begin, intervals_[i].length());
  if (wraps) {
    consider(intervals_.back().begin, intervals_.back().length() + intervals_.front().length());
  }
  return best;
}

std::optional<double> Arc::longest_run_midpoint() const {
  auto run = longest_run();
  if (!run) return std::nullopt;
  return wrap_angle(run->first + 0.5 * run->second);
}

Point circle_point(const Subsphere& circle, double theta) {
  if (circle.k() != 1) throw ArgumentError("circle_point requires a circle (k = 1)");
  return circle.center +
         circle.radius * (std::cos(theta) * circle.basis[0] + std::sin(theta) * circle.basis[1]);
}

Arc circle_uncovered(const Subsphere& circle, std::span<const Ball> balls) {
  if (circle.k() != 1) throw ArgumentError("circle_uncovered requires a circle (k = 1)");
  const double rho = circle.radius;
  const Point& e0 = circle.basis[0];
  const Point& e1 = circle.basis[1];
  std::vector<AngleInterval> covered;
  bool all = false;
  for (const Ball& b : balls) {
    require_same_dim(circle.center, b.center);
    const Point w = b.center - circle.center;
    const double a = dot(w, e0);
    const double c = dot(w, e1);
    const Point perp = w - (a * e0 + c * e1);
    const double h2 = dot(perp, perp);
    const double r2 = b.radius * b.radius;
    if (h2 > r2) continue;
    const double rr2 = r2 - h2;  // squared radius of the in-plane disk
    const double m = std::hypot(a, c);
    if (m < 1e-12) {
      if (rho * rho <= rr2) all = true;
      continue;
    }
    const double cos_phi = (rho * rho + m * m - rr2) / (2.0 * rho * m);
    if (cos_phi >= 1.0) continue;
    if (cos_phi <= -1.0) {
      all = true;
      continue;
    }
    const double phi = std::acos(cos_phi);
    const double begin = wrap_angle(std::atan2(c, a) - phi);
    const double end = begin + 2.0 * phi;
    if (end <= kTwoPi) {
      covered.push_back({begin, end});
    } else {
      covered.push_back({begin, kTwoPi});
      covered.push_back({0.0, end - kTwoPi});
    }
  }
  if (all) return Arc(circle, {});
  covered = merge(std::move(covered));
  std::vector<AngleInterval> free;
  double cursor = 0.0;
  for (const AngleInterval& iv : covered) {
    if (iv.begin - cursor > 1e-12) free.push_back({cursor, iv.begin});
    cursor = std::max(cursor, iv.end);
  }
  if (kTwoPi - cursor > 1e-12) free.push_back({cursor, kTwoPi});
  return Arc(circle, std::move(free));
}

}  // namespace cover
