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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "cover/adversaries.hpp"
#include "cover/error.hpp"

namespace cover {

// ---------------------------------------------------------------------------
// Frame

Frame::Frame(Point origin, std::vector<Point> columns)
    : origin_(std::move(origin)), columns_(std::move(columns)) {
  if (columns_.size() != origin_.dim()) throw ArgumentError("frame needs one column per axis");
  for (std::size_t a = 0; a < columns_.size(); ++a) {
    require_same_dim(origin_, columns_[a]);
    for (std::size_t b = a; b < columns_.size(); ++b) {
      const double want = a == b ? 1.0 : 0.0;
      if (std::abs(dot(columns_[a], columns_[b]) - want) > 1e-9) {
        throw ArgumentError("frame columns are not orthonormal");
      }
    }
  }
}

Frame Frame::identity(std::size_t dim) {
  std::vector<Point> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(Point::unit(dim, j));
  return Frame(Point::zero(dim), std::move(cols));
}

Point Frame::to_world(const Point& script) const {
  require_same_dim(origin_, script);
  Point w = origin_;
  for (std::size_t j = 0; j < columns_.size(); ++j) w += script[j] * columns_[j];
  return w;
}

Point Frame::to_script(const Point& world) const {
  require_same_dim(origin_, world);
  const Point rel = world - origin_;
  std::vector<double> s(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) s[j] = dot(rel, columns_[j]);
  return Point(std::move(s));
}

Frame Frame::reflected(std::size_t axis) const {
  if (axis >= columns_.size()) throw ArgumentError("frame axis out of range");
  std::vector<Point> cols = columns_;
  cols[axis] = -cols[axis];
  return Frame(origin_, std::move(cols));
}

// ---------------------------------------------------------------------------
// Adversary

Adversary::Adversary(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw ArgumentError("dimension must be >= 1");
}

AdversaryMove Adversary::next(std::span<const Ball> balls, Norm norm) {
  if (balls.size() != emitted_.size()) {
    throw LegalityError("expected " + std::to_string(emitted_.size()) + " balls, got " +
                        std::to_string(balls.size()) + " (each point must open a ball)");
  }
  for (std::size_t i = 0; i < balls.size(); ++i) {
    if (balls[i].center.dim() != dim_) throw LegalityError("ball has the wrong dimension");
    if (!contains(balls[i], emitted_[i], norm)) {
      throw LegalityError("ball " + std::to_string(i) + " does not contain its point");
    }
  }

  AdversaryMove move = step(balls, norm);

  if (auto* e = std::get_if<Emit>(&move)) {
    for (std::size_t i = 0; i < balls.size(); ++i) {
      const double gap = clearance(balls[i], e->point, norm);
      if (gap <= kTolerance) {
        std::ostringstream msg;
        msg << id() << ": point " << emitted_.size() << " is covered by ball " << i
            << " (clearance " << gap << "); tolerance exploit or failed assertion";
        throw LegalityError(msg.str());
      }
      if (gap < kAssertMargin) {
        std::ostringstream msg;
        msg << "point " << emitted_.size() << " clears ball " << i << " by only " << gap;
        warn(msg.str());
      }
    }
    emitted_.push_back(e->point);
  } else {
    const Ball& cert = std::get<Stop>(move).certificate;
    if (cert.radius > 1.0 + kTolerance) throw LegalityError("certificate is larger than a unit ball");
    for (std::size_t i = 0; i < emitted_.size(); ++i) {
      if (!contains(cert, emitted_[i])) {
        throw LegalityError(std::string(id()) + ": certificate misses point " + std::to_string(i));
      }
    }
  }
  return move;
}

std::vector<Ball> as_unit_balls(std::span<const Ball> balls, Norm norm) {
  std::vector<Ball> out;
  out.reserve(balls.size());
  for (const Ball& b : balls) {
    const double r = norm == Norm::L2 ? b.radius
                                      : b.radius * std::sqrt(static_cast<double>(b.center.dim()));
    if (r > 1.0 + kTolerance) {
      throw LegalityError("ball of L2 radius " + std::to_string(r) + " is larger than a unit ball");
    }
    out.emplace_back(b.center, r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lenses

namespace {

struct Lens {
  Point p, q;
  bool degenerate;  // p == q: the lens is the unit disk around p
  std::vector<Point> corners;
};

std::optional<Lens> make_lens(const Point& p, const Point& q) {
  if (p.dim() != 2 || q.dim() != 2) throw ArgumentError("lens is planar");
  const double d = distance(p, q);
  if (d > 2.0 + 1e-12) return std::nullopt;
  Lens lens{p, q, d < 1e-12, {}};
  if (!lens.degenerate) {
    const Point u = normalized(q - p);
    const Point perp{-u[1], u[0]};
    // Near-tangent disks meet in one point; sqrt would turn rounding in d
    // into a spurious width of order 1e-8.
    const double h = d >= 2.0 - 1e-12 ? 0.0 : std::sqrt(std::max(0.0, 1.0 - d * d / 4.0));
    const Point m = midpoint(p, q);
    lens.corners = {m + h * perp, m - h * perp};
  }
  return lens;
}

// Extreme of |x - target| over the lens: corners, plus the point of each
// boundary circle nearest (or farthest from) the target when it lies on the
// arc bounded by the other disk.
double lens_extreme(const Lens& lens, const Point& target, bool farthest) {
  const double sign = farthest ? 1.0 : -1.0;
  if (lens.degenerate) {
    const double t = distance(lens.p, target);
    return farthest ? t + 1.0 : std::max(0.0, t - 1.0);
  }
  double best = farthest ? -1.0 : std::numeric_limits<double>::infinity();
  auto consider = [&](const Point& x) {
    const double v = distance(x, target);
    best = farthest ? std::max(best, v) : std::min(best, v);
  };
  for (const Point& c : lens.corners) consider(c);
  const Point* disks[2] = {&lens.p, &lens.q};
  for (int k = 0; k < 2; ++k) {
    const Point& a = *disks[k];
    const Point& b = *disks[1 - k];
    const Point off = a - target;
    if (norm(off) < 1e-12) continue;
    const Point x = a + sign * normalized(off);
    if (distance(x, b) <= 1.0 + 1e-12) consider(x);
  }
  return best;
}

}  // namespace

std::optional<double> lens_max_distance(const Point& p, const Point& q, const Point& target) {
  auto lens = make_lens(p, q);
  if (!lens) return std::nullopt;
  return lens_extreme(*lens, target, true);
}

std::optional<double> lens_min_distance(const Point& p, const Point& q, const Point& target) {
  auto lens = make_lens(p, q);
  if (!lens) return std::nullopt;
  if (distance(target, p) <= 1.0 && distance(target, q) <= 1.0) return 0.0;
  return lens_extreme(*lens, target, false);
}

// ---------------------------------------------------------------------------
// Factory

std::unique_ptr<Adversary> make_adversary(std::string_view id, std::size_t dim) {
  if (id == "simplex") return std::make_unique<SimplexAdversary>(dim);
  if (id == "plus2") return std::make_unique<PlusTwoAdversary>(dim);
  const bool planar = id == "planar4" || id == "lat-square" || id == "lat-hex";
  if (!planar) throw ArgumentError("unknown adversary: " + std::string(id));
  if (dim != 2) throw ArgumentError(std::string(id) + " is defined in the plane only");
  if (id == "planar4") return std::make_unique<PlanarFourAdversary>();
  if (id == "lat-square") return std::make_unique<SquareLatticeAdversary>();
  return std::make_unique<HexLatticeAdversary>();
}

std::vector<std::string> adversary_ids() {
  return {"planar4", "simplex", "plus2", "lat-square", "lat-hex"};
}

std::size_t adversary_bound(std::string_view id, std::size_t dim) {
  if (id == "planar4") return 4;
  if (id == "simplex") return dim + 1;
  if (id == "plus2") return dim + 2;
  if (id == "lat-square" || id == "lat-hex") return 3;
  throw ArgumentError("unknown adversary: " + std::string(id));
}

}  // namespace cover
