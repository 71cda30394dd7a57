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
#include <vector>

#include "cover/adversaries.hpp"
#include "cover/error.hpp"
#include "cover/lattice.hpp"

namespace cover {

namespace {

// "Every lens center is within 1 of x" may hold with equality; "no lens
// center is within 1 of x" must hold with room to spare, or a ball on the
// boundary would cover the next point under the tolerant predicate.
constexpr double kWithin = 1.0 + kTolerance;
constexpr double kBeyond = 1.0 + kAssertMargin;

bool lens_within(const Point& a, const Point& b, const Point& x) {
  const auto m = lens_max_distance(a, b, x);
  return m && *m <= kWithin;
}

bool lens_beyond(const Point& a, const Point& b, const Point& x) {
  const auto m = lens_min_distance(a, b, x);
  return !m || *m > kBeyond;
}

bool covers_all(const Point& center, std::initializer_list<const Point*> pts) {
  const Ball b(center, 1.0);
  for (const Point* p : pts) {
    if (!contains(b, *p)) return false;
  }
  return true;
}

Point centroid(const Point& a, const Point& b, const Point& c) {
  return (1.0 / 3.0) * (a + b + c);
}

bool same(const Point& a, const Point& b) { return distance(a, b) < 1e-9; }

}  // namespace

// ---------------------------------------------------------------------------
// Square lattice

SquareLatticeAdversary::SquareLatticeAdversary() : Adversary(2) {
  // The only center covering p1 and (2,0) is (1,0), which also covers p2;
  // likewise (0,1) for p1 and (0,2).
  const Point p1{0.0, 0.0}, p2{1.0, 1.0};
  if (!lens_within(p1, Point{2.0, 0.0}, p2) || !lens_within(p1, Point{0.0, 2.0}, p2)) {
    throw Error("lat-square: lens conditions fail");
  }
}

AdversaryMove SquareLatticeAdversary::step(std::span<const Ball> balls, Norm norm) {
  const std::vector<Ball> unit = as_unit_balls(balls, norm);
  auto map = [this](double x, double y) { return Point{sign_ * x, sign_ * y}; };
  switch (unit.size()) {
    case 0:
      return Emit{Point{0.0, 0.0}};
    case 1:
      // |p2 p3| = 2 sqrt 2 > 2, so D1 misses at least one of them.
      if (contains(unit[0], Point{1.0, 1.0})) sign_ = -1.0;
      return Emit{map(1.0, 1.0)};
    case 2: {
      // D2 covers p2, so by the lens condition it cannot cover both p1's
      // partners; D1 misses whichever is picked for the same reason.
      const bool use_p5 = contains(unit[1], map(2.0, 0.0));
      certificate_.emplace(use_p5 ? map(0.0, 1.0) : map(1.0, 0.0), 1.0);
      return Emit{use_p5 ? map(0.0, 2.0) : map(2.0, 0.0)};
    }
    case 3:
      return Stop{*certificate_};
    default:
      throw LegalityError("lat-square: game is over");
  }
}

// ---------------------------------------------------------------------------
// Hexagonal lattice

Point reflect_in_line(const Point& x, const Point& through, double angle) {
  const double c = std::cos(2.0 * angle), s = std::sin(2.0 * angle);
  const Point v = x - through;
  return through + Point{c * v[0] + s * v[1], s * v[0] - c * v[1]};
}

HexScript derive_hex_script() {
  const Point p1{0.0, 0.0};
  std::vector<Point> pool;
  for (const Point& v : hex_lattice_points(p1, 5.0)) {
    if (!same(v, p1)) pool.push_back(v);
  }

  // Mirror lines through p1 that map the lattice onto itself.
  std::vector<double> mirrors;
  for (int k = 0; k < 6; ++k) {
    const double angle = k * kPi / 6.0;
    bool ok = true;
    for (const Point& v : pool) {
      if (!is_hex_lattice_point(reflect_in_line(v, p1, angle))) {
        ok = false;
        break;
      }
    }
    if (ok) mirrors.push_back(angle);
  }

  for (const Point& p3 : pool) {
    for (double angle : mirrors) {
      // (a) the mirror swaps p2 and p3, which are 2 sqrt 3 apart.
      const Point p2 = snap_hex(reflect_in_line(p3, p1, angle));
      if (std::abs(distance(p2, p3) - 2.0 * kSqrt3) > 1e-9) continue;

      // (d), (e) depend on p1 and p3 only.
      std::vector<const Point*> sixes;
      for (const Point& p6 : pool) {
        if (same(p6, p3) || same(p6, p2)) continue;
        if (lens_within(p1, p6, p3) && covers_all(midpoint(p1, p6), {&p1, &p3, &p6})) {
          sixes.push_back(&p6);
        }
      }
      if (sixes.empty()) continue;

      for (const Point& p4 : pool) {
        // (b)
        if (same(p4, p3) || same(p4, p2)) continue;
        if (!lens_within(p1, p4, p3) || !covers_all(midpoint(p1, p4), {&p1, &p3, &p4})) continue;
        for (const Point& p5 : pool) {
          // (c)
          if (same(p5, p3) || same(p5, p2) || same(p5, p4)) continue;
          if (!lens_beyond(p3, p4, p5)) continue;
          if (!covers_all(centroid(p1, p3, p5), {&p1, &p3, &p5})) continue;
          for (const Point* p6 : sixes) {
            if (same(*p6, p4) || same(*p6, p5)) continue;
            for (const Point& p7 : pool) {
              // (f)
              if (same(p7, p2) || same(p7, p3) || same(p7, p4) || same(p7, p5) || same(p7, *p6)) {
                continue;
              }
              if (!lens_beyond(p1, p5, p7) || !lens_beyond(p3, *p6, p7)) continue;
              if (!covers_all(centroid(p1, p3, p7), {&p1, &p3, &p7})) continue;
              return HexScript{{p1, p2, p3, p4, p5, *p6, p7}, angle};
            }
          }
        }
      }
    }
  }
  throw Error("lat-hex: no lattice points satisfy the case analysis");
}

HexLatticeAdversary::HexLatticeAdversary() : Adversary(2), script_(derive_hex_script()) {}

Point HexLatticeAdversary::map(const Point& x) const {
  if (!flipped_) return x;
  return snap_hex(reflect_in_line(x, script_.p[0], script_.mirror_angle));
}

AdversaryMove HexLatticeAdversary::step(std::span<const Ball> balls, Norm norm) {
  const std::vector<Ball> unit = as_unit_balls(balls, norm);
  const auto& p = script_.p;
  switch (unit.size()) {
    case 0:
      return Emit{p[0]};
    case 1:
      // |p2 p3| > 2: D1 misses one of them; relabel so it misses p3.
      if (contains(unit[0], p[2])) flipped_ = true;
      return Emit{map(p[2])};
    case 2: {
      const Ball& d1 = unit[0];
      const Ball& d2 = unit[1];
      Point center = midpoint(p[0], p[3]);
      if (!contains(d2, map(p[3]))) {
        third_ = 4;
      } else if (!contains(d1, map(p[4]))) {
        third_ = 5;
        center = centroid(p[0], p[2], p[4]);
      } else if (!contains(d2, map(p[5]))) {
        third_ = 6;
        center = midpoint(p[0], p[5]);
      } else {
        third_ = 7;
        center = centroid(p[0], p[2], p[6]);
      }
      const Point c = flipped_ ? reflect_in_line(center, p[0], script_.mirror_angle) : center;
      certificate_.emplace(c, 1.0);
      return Emit{map(p[static_cast<std::size_t>(third_ - 1)])};
    }
    case 3:
      return Stop{*certificate_};
    default:
      throw LegalityError("lat-hex: game is over");
  }
}

}  // namespace cover
