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
#include <memory>
#include <string>
#include <vector>

#include "cover/adversaries.hpp"
#include "cover/error.hpp"
#include "cover/harness.hpp"
#include "cover/online.hpp"
#include "doctest.h"

using namespace cover;

namespace {

std::vector<std::unique_ptr<OnlineAlgorithm>> bobs(std::size_t d, int random_seeds) {
  std::vector<std::unique_ptr<OnlineAlgorithm>> out;
  out.push_back(make_algorithm("centered", d));
  out.push_back(make_algorithm("grid", d));
  if (d == 2) {
    out.push_back(make_algorithm("lattice-square", d));
    out.push_back(make_algorithm("lattice-hex", d));
  }
  for (int s = 0; s < random_seeds; ++s) out.push_back(make_algorithm("random", d, s));
  return out;
}

// Plays and checks the common contract of every adversary match.
MatchReport duel(OnlineAlgorithm& a, Adversary& x) {
  MatchReport r = run_match(a, x);
  REQUIRE(r.certificate);
  CHECK(r.certificate->radius <= 1.0 + kTolerance);
  for (const Point& p : r.transcript.points()) CHECK(contains(*r.certificate, p));
  CHECK(r.opt == std::optional<std::size_t>(1));
  CHECK(r.warnings.empty());
  CHECK(r.balls == r.n());
  return r;
}

// Opens the smallest legal ball: radius 0 at the point.
class Pinpoint final : public OnlineAlgorithm {
 public:
  explicit Pinpoint(std::size_t d) : OnlineAlgorithm(d) {}
  std::string_view id() const override { return "pinpoint"; }

 protected:
  CoverDecision decide(const CoverState& s, const Point& p) override {
    if (auto i = s.first_containing(p)) return Assign{*i};
    return Open{Ball(p, 0.0)};
  }
};

}  // namespace

TEST_CASE("frames") {
  const Frame f(Point{1.0, 2.0}, {Point{0.0, 1.0}, Point{-1.0, 0.0}});
  const Point w = f.to_world(Point{3.0, 4.0});
  CHECK(w == Point{-3.0, 5.0});
  const Point back = f.to_script(w);
  CHECK(back[0] == doctest::Approx(3.0));
  CHECK(back[1] == doctest::Approx(4.0));
  CHECK(f.reflected(1).to_world(Point{3.0, 4.0}) == Point{5.0, 5.0});
  CHECK_THROWS_AS(Frame(Point{0.0, 0.0}, {Point{1.0, 0.0}, Point{1.0, 0.0}}), ArgumentError);
}

TEST_CASE("lenses") {
  const Point p{0.0, 0.0}, q{1.0, 0.0};
  CHECK_FALSE(lens_max_distance(p, Point{2.5, 0.0}, p));
  // Corners of the lens are at (0.5, +-sqrt(3)/2).
  CHECK(*lens_max_distance(p, q, Point{0.5, 0.0}) == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(*lens_min_distance(p, q, Point{0.5, 0.0}) == 0.0);
  CHECK(*lens_min_distance(p, q, Point{0.5, 3.0}) == doctest::Approx(3.0 - std::sqrt(3.0) / 2.0));
  // Tangent disks meet in a single center.
  CHECK(*lens_max_distance(p, Point{2.0, 0.0}, Point{1.0, 0.0}) == doctest::Approx(0.0));
}

TEST_CASE("planar inequalities hold for eps in (0, 0.01]") {
  for (double eps : {1e-4, 1e-3, 5e-3, 1e-2}) {
    const PlanarFourInequalities in = planar_four_inequalities(eps);
    CHECK(in.p2_from_c1 > 1.0);
    CHECK(in.q_from_c1_sq > 1.0);
    CHECK(in.q_from_c2_sq_lower > 1.0);
    CHECK(in.q_p2_sq < 4.0);
    CHECK(in.case2_p1_sq_upper < 1.0);
    CHECK(in.case2_p3_sq_upper < 1.0);
  }
  CHECK_THROWS_AS(PlanarFourAdversary(0.05), ArgumentError);
}

TEST_CASE("planar4 forces four balls and uses both endings") {
  int chose_r = 0, chose_q = 0;
  for (auto& a : bobs(2, 60)) {
    PlanarFourAdversary x;
    CHECK(duel(*a, x).balls == 4);
    (*x.chose_r() ? chose_r : chose_q)++;
  }
  CHECK(chose_r > 0);
  CHECK(chose_q > 0);
}

TEST_CASE("simplex forces d+1 balls with orthogonal poles") {
  for (std::size_t d = 1; d <= 8; ++d) {
    for (auto& a : bobs(d, 10)) {
      SimplexAdversary x(d);
      const MatchReport r = duel(*a, x);
      CHECK(r.balls == d + 1);
      CHECK(r.certificate->radius < 1.0 - 1e-4);
      const auto& dirs = x.directions();
      for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) CHECK(std::abs(dot(dirs[i], dirs[j])) < 1e-9);
    }
  }
}

TEST_CASE("plus2 forces d+2 balls") {
  for (std::size_t d : {2, 3}) {
    for (auto& a : bobs(d, 10)) {
      PlusTwoAdversary x(d);
      CHECK(duel(*a, x).balls == d + 2);
      REQUIRE(x.outer_radius());
      CHECK(*x.outer_radius() > 1.0);
    }
  }
  CHECK_THROWS_AS(PlusTwoAdversary(4), ArgumentError);
}

TEST_CASE("lattice adversaries force three balls") {
  for (auto& a : bobs(2, 30)) {
    SquareLatticeAdversary sq;
    CHECK(duel(*a, sq).balls == 3);
  }
  for (auto& a : bobs(2, 30)) {
    HexLatticeAdversary hx;
    CHECK(duel(*a, hx).balls == 3);
    CHECK(hx.third_point() >= 4);
  }
}

TEST_CASE("hex script") {
  const HexScript s = derive_hex_script();
  CHECK(norm(s.p[0]) == doctest::Approx(0.0));
  // The mirror through p1 swaps p2 and p3.
  const Point m = reflect_in_line(s.p[1], s.p[0], s.mirror_angle);
  CHECK(distance(m, s.p[2]) < 1e-9);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) CHECK(distance(s.p[i], s.p[j]) > 0.5);
}

TEST_CASE("a degenerate but legal opponent still loses") {
  for (std::size_t d = 1; d <= 5; ++d) {
    Pinpoint a(d);
    SimplexAdversary x(d);
    CHECK(duel(a, x).balls == d + 1);
  }
  Pinpoint a(2);
  PlanarFourAdversary x;
  CHECK(duel(a, x).balls == 4);
}

TEST_CASE("adversaries reject short ball lists and games past the end") {
  SimplexAdversary x(2);
  x.next({}, Norm::L2);
  CHECK_THROWS_AS(x.next({}, Norm::L2), LegalityError);

  const std::vector<Ball> wrong{Ball(Point{5.0, 5.0}, 1.0)};
  SquareLatticeAdversary sq;
  sq.next({}, Norm::L2);
  CHECK_THROWS_AS(sq.next(wrong, Norm::L2), LegalityError);
}

TEST_CASE("factory") {
  CHECK(adversary_ids().size() == 5);
  CHECK(adversary_bound("simplex", 6) == 7);
  CHECK(adversary_bound("plus2", 3) == 5);
  CHECK(make_adversary("simplex", 5)->dimension() == 5);
  CHECK_THROWS_AS(make_adversary("planar4", 3), ArgumentError);
  CHECK_THROWS_AS(make_adversary("nope", 2), ArgumentError);
}
