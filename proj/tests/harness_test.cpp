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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cover/adversaries.hpp"
#include "cover/error.hpp"
#include "cover/harness.hpp"
#include "cover/lattice.hpp"
#include "cover/online.hpp"
#include "doctest.h"

using namespace cover;

namespace {

class FarAway final : public OnlineAlgorithm {
 public:
  FarAway() : OnlineAlgorithm(2) {}
  std::string_view id() const override { return "far-away"; }

 protected:
  CoverDecision decide(const CoverState& s, const Point& p) override {
    if (s.size() > 0) return Assign{0};
    return Open{Ball(p, 1.0)};
  }
};

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

double min_gap(const std::vector<Point>& pts) {
  double m = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) m = std::min(m, distance(pts[i], pts[j]));
  return m;
}

}  // namespace

TEST_CASE("parse points") {
  const PointSet a = parse_points_text("dim 2\n0 0\n1 1\n");
  CHECK(a.dim == 2);
  CHECK(a.points.size() == 2);
  const PointSet b = parse_points_text("# origin\ndim 3\n\n0 0 0\n");
  REQUIRE(b.points.size() == 1);
  CHECK(b.points[0] == Point::zero(3));
  CHECK(parse_points_text("dim 1\n+2.5e0\n").points[0][0] == 2.5);
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_points_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("dim 2\n0 0\n1 2 3\n") == 3);
  CHECK(line_of("dim 2\n0 zero\n") == 2);
  CHECK(line_of("dim 2\n0 inf\n") == 2);
  CHECK(line_of("dims 2\n") == 1);
  CHECK(line_of("dim 0\n") == 1);
  CHECK(line_of("") == 1);
  CHECK_THROWS_WITH(parse_points_text("dim 2\n0 0\n1 2 3\n"), "line 3: expected 2 coordinates, got 3");
}

TEST_CASE("format round trips") {
  const std::vector<Point> pts{Point{0.1, -0.0}, Point{1e-300, 2.0 / 3.0}};
  const PointSet back = parse_points_text(format_points(2, pts));
  CHECK(back.points[0] == Point{0.1, 0.0});
  CHECK(back.points[1] == pts[1]);
  CHECK(format_points(2, pts).find("-0") == std::string::npos);
}

TEST_CASE("instances") {
  const PointSet pent = generate_instance("pentagon", 0);
  CHECK(pent.points.size() == 5);
  CHECK(min_gap(pent.points) == doctest::Approx(2.0 * std::sin(kPi / 5.0)));
  const PointSet ico = generate_instance("icosahedron", 0);
  CHECK(ico.points.size() == 12);
  CHECK(min_gap(ico.points) == doctest::Approx(1.0 / std::sin(2.0 * kPi / 5.0)));
  for (const Point& p : ico.points) CHECK(norm(p) == doctest::Approx(1.0));

  InstanceParams params;
  params.n = 9;
  params.dim = 4;
  CHECK(generate_instance("random", 7, params).points == generate_instance("random", 7, params).points);
  CHECK(generate_instance("random", 7, params).points != generate_instance("random", 8, params).points);
  for (const Point& p : generate_instance("lattice-hex", 3).points) CHECK(distance(snap_hex(p), p) < 1e-9);
  CHECK_THROWS_AS(generate_instance("torus", 1), ArgumentError);
  CHECK(instance_kinds().size() == 5);
}

TEST_CASE("the referee rejects illegal decisions") {
  CoverTranscript t(2, Norm::L2);
  CHECK_THROWS_AS(t.record(Point{0.0, 0.0}, Assign{0}), LegalityError);
  CHECK_THROWS_AS(t.record(Point{0.0, 0.0}, Open{Ball(Point{2.0, 0.0}, 1.0)}), LegalityError);
  CHECK_THROWS_AS(t.record(Point{0.0, 0.0}, Open{Ball(Point{0.0, 0.0}, 1.5)}), LegalityError);
  t.record(Point{0.0, 0.0}, Open{Ball(Point{0.5, 0.0}, 1.0)});
  CHECK_THROWS_AS(t.record(Point{2.0, 0.0}, Assign{0}), LegalityError);
  t.record(Point{1.5, 0.0}, Assign{0});
  CHECK(t.entries().size() == 2);
  CHECK(t.balls().size() == 1);

  CoverTranscript cube(2, Norm::Linf);
  CHECK_THROWS_AS(cube.record(Point{0.0, 0.0}, Open{Ball(Point{0.0, 0.0}, 0.6)}), LegalityError);
}

TEST_CASE("illegal algorithms abort the match") {
  FarAway a;
  const std::vector<Point> pts{Point{0.0, 0.0}, Point{5.0, 0.0}};
  try {
    run_match(a, pts, "inline");
    FAIL("expected LegalityError");
  } catch (const LegalityError& e) {
    CHECK(std::string(e.what()).rfind("step 1:", 0) == 0);
    CHECK(exit_status(e) == 2);
  }
  FarAway b;
  SquareLatticeAdversary x;
  CHECK_THROWS_AS(run_match(b, x), LegalityError);
}

TEST_CASE("exit status") {
  CHECK(exit_status(LegalityError("x")) == 2);
  CHECK(exit_status(ArgumentError("x")) == 1);
  CHECK(exit_status(ParseError(3, "x")) == 1);
  CHECK(exit_status(std::runtime_error("x")) == 1);
}

TEST_CASE("file matches compute opt and refuse large inputs") {
  const PointSet pent = generate_instance("pentagon", 0);
  auto c = make_algorithm("centered", 2);
  const MatchReport r = run_match(*c, pent.points, "pentagon");
  CHECK(r.balls == 5);
  CHECK(r.opt == std::optional<std::size_t>(1));
  CHECK(*r.ratio() == 5.0);

  InstanceParams params;
  params.n = 30;
  const PointSet big = generate_instance("random", 1, params);
  auto g = make_algorithm("grid", 2);
  CHECK_THROWS_AS(run_match(*g, big.points, "big"), ArgumentError);
  MatchLimits limits;
  limits.compute_opt = false;
  auto g2 = make_algorithm("grid", 2);
  const MatchReport nr = run_match(*g2, big.points, "big", limits);
  CHECK_FALSE(nr.opt);
  CHECK(nr.to_json()["ratio"].is_null());
}

TEST_CASE("report json has a fixed key order and is deterministic") {
  auto once = [] {
    auto a = make_algorithm("random", 2, 42);
    PlanarFourAdversary x;
    return run_match(*a, x).to_json().dump(2);
  };
  const std::string s = once();
  CHECK(s == once());
  const auto j = nlohmann::ordered_json::parse(s);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"algorithm", "source", "dimension", "norm", "n", "balls", "opt", "ratio",
                                         "certificate", "warnings", "steps"});
  CHECK(j["ratio"]["numerator"] == 4);
  CHECK(j["ratio"]["denominator"] == 1);
  CHECK(j["steps"].size() == 4);
  CHECK(j["steps"][0]["action"] == "open");
}

TEST_CASE("svg") {
  auto a = make_algorithm("centered", 2);
  PlanarFourAdversary x;
  const std::string duel = render_svg(run_match(*a, x));
  // Four balls, four point dots, one dashed certificate.
  CHECK(count(duel, "<circle") == 9);
  CHECK(count(duel, "<text") == 4);
  CHECK(count(duel, "stroke-dasharray") == 1);

  auto c = make_algorithm("centered", 2);
  const PointSet pent = generate_instance("pentagon", 0);
  const std::string p = render_svg(run_match(*c, pent.points, "pentagon"));
  CHECK(count(p, "<circle") == 5 + 5 + 1);

  auto g = make_algorithm("grid", 2);
  const std::vector<Point> two{Point{0.2, 0.2}, Point{1.5, 0.2}};
  CHECK(count(render_svg(run_match(*g, two, "two")), "<rect") == 1 + 2);

  MatchReport empty;
  empty.transcript = CoverTranscript(2, Norm::L2);
  const std::string e = render_svg(empty);
  CHECK(e.find("<svg") != std::string::npos);
  CHECK(e.find("</svg>") != std::string::npos);

  auto d3 = make_algorithm("centered", 3);
  SimplexAdversary sx(3);
  CHECK_THROWS_AS(render_svg(run_match(*d3, sx)), ArgumentError);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "cover_harness_test";
  std::filesystem::create_directories(dir);
  const PointSet pent = generate_instance("pentagon", 0);
  write_points(dir / "p.txt", 2, pent.points);
  CHECK(parse_points(dir / "p.txt").points == pent.points);
  auto a = make_algorithm("centered", 2);
  write_report(run_match(*a, pent.points, "p"), dir / "r.json");
  std::ifstream in(dir / "r.json");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(nlohmann::ordered_json::parse(ss.str())["balls"] == 5);
  CHECK_THROWS_AS(parse_points(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}
