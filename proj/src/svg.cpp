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
#include <cstdio>
#include <limits>
#include <string>

#include "cover/error.hpp"
#include "cover/harness.hpp"

namespace cover {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kPad = 20.0;

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(const Point& c, double r) {
    x0 = std::min(x0, c[0] - r);
    y0 = std::min(y0, c[1] - r);
    x1 = std::max(x1, c[0] + r);
    y1 = std::max(y1, c[1] + r);
  }
  bool empty() const { return x0 > x1; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const MatchReport& report) {
  const CoverTranscript& t = report.transcript;
  if (t.dim() != 2) throw ArgumentError("SVG output needs a planar match (d = 2)");

  std::vector<Ball> dashed;
  if (report.certificate) dashed.push_back(*report.certificate);
  if (report.opt_cover) {
    for (const Ball& b : report.opt_cover->balls) dashed.push_back(b);
  }

  Box box;
  for (const TranscriptEntry& e : t.entries()) box.add(e.point, 0.0);
  for (const Ball& b : t.balls()) box.add(b.center, b.radius);
  for (const Ball& b : dashed) box.add(b.center, b.radius);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  const std::string size = num(kCanvas);
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (box.empty()) return out + "</svg>\n";

  const double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  const double scale = (kCanvas - 2.0 * kPad) / span;
  auto sx = [&](double x) { return num(kPad + (x - box.x0) * scale); };
  auto sy = [&](double y) { return num(kCanvas - kPad - (y - box.y0) * scale); };

  auto shape = [&](const Ball& b, bool square, const std::string& style) {
    if (square) {
      const double side = 2.0 * b.radius * scale;
      out += "<rect x=\"" + sx(b.center[0] - b.radius) + "\" y=\"" + sy(b.center[1] + b.radius) +
             "\" width=\"" + num(side) + "\" height=\"" + num(side) + "\" " + style + "/>\n";
    } else {
      out += "<circle cx=\"" + sx(b.center[0]) + "\" cy=\"" + sy(b.center[1]) + "\" r=\"" +
             num(b.radius * scale) + "\" " + style + "/>\n";
    }
  };

  const bool cubes = t.norm() == Norm::Linf;
  for (const Ball& b : t.balls()) shape(b, cubes, "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"");
  for (const Ball& b : dashed) {
    shape(b, false, "fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"6 4\"");
  }
  const auto entries = t.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Point& p = entries[i].point;
    out += "<circle cx=\"" + sx(p[0]) + "\" cy=\"" + sy(p[1]) + "\" r=\"3\" fill=\"black\"/>\n";
    out += "<text x=\"" + num(kPad + (p[0] - box.x0) * scale + 5.0) + "\" y=\"" +
           num(kCanvas - kPad - (p[1] - box.y0) * scale - 5.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + std::to_string(i + 1) + "</text>\n";
  }
  return out + "</svg>\n";
}

void emit_svg(const MatchReport& report, const std::filesystem::path& path) {
  write_text(path, render_svg(report));
}

}  // namespace cover
