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

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "cover/error.hpp"
#include "cover/harness.hpp"

namespace cover {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_number(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "not a number: '" + std::string(tok) + "'");
  }
  if (!std::isfinite(v)) throw ParseError(line, "non-finite value: '" + std::string(tok) + "'");
  return v;
}

}  // namespace

PointSet parse_points_text(std::string_view text) {
  PointSet out;
  std::size_t line_no = 0;
  bool have_header = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    const std::vector<std::string_view> toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "dim") throw ParseError(line_no, "expected header 'dim k'");
      std::size_t k = 0;
      const auto [ptr, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), k);
      if (ec != std::errc() || ptr != toks[1].data() + toks[1].size() || k == 0) {
        throw ParseError(line_no, "dimension must be a positive integer");
      }
      out.dim = k;
      have_header = true;
      continue;
    }
    if (toks.size() != out.dim) {
      throw ParseError(line_no, "expected " + std::to_string(out.dim) + " coordinates, got " +
                                    std::to_string(toks.size()));
    }
    std::vector<double> c;
    c.reserve(toks.size());
    for (std::string_view t : toks) c.push_back(parse_number(t, line_no));
    out.points.emplace_back(std::move(c));
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'dim k'");
  return out;
}

PointSet parse_points(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_points_text(buf.str());
}

std::string format_points(std::size_t dim, std::span<const Point> points) {
  std::string out = "dim " + std::to_string(dim) + "\n";
  char num[64];
  for (const Point& p : points) {
    if (p.dim() != dim) throw ArgumentError("point dimension does not match the header");
    for (std::size_t j = 0; j < dim; ++j) {
      // Print -0 as 0 so files stay tidy.
      const double v = p[j] == 0.0 ? 0.0 : p[j];
      const auto res = std::to_chars(num, num + sizeof num, v);
      if (j) out += ' ';
      out.append(num, res.ptr);
    }
    out += '\n';
  }
  return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

void write_points(const std::filesystem::path& path, std::size_t dim, std::span<const Point> points) {
  write_text(path, format_points(dim, points));
}

void write_report(const MatchReport& report, const std::filesystem::path& path) {
  write_text(path, report.to_json().dump(2) + "\n");
}

}  // namespace cover
