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

// Match referee, reports, point files, instance generators and SVG output.

#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cover/adversaries.hpp"
#include "cover/geometry.hpp"
#include "cover/offline_opt.hpp"
#include "cover/online.hpp"
#include "json.hpp"

namespace cover {

// ---------------------------------------------------------------------------
// Transcript

struct TranscriptEntry {
  Point point;
  bool opened;       // Open (true) or Assign (false)
  std::size_t ball;  // index of the covering ball
};

/// Points in arrival order with the decision taken for each.
class CoverTranscript {
 public:
  CoverTranscript(std::size_t dim, Norm norm) : dim_(dim), norm_(norm) {}

  std::size_t dim() const { return dim_; }
  Norm norm() const { return norm_; }
  std::span<const TranscriptEntry> entries() const { return entries_; }
  std::span<const Ball> balls() const { return balls_; }
  std::vector<Point> points() const;

  /// Validates and records one step (throws LegalityError).
  void record(const Point& p, const CoverDecision& d);

 private:
  std::size_t dim_;
  Norm norm_;
  std::vector<TranscriptEntry> entries_;
  std::vector<Ball> balls_;
};

// ---------------------------------------------------------------------------
// Matches

struct MatchReport {
  std::string algorithm;
  std::string source_kind;  // "adversary" or "file"
  std::string source;       // adversary id or input path
  CoverTranscript transcript{1, Norm::L2};
  std::size_t balls = 0;
  std::optional<std::size_t> opt;
  std::optional<Ball> certificate;
  std::optional<OptResult> opt_cover;
  std::vector<std::string> warnings;

  std::size_t n() const { return transcript.entries().size(); }
  /// balls / opt; unset when opt is unknown.
  std::optional<double> ratio() const;
  nlohmann::ordered_json to_json() const;
};

struct MatchLimits {
  /// Compute opt_cover_exact for point files (fails above kMaxExactPoints).
  bool compute_opt = true;
  /// Abort adversary games longer than this.
  std::size_t max_steps = 64;
};

/// Plays a fixed point sequence.
MatchReport run_match(OnlineAlgorithm& algo, std::span<const Point> points, std::string source,
                      const MatchLimits& limits = {});
/// Plays against an adaptive adversary until it stops.
MatchReport run_match(OnlineAlgorithm& algo, Adversary& adversary, const MatchLimits& limits = {});

// ---------------------------------------------------------------------------
// Point files
//
//   dim 2
//   # comment
//   0 0
//   1.5 -2

struct PointSet {
  std::size_t dim = 0;
  std::vector<Point> points;
};

PointSet parse_points_text(std::string_view text);
PointSet parse_points(const std::filesystem::path& path);
/// Shortest round-trip formatting of every coordinate.
std::string format_points(std::size_t dim, std::span<const Point> points);
void write_points(const std::filesystem::path& path, std::size_t dim, std::span<const Point> points);
void write_text(const std::filesystem::path& path, std::string_view text);
void write_report(const MatchReport& report, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Instances

struct InstanceParams {
  /// Number of points; drawn from [1, 12] when unset (random kinds only).
  std::optional<std::size_t> n;
  std::size_t dim = 2;
  /// Random kinds draw from the ball of this radius around the origin.
  double spread = 2.5;
};

/// Kinds: random, lattice-square, lattice-hex, pentagon, icosahedron.
/// Deterministic for a fixed seed.
PointSet generate_instance(std::string_view kind, std::uint64_t seed,
                           const InstanceParams& params = {});
std::vector<std::string> instance_kinds();

/// CLI exit status for an error: 2 for an illegal move, 1 otherwise.
int exit_status(const std::exception& e);

// ---------------------------------------------------------------------------
// SVG

/// Numbered points, opened balls, and the optimal cover (dashed) if known.
/// Planar reports only.
std::string render_svg(const MatchReport& report);
void emit_svg(const MatchReport& report, const std::filesystem::path& path);

}  // namespace cover
