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

#include <string>

#include "cover/error.hpp"
#include "cover/harness.hpp"

namespace cover {

namespace {

nlohmann::ordered_json coords_json(const Point& p) {
  return nlohmann::ordered_json(std::vector<double>(p.coords().begin(), p.coords().end()));
}

nlohmann::ordered_json ball_json(const Ball& b) {
  nlohmann::ordered_json j;
  j["center"] = coords_json(b.center);
  j["radius"] = b.radius;
  return j;
}

// Runs one online step through the algorithm and the independent referee.
void play(OnlineAlgorithm& algo, MatchReport& report, const Point& p) {
  const std::size_t step = report.transcript.entries().size();
  try {
    const CoverDecision d = algo.observe(p);
    report.transcript.record(p, d);
  } catch (const LegalityError& e) {
    throw LegalityError("step " + std::to_string(step) + ": " + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// CoverTranscript

std::vector<Point> CoverTranscript::points() const {
  std::vector<Point> out;
  out.reserve(entries_.size());
  for (const TranscriptEntry& e : entries_) out.push_back(e.point);
  return out;
}

void CoverTranscript::record(const Point& p, const CoverDecision& d) {
  if (p.dim() != dim_) throw LegalityError("point has the wrong dimension");
  if (const auto* a = std::get_if<Assign>(&d)) {
    if (a->ball >= balls_.size()) throw LegalityError("assign to a ball that is not open");
    if (!contains(balls_[a->ball], p, norm_)) {
      throw LegalityError("assign to ball " + std::to_string(a->ball) +
                          " which does not contain the point");
    }
    entries_.push_back({p, false, a->ball});
    return;
  }
  const Ball& b = std::get<Open>(d).ball;
  const double cap = norm_ == Norm::L2 ? 1.0 : 0.5;
  if (b.center.dim() != dim_) throw LegalityError("opened ball has the wrong dimension");
  if (b.radius > cap + kTolerance) throw LegalityError("opened ball is larger than a unit ball");
  if (!contains(b, p, norm_)) throw LegalityError("opened ball does not contain the point");
  balls_.push_back(b);
  entries_.push_back({p, true, balls_.size() - 1});
}

// ---------------------------------------------------------------------------
// MatchReport

std::optional<double> MatchReport::ratio() const {
  if (!opt || *opt == 0) return std::nullopt;
  return static_cast<double>(balls) / static_cast<double>(*opt);
}

nlohmann::ordered_json MatchReport::to_json() const {
  nlohmann::ordered_json j;
  j["algorithm"] = algorithm;
  j["source"] = {{"kind", source_kind}, {"id", source}};
  j["dimension"] = transcript.dim();
  j["norm"] = std::string(norm_name(transcript.norm()));
  j["n"] = n();
  j["balls"] = balls;
  j["opt"] = opt ? nlohmann::ordered_json(*opt) : nlohmann::ordered_json(nullptr);
  if (auto r = ratio()) {
    j["ratio"] = {{"numerator", balls}, {"denominator", *opt}, {"value", *r}};
  } else {
    j["ratio"] = nullptr;
  }
  j["certificate"] = certificate ? ball_json(*certificate) : nlohmann::ordered_json(nullptr);
  j["warnings"] = warnings;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  const auto entries = transcript.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    nlohmann::ordered_json s;
    s["step"] = i;
    s["point"] = coords_json(entries[i].point);
    s["action"] = entries[i].opened ? "open" : "assign";
    s["ball"] = entries[i].ball;
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

// ---------------------------------------------------------------------------
// run_match

MatchReport run_match(OnlineAlgorithm& algo, std::span<const Point> points, std::string source,
                      const MatchLimits& limits) {
  MatchReport report;
  report.algorithm = std::string(algo.id());
  report.source_kind = "file";
  report.source = std::move(source);
  report.transcript = CoverTranscript(algo.dimension(), algo.norm());
  if (limits.compute_opt && points.size() > kMaxExactPoints) {
    throw ArgumentError(std::to_string(points.size()) + " points is too many for the exact optimum (max " +
                        std::to_string(kMaxExactPoints) + "); pass --no-opt");
  }
  for (const Point& p : points) {
    if (p.dim() != algo.dimension()) throw ArgumentError("point dimension does not match the algorithm");
    play(algo, report, p);
  }
  report.balls = report.transcript.balls().size();
  if (limits.compute_opt && !points.empty()) {
    report.opt_cover = opt_cover_exact(points);
    report.opt = report.opt_cover->count;
  }
  return report;
}

MatchReport run_match(OnlineAlgorithm& algo, Adversary& adversary, const MatchLimits& limits) {
  if (algo.dimension() != adversary.dimension()) {
    throw ArgumentError("algorithm and adversary dimensions differ");
  }
  MatchReport report;
  report.algorithm = std::string(algo.id());
  report.source_kind = "adversary";
  report.source = std::string(adversary.id());
  report.transcript = CoverTranscript(algo.dimension(), algo.norm());
  for (std::size_t step = 0;; ++step) {
    if (step > limits.max_steps) throw Error("adversary did not stop within the step limit");
    const AdversaryMove move = adversary.next(report.transcript.balls(), algo.norm());
    if (const auto* stop = std::get_if<Stop>(&move)) {
      report.certificate = stop->certificate;
      break;
    }
    play(algo, report, std::get<Emit>(move).point);
  }
  report.balls = report.transcript.balls().size();
  report.opt = 1;
  report.warnings = adversary.warnings();
  return report;
}

int exit_status(const std::exception& e) {
  return dynamic_cast<const LegalityError*>(&e) != nullptr ? 2 : 1;
}

}  // namespace cover
