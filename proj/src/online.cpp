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

#include "cover/online.hpp"

#include <cmath>
#include <string>

#include "cover/error.hpp"
#include "cover/lattice.hpp"

namespace cover {

namespace {

double max_radius(Norm norm) { return norm == Norm::L2 ? 1.0 : 0.5; }

std::optional<std::size_t> find_ball(const CoverState& state, const Ball& target) {
  for (std::size_t i = 0; i < state.size(); ++i) {
    const Ball& b = state.ball(i);
    if (b.radius == target.radius && b.center == target.center) return i;
  }
  return std::nullopt;
}

CoverDecision open_or_assign(const CoverState& state, Ball disk) {
  if (auto i = find_ball(state, disk)) return Assign{*i};
  return Open{std::move(disk)};
}

}  // namespace

// ---------------------------------------------------------------------------
// CoverState

CoverState::CoverState(std::size_t dim, Norm norm) : dim_(dim), norm_(norm), centers_(dim) {}

std::optional<std::size_t> CoverState::first_containing(const Point& p, double tol) const {
  if (p.dim() != dim_) throw ArgumentError("point dimension does not match the cover");
  if (balls_.empty()) return std::nullopt;
  if (norm_ == Norm::L2) {
    std::vector<double> d2(balls_.size());
    centers_.squared_distances(p, d2);
    for (std::size_t i = 0; i < balls_.size(); ++i) {
      if (std::sqrt(d2[i]) - balls_[i].radius <= tol) return i;
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < balls_.size(); ++i) {
    if (contains(balls_[i], p, norm_, tol)) return i;
  }
  return std::nullopt;
}

std::size_t CoverState::apply(const CoverDecision& d, const Point& p, std::size_t step) {
  if (p.dim() != dim_) throw ArgumentError("point dimension does not match the cover");
  if (const auto* a = std::get_if<Assign>(&d)) {
    if (a->ball >= balls_.size()) {
      throw LegalityError("assign to ball " + std::to_string(a->ball) + " which is not open");
    }
    if (!contains(balls_[a->ball], p, norm_)) {
      throw LegalityError("assign to ball " + std::to_string(a->ball) +
                          " which does not contain the point");
    }
    return a->ball;
  }
  const Ball& b = std::get<Open>(d).ball;
  if (b.center.dim() != dim_) throw LegalityError("opened ball has the wrong dimension");
  if (b.radius > max_radius(norm_) + kTolerance) {
    throw LegalityError("opened ball is larger than a unit ball");
  }
  if (!contains(b, p, norm_)) throw LegalityError("opened ball does not contain the point");
  balls_.push_back(b);
  opened_at_.push_back(step);
  centers_.push_back(b.center);
  return balls_.size() - 1;
}

// ---------------------------------------------------------------------------
// Decision rules

CoverDecision centered_step(const CoverState& state, const Point& p) {
  if (auto i = state.first_containing(p)) return Assign{*i};
  return Open{Ball(p, 1.0)};
}

CoverDecision grid_step(const CoverState& state, const Point& p) {
  if (p.dim() != state.dim()) throw ArgumentError("point dimension does not match the cover");
  std::vector<double> cell(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) cell[j] = std::floor(p[j]);
  for (std::size_t i = 0; i < state.size(); ++i) {
    const Point& c = state.ball(i).center;
    bool same = true;
    for (std::size_t j = 0; j < p.dim() && same; ++j) same = std::floor(c[j]) == cell[j];
    if (same) return Assign{i};
  }
  for (double& x : cell) x += 0.5;
  return Open{Ball(Point(std::move(cell)), 0.5)};
}

CoverDecision square_lattice_step(const CoverState& state, const Point& p) {
  return open_or_assign(state, square_group_disk(square_lattice_group(p)));
}

CoverDecision hex_lattice_step(const CoverState& state, const Point& p) {
  return open_or_assign(state, hex_group_disk(hex_lattice_group(p)));
}

// ---------------------------------------------------------------------------
// Algorithms

CoverDecision OnlineAlgorithm::observe(const Point& p) {
  if (!state_) state_.emplace(dim_, norm());
  CoverDecision d = decide(*state_, p);
  state_->apply(d, p, steps_++);
  return d;
}

const CoverState& OnlineAlgorithm::state() const {
  if (!state_) state_.emplace(dim_, norm());
  return *state_;
}

CoverDecision SquareLatticeAlgorithm::decide(const CoverState& s, const Point& p) {
  return is_square_lattice_point(p) ? square_lattice_step(s, p) : centered_step(s, p);
}

CoverDecision HexLatticeAlgorithm::decide(const CoverState& s, const Point& p) {
  return is_hex_lattice_point(p) ? hex_lattice_step(s, p) : centered_step(s, p);
}

RandomLegalAlgorithm::RandomLegalAlgorithm(std::size_t dim, std::uint64_t seed)
    : OnlineAlgorithm(dim), rng_(seed) {}

CoverDecision RandomLegalAlgorithm::decide(const CoverState& s, const Point& p) {
  if (auto i = s.first_containing(p)) return Assign{*i};
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> len(0.0, 0.999);
  std::vector<double> dir(p.dim());
  double n2 = 0.0;
  while (n2 < 1e-12) {
    n2 = 0.0;
    for (double& x : dir) {
      x = gauss(rng_);
      n2 += x * x;
    }
  }
  const double scale = len(rng_) / std::sqrt(n2);
  for (std::size_t j = 0; j < dir.size(); ++j) dir[j] = p[j] + scale * dir[j];
  return Open{Ball(Point(std::move(dir)), 1.0)};
}

std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view id, std::size_t dim,
                                                std::uint64_t seed) {
  if (dim == 0) throw ArgumentError("dimension must be >= 1");
  if (id == "centered") return std::make_unique<CenteredAlgorithm>(dim);
  if (id == "grid") return std::make_unique<GridAlgorithm>(dim);
  if (id == "random") return std::make_unique<RandomLegalAlgorithm>(dim, seed);
  if (id == "lattice-square" || id == "lattice-hex") {
    if (dim != 2) throw ArgumentError(std::string(id) + " is defined in the plane only");
    if (id == "lattice-square") return std::make_unique<SquareLatticeAlgorithm>();
    return std::make_unique<HexLatticeAlgorithm>();
  }
  throw ArgumentError("unknown algorithm: " + std::string(id));
}

std::vector<std::string> algorithm_ids() {
  return {"centered", "grid", "lattice-square", "lattice-hex", "random"};
}

}  // namespace cover
