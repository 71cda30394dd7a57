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

// Online unit covering. Points arrive one at a time; each is either assigned
// to a ball that is already open and contains it, or a new ball is opened.
// Balls never move once opened.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cover/geometry.hpp"
#include "cover/kernels.hpp"

namespace cover {

struct Assign {
  std::size_t ball;
};

struct Open {
  Ball ball;
};

using CoverDecision = std::variant<Assign, Open>;

/// Append-only list of opened balls.
class CoverState {
 public:
  explicit CoverState(std::size_t dim, Norm norm = Norm::L2);

  std::size_t dim() const { return dim_; }
  Norm norm() const { return norm_; }
  std::size_t size() const { return balls_.size(); }
  std::span<const Ball> balls() const { return balls_; }
  const Ball& ball(std::size_t i) const { return balls_.at(i); }
  /// Step at which ball i was opened.
  std::size_t opened_at(std::size_t i) const { return opened_at_.at(i); }

  /// Lowest-index ball containing p under the state's norm.
  std::optional<std::size_t> first_containing(const Point& p, double tol = kTolerance) const;

  /// Validates `d` for point p and applies it. Returns the covering ball's
  /// index. Throws LegalityError on an illegal decision.
  std::size_t apply(const CoverDecision& d, const Point& p, std::size_t step);

 private:
  std::size_t dim_;
  Norm norm_;
  std::vector<Ball> balls_;
  std::vector<std::size_t> opened_at_;
  simd::PointColumns centers_;
};

// Stateless decision rules. Each returns what the algorithm would do with p.

/// Assign to the lowest-index ball containing p, else open Ball(p, 1).
CoverDecision centered_step(const CoverState& state, const Point& p);
/// L-infinity cells prod [i_j, i_j + 1); opens the cube of half side 1/2.
CoverDecision grid_step(const CoverState& state, const Point& p);
/// Staggered 2x2 brick partition of Z^2; p must be an integer point.
CoverDecision square_lattice_step(const CoverState& state, const Point& p);
/// Seven-point hexagonal groups of the triangular lattice; p must be a lattice point.
CoverDecision hex_lattice_step(const CoverState& state, const Point& p);

/// An online covering strategy that owns its state.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;

  virtual std::string_view id() const = 0;
  virtual Norm norm() const { return Norm::L2; }

  /// Decides for p and commits the decision to the owned state.
  CoverDecision observe(const Point& p);
  const CoverState& state() const;
  std::size_t dimension() const { return dim_; }

 protected:
  explicit OnlineAlgorithm(std::size_t dim) : dim_(dim) {}
  virtual CoverDecision decide(const CoverState& state, const Point& p) = 0;

 private:
  std::size_t dim_;
  mutable std::optional<CoverState> state_;
  std::size_t steps_ = 0;
};

class CenteredAlgorithm final : public OnlineAlgorithm {
 public:
  explicit CenteredAlgorithm(std::size_t dim) : OnlineAlgorithm(dim) {}
  std::string_view id() const override { return "centered"; }

 protected:
  CoverDecision decide(const CoverState& s, const Point& p) override { return centered_step(s, p); }
};

class GridAlgorithm final : public OnlineAlgorithm {
 public:
  explicit GridAlgorithm(std::size_t dim) : OnlineAlgorithm(dim) {}
  std::string_view id() const override { return "grid"; }
  Norm norm() const override { return Norm::Linf; }

 protected:
  CoverDecision decide(const CoverState& s, const Point& p) override { return grid_step(s, p); }
};

/// Lattice algorithms follow the partition rule on lattice points and fall
/// back to the Centered rule elsewhere, so they can face any adversary.
class SquareLatticeAlgorithm final : public OnlineAlgorithm {
 public:
  SquareLatticeAlgorithm() : OnlineAlgorithm(2) {}
  std::string_view id() const override { return "lattice-square"; }

 protected:
  CoverDecision decide(const CoverState& s, const Point& p) override;
};

class HexLatticeAlgorithm final : public OnlineAlgorithm {
 public:
  HexLatticeAlgorithm() : OnlineAlgorithm(2) {}
  std::string_view id() const override { return "lattice-hex"; }

 protected:
  CoverDecision decide(const CoverState& s, const Point& p) override;
};

/// Test opponent: reuses a containing ball when there is one, otherwise
/// opens a unit ball at p shifted by a random offset of norm < 1.
class RandomLegalAlgorithm final : public OnlineAlgorithm {
 public:
  RandomLegalAlgorithm(std::size_t dim, std::uint64_t seed);
  std::string_view id() const override { return "random"; }

 protected:
  CoverDecision decide(const CoverState& s, const Point& p) override;

 private:
  std::mt19937_64 rng_;
};

/// Ids: centered, grid, lattice-square, lattice-hex, random.
std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view id, std::size_t dim,
                                                std::uint64_t seed = 0);
std::vector<std::string> algorithm_ids();

}  // namespace cover
