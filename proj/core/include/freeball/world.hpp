// Copyright 2026 The Freeball Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "freeball/distance_grid.hpp"
#include "freeball/types.hpp"

namespace freeball {

/// Axis-aligned box, used both for the workspace bounds and box obstacles.
struct AlignedBox {
  Vec lo;
  Vec hi;

  bool contains(const Vec& p) const;
  double diagonal() const { return (hi - lo).norm(); }
  Vec clamp(const Vec& p) const;
  // Distance from p to the box surface, 0 inside.
  double exterior_distance(const Vec& p) const;
};

/// A single obstacle primitive, optionally translated over time by a
/// piecewise-linear schedule of center offsets (scripted dynamic obstacles).
struct Obstacle {
  enum class Shape { Sphere, Box };

  Shape shape = Shape::Sphere;
  Vec center;         // sphere center
  double radius = 0;  // sphere radius
  AlignedBox box;     // box corners

  // (time, offset) knots sorted by time; empty for static obstacles.
  std::vector<std::pair<double, Vec>> schedule;

  static Obstacle sphere(Vec center, double radius);
  static Obstacle aligned_box(Vec lo, Vec hi);

  bool is_static() const { return schedule.empty(); }
  Vec offset_at(double t) const;

  /// Euclidean distance from p to the obstacle surface at time t; 0 inside.
  double surface_distance(const Vec& p, double t) const;
  bool contains(const Vec& p, double t) const;
};

/// The workspace: bounds, obstacles, and the distance function over them.
///
/// The boundary of the workspace is treated as occupied, so the distance
/// function also decays to zero toward the bounds and plans can never leave
/// them. All distances are clamped to d_bar, which keeps the distance
/// function bounded. Immutable after construction; safe for concurrent reads.
class World {
 public:
  World(int dimension, AlignedBox bounds, std::vector<Obstacle> obstacles,
        double d_bar = 0.0);  // d_bar <= 0 selects the bounds diagonal

  int dimension() const { return dimension_; }
  const AlignedBox& bounds() const { return bounds_; }
  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  double d_bar() const { return d_bar_; }
  bool has_grid() const { return grid_.has_value(); }
  const DistanceGrid& grid() const { return *grid_; }
  bool has_dynamic_obstacles() const;

  bool contains(const Vec& p) const { return bounds_.contains(p); }

  /// Distance to the nearest occupied point (obstacles or workspace
  /// boundary) at time t, clamped to d_bar. Throws OutOfDomainError for
  /// points outside the bounds. With an attached grid the obstacle term is
  /// interpolated multilinearly from the grid instead of evaluated
  /// analytically.
  double distance(const Vec& p, double t = 0.0) const;

  /// Normalized gradient of the distance function. Returns nullopt when the
  /// gradient is degenerate (equidistant point, plateau, or d_bar
  /// saturation); callers decide how to proceed.
  std::optional<Vec> distance_gradient(const Vec& p, double t = 0.0) const;

  /// A unit direction that locally increases clearance, defined even inside
  /// obstacles. Used to push invalid ball centers back into the free set.
  Vec escape_direction(const Vec& p, double t = 0.0) const;

  /// Rasterizes the world at time t: cells whose center lies inside an
  /// obstacle are occupied, the exact Euclidean distance transform is
  /// computed, and boundary/d_bar clamping is folded in.
  DistanceGrid rasterize(double resolution, double t = 0.0,
                         std::size_t cell_budget = 1u << 24) const;

  /// Copy of this world that answers distance queries from the given grid.
  World with_grid(DistanceGrid grid) const;

 private:
  double wall_distance(const Vec& p) const;
  double obstacle_distance(const Vec& p, double t) const;

  int dimension_;
  AlignedBox bounds_;
  std::vector<Obstacle> obstacles_;
  double d_bar_;
  std::optional<DistanceGrid> grid_;
};

}  // namespace freeball
