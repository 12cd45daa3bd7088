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

#include "freeball/types.hpp"
#include "freeball/world.hpp"

namespace freeball {

/// Ball of guaranteed clearance around a free center point: every point p
/// with |p - center| <= radius keeps distance(p) >= margin. The radius is
/// distance(center) - margin, which makes the ball a convex inner
/// approximation of the set of points with at least `margin` clearance.
struct FreeBall {
  Vec center;
  double radius = 0;        // distance at center minus margin
  double d_at_center = 0;   // distance at center
  double margin = 0;        // required clearance absorbed into the radius

  bool contains(const Vec& p, double tol = 0.0) const {
    return (p - center).norm() <= radius + tol;
  }
};

/// Line-search parameters for ball maximization. The step grows
/// exponentially from initial_step until the unit-growth condition fails,
/// then bisection pins the largest admissible step to within tolerance.
struct LineSearchParams {
  double initial_step = 1e-3;
  double growth = 2.0;
  double tolerance = 1e-6;
  int max_expansions = 64;
};

/// Ball centered at c. Throws NotFreeError when distance(c) <= margin.
FreeBall free_ball(const World& world, const Vec& c, double margin, double t = 0.0);

/// Moves the center along the normalized distance gradient as far as the
/// distance keeps growing at unit rate (within tolerance), which guarantees
/// the original ball stays contained in the maximized one. Degenerate
/// gradients leave the ball unchanged.
FreeBall maximize_free_ball(const World& world, const Vec& c, double margin,
                            double t = 0.0, const LineSearchParams& params = {});

}  // namespace freeball
