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

#include <vector>

#include "freeball/models.hpp"
#include "freeball/types.hpp"

namespace freeball {

/// Discrete trajectory over a horizon of N steps: states x_0..x_N and
/// controls u_0..u_{N-1} with sampling time dt.
struct Trajectory {
  double dt = 0;
  std::vector<Vec> states;
  std::vector<Vec> controls;

  int horizon() const { return static_cast<int>(controls.size()); }
  bool dims_consistent(const RobotModel& model) const;

  /// Stacked decision vector [x_0, u_0, x_1, u_1, ..., u_{N-1}, x_N].
  Vec stacked() const;
  static Trajectory from_stacked(const RobotModel& model, int horizon, double dt,
                                 const Vec& w);
};

/// Per-stage reference states and controls for the tracking objective.
struct Reference {
  std::vector<Vec> states;    // N + 1 entries
  std::vector<Vec> controls;  // N entries
};

/// Rolls the model forward from x0 under the given controls.
Trajectory rollout(const RobotModel& model, const Vec& x0,
                   const std::vector<Vec>& controls, double dt);

}  // namespace freeball
