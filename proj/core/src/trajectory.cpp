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

#include "freeball/trajectory.hpp"

namespace freeball {

bool Trajectory::dims_consistent(const RobotModel& model) const {
  if (states.size() != controls.size() + 1 || controls.empty()) return false;
  for (const Vec& x : states)
    if (x.size() != model.state_dim()) return false;
  for (const Vec& u : controls)
    if (u.size() != model.control_dim()) return false;
  return dt > 0;
}

Vec Trajectory::stacked() const {
  const int nx = states.empty() ? 0 : static_cast<int>(states.front().size());
  const int nu = controls.empty() ? 0 : static_cast<int>(controls.front().size());
  const int n = static_cast<int>(states.size()) * nx +
                static_cast<int>(controls.size()) * nu;
  Vec w(n);
  int off = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    w.segment(off, nx) = states[k];
    off += nx;
    if (k < controls.size()) {
      w.segment(off, nu) = controls[k];
      off += nu;
    }
  }
  return w;
}

Trajectory Trajectory::from_stacked(const RobotModel& model, int horizon,
                                    double dt, const Vec& w) {
  const int nx = model.state_dim();
  const int nu = model.control_dim();
  Trajectory traj;
  traj.dt = dt;
  traj.states.reserve(static_cast<std::size_t>(horizon) + 1);
  traj.controls.reserve(static_cast<std::size_t>(horizon));
  int off = 0;
  for (int k = 0; k <= horizon; ++k) {
    traj.states.push_back(w.segment(off, nx));
    off += nx;
    if (k < horizon) {
      traj.controls.push_back(w.segment(off, nu));
      off += nu;
    }
  }
  return traj;
}

Trajectory rollout(const RobotModel& model, const Vec& x0,
                   const std::vector<Vec>& controls, double dt) {
  Trajectory traj;
  traj.dt = dt;
  traj.states.push_back(x0);
  traj.controls = controls;
  for (const Vec& u : controls)
    traj.states.push_back(integrate(model, traj.states.back(), u, dt));
  return traj;
}

}  // namespace freeball
