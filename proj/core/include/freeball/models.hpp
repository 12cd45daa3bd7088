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

#include <memory>
#include <string>
#include <vector>

#include "freeball/types.hpp"

namespace freeball {

/// Continuous-time robot model: dynamics xdot = f(x, u), path constraints
/// (componentwise <= 0), selector matrices for positions and velocities, and
/// the kinodynamic bounds used by the continuous-time clearance margin.
///
/// Models are pure and reentrant; all Jacobians are exact.
class RobotModel {
 public:
  virtual ~RobotModel() = default;

  virtual std::string name() const = 0;
  virtual int state_dim() const = 0;
  virtual int control_dim() const = 0;
  virtual int position_dim() const = 0;

  // Indices of position / velocity components within the state.
  virtual std::vector<int> position_indices() const = 0;
  virtual std::vector<int> velocity_indices() const = 0;
  // Indices of angle components embedded on the unit circle by augment().
  virtual std::vector<int> orientation_indices() const { return {}; }

  virtual Vec dynamics(const Vec& x, const Vec& u) const = 0;
  virtual void dynamics_jacobians(const Vec& x, const Vec& u, Mat& fx, Mat& fu) const = 0;

  // Stage path constraints g(x, u) <= 0 (speed, acceleration, control box).
  virtual Vec path_constraints(const Vec& x, const Vec& u) const = 0;
  virtual void path_constraint_jacobians(const Vec& x, const Vec& u, Mat& gx,
                                         Mat& gu) const = 0;
  // State-only constraint rows, used at the terminal stage.
  virtual Vec state_constraints(const Vec& x) const = 0;
  virtual Mat state_constraint_jacobian(const Vec& x) const = 0;

  double v_max = 1.0;  // bound on the position speed |pdot|
  double a_max = 1.0;  // bound on the total acceleration |pddot|
  Vec u_min, u_max;    // control box; empty = unbounded

  Mat position_selector() const;
  Mat velocity_selector() const;
  Vec position(const Vec& x) const;

  /// Control that holds a rest state (zero velocities) in place.
  Vec steady_control() const { return Vec::Zero(control_dim()); }
  /// Copy of x with all velocity components zeroed.
  Vec rest_state(const Vec& x) const;

 protected:
  // Appends control box rows to g (and their jacobians).
  void append_control_box(const Vec& u, std::vector<double>& g) const;
  int control_box_rows() const;
};

/// Point mass: x = [p, v], u = pddot.
class DoubleIntegrator final : public RobotModel {
 public:
  explicit DoubleIntegrator(int n);
  std::string name() const override { return "double_integrator"; }
  int state_dim() const override { return 2 * n_; }
  int control_dim() const override { return n_; }
  int position_dim() const override { return n_; }
  std::vector<int> position_indices() const override;
  std::vector<int> velocity_indices() const override;
  Vec dynamics(const Vec& x, const Vec& u) const override;
  void dynamics_jacobians(const Vec& x, const Vec& u, Mat& fx, Mat& fu) const override;
  Vec path_constraints(const Vec& x, const Vec& u) const override;
  void path_constraint_jacobians(const Vec& x, const Vec& u, Mat& gx, Mat& gu) const override;
  Vec state_constraints(const Vec& x) const override;
  Mat state_constraint_jacobian(const Vec& x) const override;

 private:
  int n_;
};

/// Differential drive: x = [px, py, heading, v, omega], u = [vdot, omegadot].
class Unicycle final : public RobotModel {
 public:
  Unicycle();
  std::string name() const override { return "unicycle"; }
  int state_dim() const override { return 5; }
  int control_dim() const override { return 2; }
  int position_dim() const override { return 2; }
  std::vector<int> position_indices() const override { return {0, 1}; }
  std::vector<int> velocity_indices() const override { return {3, 4}; }
  std::vector<int> orientation_indices() const override { return {2}; }
  Vec dynamics(const Vec& x, const Vec& u) const override;
  void dynamics_jacobians(const Vec& x, const Vec& u, Mat& fx, Mat& fu) const override;
  Vec path_constraints(const Vec& x, const Vec& u) const override;
  void path_constraint_jacobians(const Vec& x, const Vec& u, Mat& gx, Mat& gu) const override;
  Vec state_constraints(const Vec& x) const override;
  Mat state_constraint_jacobian(const Vec& x) const override;

  double omega_max = 2.0;  // bound on the turn rate
};

/// Free-flying rigid body, 12 states and 6 controls:
/// x = [p(3), v(3), euler(3: roll, pitch, yaw), omega(3 body rates)],
/// u = [force(3, world frame), torque(3, body frame)].
class FreeFlyer final : public RobotModel {
 public:
  FreeFlyer();
  std::string name() const override { return "free_flyer"; }
  int state_dim() const override { return 12; }
  int control_dim() const override { return 6; }
  int position_dim() const override { return 3; }
  std::vector<int> position_indices() const override { return {0, 1, 2}; }
  std::vector<int> velocity_indices() const override { return {3, 4, 5, 9, 10, 11}; }
  std::vector<int> orientation_indices() const override { return {6, 7, 8}; }
  Vec dynamics(const Vec& x, const Vec& u) const override;
  void dynamics_jacobians(const Vec& x, const Vec& u, Mat& fx, Mat& fu) const override;
  Vec path_constraints(const Vec& x, const Vec& u) const override;
  void path_constraint_jacobians(const Vec& x, const Vec& u, Mat& gx, Mat& gu) const override;
  Vec state_constraints(const Vec& x) const override;
  Mat state_constraint_jacobian(const Vec& x) const override;

  double mass = 9.58;                       // kg
  Eigen::Vector3d inertia{0.153, 0.143, 0.162};  // diagonal body inertia
  double omega_max = 1.0;                   // bound on body rates
};

/// One fixed-step fourth-order Runge-Kutta step of the model dynamics.
Vec integrate(const RobotModel& model, const Vec& x, const Vec& u, double dt);

/// RK4 step together with its exact sensitivities dF/dx and dF/du.
void integrate_with_jacobians(const RobotModel& model, const Vec& x, const Vec& u,
                              double dt, Vec& x_next, Mat& Fx, Mat& Fu);

/// Chord distance between two angles on the unit circle; invariant to
/// adding whole turns to either argument.
double orientation_distance(double a, double b);

/// State augmentation for the tracking objective: each orientation
/// component theta is replaced by the pair (cos theta, sin theta), other
/// components pass through in order.
int augmented_dim(const RobotModel& model);
Vec augment(const RobotModel& model, const Vec& x);
Mat augment_jacobian(const RobotModel& model, const Vec& x);

}  // namespace freeball
