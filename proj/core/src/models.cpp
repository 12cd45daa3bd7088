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

#include "freeball/models.hpp"

#include <cmath>

namespace freeball {

Mat RobotModel::position_selector() const {
  const auto idx = position_indices();
  Mat s = Mat::Zero(static_cast<int>(idx.size()), state_dim());
  for (std::size_t r = 0; r < idx.size(); ++r) s(static_cast<int>(r), idx[r]) = 1.0;
  return s;
}

Mat RobotModel::velocity_selector() const {
  const auto idx = velocity_indices();
  Mat s = Mat::Zero(static_cast<int>(idx.size()), state_dim());
  for (std::size_t r = 0; r < idx.size(); ++r) s(static_cast<int>(r), idx[r]) = 1.0;
  return s;
}

Vec RobotModel::position(const Vec& x) const {
  const auto idx = position_indices();
  Vec p(static_cast<int>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) p[static_cast<int>(r)] = x[idx[r]];
  return p;
}

Vec RobotModel::rest_state(const Vec& x) const {
  Vec r = x;
  for (int i : velocity_indices()) r[i] = 0.0;
  return r;
}

int RobotModel::control_box_rows() const {
  return u_min.size() > 0 ? 2 * control_dim() : 0;
}

void RobotModel::append_control_box(const Vec& u, std::vector<double>& g) const {
  if (u_min.size() == 0) return;
  for (int i = 0; i < control_dim(); ++i) {
    g.push_back(u[i] - u_max[i]);
    g.push_back(u_min[i] - u[i]);
  }
}

namespace {
// Fills the affine control-box jacobian rows starting at `row`.
void control_box_jacobian(const RobotModel& m, int row, Mat& gu) {
  if (m.u_min.size() == 0) return;
  for (int i = 0; i < m.control_dim(); ++i) {
    gu(row + 2 * i, i) = 1.0;
    gu(row + 2 * i + 1, i) = -1.0;
  }
}
}  // namespace

// ---------------------------------------------------------------------------
// DoubleIntegrator

DoubleIntegrator::DoubleIntegrator(int n) : n_(n) {
  if (n != 1 && n != 2 && n != 3)
    throw std::invalid_argument("double integrator dimension must be 1, 2 or 3");
}

std::vector<int> DoubleIntegrator::position_indices() const {
  std::vector<int> idx(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) idx[static_cast<std::size_t>(i)] = i;
  return idx;
}

std::vector<int> DoubleIntegrator::velocity_indices() const {
  std::vector<int> idx(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) idx[static_cast<std::size_t>(i)] = n_ + i;
  return idx;
}

Vec DoubleIntegrator::dynamics(const Vec& x, const Vec& u) const {
  Vec dx(2 * n_);
  dx.head(n_) = x.tail(n_);
  dx.tail(n_) = u;
  return dx;
}

void DoubleIntegrator::dynamics_jacobians(const Vec&, const Vec&, Mat& fx, Mat& fu) const {
  fx = Mat::Zero(2 * n_, 2 * n_);
  fx.topRightCorner(n_, n_).setIdentity();
  fu = Mat::Zero(2 * n_, n_);
  fu.bottomRows(n_).setIdentity();
}

Vec DoubleIntegrator::path_constraints(const Vec& x, const Vec& u) const {
  std::vector<double> g;
  g.push_back(x.tail(n_).squaredNorm() - v_max * v_max);
  g.push_back(u.squaredNorm() - a_max * a_max);
  append_control_box(u, g);
  return Eigen::Map<Vec>(g.data(), static_cast<int>(g.size()));
}

void DoubleIntegrator::path_constraint_jacobians(const Vec& x, const Vec& u,
                                                 Mat& gx, Mat& gu) const {
  const int rows = 2 + control_box_rows();
  gx = Mat::Zero(rows, state_dim());
  gu = Mat::Zero(rows, control_dim());
  gx.row(0).tail(n_) = 2.0 * x.tail(n_).transpose();
  gu.row(1) = 2.0 * u.transpose();
  control_box_jacobian(*this, 2, gu);
}

Vec DoubleIntegrator::state_constraints(const Vec& x) const {
  Vec g(1);
  g[0] = x.tail(n_).squaredNorm() - v_max * v_max;
  return g;
}

Mat DoubleIntegrator::state_constraint_jacobian(const Vec& x) const {
  Mat gx = Mat::Zero(1, state_dim());
  gx.row(0).tail(n_) = 2.0 * x.tail(n_).transpose();
  return gx;
}

// ---------------------------------------------------------------------------
// Unicycle

Unicycle::Unicycle() {
  v_max = 1.0;
  a_max = 2.0;
  u_min = Vec::Constant(2, -2.0);
  u_max = Vec::Constant(2, 2.0);
}

Vec Unicycle::dynamics(const Vec& x, const Vec& u) const {
  const double theta = x[2], v = x[3], omega = x[4];
  Vec dx(5);
  dx << v * std::cos(theta), v * std::sin(theta), omega, u[0], u[1];
  return dx;
}

void Unicycle::dynamics_jacobians(const Vec& x, const Vec&, Mat& fx, Mat& fu) const {
  const double theta = x[2], v = x[3];
  fx = Mat::Zero(5, 5);
  fx(0, 2) = -v * std::sin(theta);
  fx(0, 3) = std::cos(theta);
  fx(1, 2) = v * std::cos(theta);
  fx(1, 3) = std::sin(theta);
  fx(2, 4) = 1.0;
  fu = Mat::Zero(5, 2);
  fu(3, 0) = 1.0;
  fu(4, 1) = 1.0;
}

Vec Unicycle::path_constraints(const Vec& x, const Vec& u) const {
  const double v = x[3], omega = x[4];
  std::vector<double> g;
  g.push_back(v * v - v_max * v_max);
  g.push_back(omega * omega - omega_max * omega_max);
  // Planar acceleration of the wheel center: |pddot|^2 = vdot^2 + (v*omega)^2.
  g.push_back(u[0] * u[0] + v * v * omega * omega - a_max * a_max);
  append_control_box(u, g);
  return Eigen::Map<Vec>(g.data(), static_cast<int>(g.size()));
}

void Unicycle::path_constraint_jacobians(const Vec& x, const Vec& u, Mat& gx,
                                         Mat& gu) const {
  const double v = x[3], omega = x[4];
  const int rows = 3 + control_box_rows();
  gx = Mat::Zero(rows, 5);
  gu = Mat::Zero(rows, 2);
  gx(0, 3) = 2.0 * v;
  gx(1, 4) = 2.0 * omega;
  gx(2, 3) = 2.0 * v * omega * omega;
  gx(2, 4) = 2.0 * v * v * omega;
  gu(2, 0) = 2.0 * u[0];
  control_box_jacobian(*this, 3, gu);
}

Vec Unicycle::state_constraints(const Vec& x) const {
  const double v = x[3], omega = x[4];
  Vec g(2);
  g << v * v - v_max * v_max, omega * omega - omega_max * omega_max;
  return g;
}

Mat Unicycle::state_constraint_jacobian(const Vec& x) const {
  Mat gx = Mat::Zero(2, 5);
  gx(0, 3) = 2.0 * x[3];
  gx(1, 4) = 2.0 * x[4];
  return gx;
}

// ---------------------------------------------------------------------------
// FreeFlyer

FreeFlyer::FreeFlyer() {
  v_max = 0.5;
  a_max = 0.5;
  const double f_max = mass * a_max;
  u_min = Vec(6);
  u_max = Vec(6);
  u_min << -f_max, -f_max, -f_max, -0.2, -0.2, -0.2;
  u_max << f_max, f_max, f_max, 0.2, 0.2, 0.2;
}

Vec FreeFlyer::dynamics(const Vec& x, const Vec& u) const {
  const double roll = x[6], pitch = x[7];
  const Eigen::Vector3d v = x.segment<3>(3);
  const Eigen::Vector3d w = x.segment<3>(9);
  const Eigen::Vector3d force = u.head<3>();
  const Eigen::Vector3d torque = u.tail<3>();

  const double sr = std::sin(roll), cr = std::cos(roll);
  const double tp = std::tan(pitch), cp = std::cos(pitch);

  Vec dx(12);
  dx.segment<3>(0) = v;
  dx.segment<3>(3) = force / mass;
  // Euler-angle kinematics (roll-pitch-yaw) for body rates w.
  dx[6] = w[0] + sr * tp * w[1] + cr * tp * w[2];
  dx[7] = cr * w[1] - sr * w[2];
  dx[8] = (sr * w[1] + cr * w[2]) / cp;
  // Diagonal-inertia rigid body with gyroscopic coupling.
  dx[9] = (torque[0] - (inertia[2] - inertia[1]) * w[1] * w[2]) / inertia[0];
  dx[10] = (torque[1] - (inertia[0] - inertia[2]) * w[0] * w[2]) / inertia[1];
  dx[11] = (torque[2] - (inertia[1] - inertia[0]) * w[0] * w[1]) / inertia[2];
  return dx;
}

void FreeFlyer::dynamics_jacobians(const Vec& x, const Vec&, Mat& fx, Mat& fu) const {
  const double roll = x[6], pitch = x[7];
  const Eigen::Vector3d w = x.segment<3>(9);
  const double sr = std::sin(roll), cr = std::cos(roll);
  const double cp = std::cos(pitch), tp = std::tan(pitch);
  const double sec2 = 1.0 / (cp * cp);

  fx = Mat::Zero(12, 12);
  fx.block<3, 3>(0, 3).setIdentity();

  // d(euler rates)/d(roll, pitch, body rates)
  fx(6, 6) = cr * tp * w[1] - sr * tp * w[2];
  fx(6, 7) = sec2 * (sr * w[1] + cr * w[2]);
  fx(6, 9) = 1.0;
  fx(6, 10) = sr * tp;
  fx(6, 11) = cr * tp;

  fx(7, 6) = -sr * w[1] - cr * w[2];
  fx(7, 10) = cr;
  fx(7, 11) = -sr;

  fx(8, 6) = (cr * w[1] - sr * w[2]) / cp;
  fx(8, 7) = (sr * w[1] + cr * w[2]) * tp / cp;
  fx(8, 10) = sr / cp;
  fx(8, 11) = cr / cp;

  fx(9, 10) = -(inertia[2] - inertia[1]) * w[2] / inertia[0];
  fx(9, 11) = -(inertia[2] - inertia[1]) * w[1] / inertia[0];
  fx(10, 9) = -(inertia[0] - inertia[2]) * w[2] / inertia[1];
  fx(10, 11) = -(inertia[0] - inertia[2]) * w[0] / inertia[1];
  fx(11, 9) = -(inertia[1] - inertia[0]) * w[1] / inertia[2];
  fx(11, 10) = -(inertia[1] - inertia[0]) * w[0] / inertia[2];

  fu = Mat::Zero(12, 6);
  fu.block<3, 3>(3, 0) = Mat::Identity(3, 3) / mass;
  fu(9, 3) = 1.0 / inertia[0];
  fu(10, 4) = 1.0 / inertia[1];
  fu(11, 5) = 1.0 / inertia[2];
}

Vec FreeFlyer::path_constraints(const Vec& x, const Vec& u) const {
  std::vector<double> g;
  g.push_back(x.segment<3>(3).squaredNorm() - v_max * v_max);
  g.push_back(x.segment<3>(9).squaredNorm() - omega_max * omega_max);
  // Total acceleration |pddot| = |force| / mass.
  g.push_back(u.head<3>().squaredNorm() - mass * mass * a_max * a_max);
  append_control_box(u, g);
  return Eigen::Map<Vec>(g.data(), static_cast<int>(g.size()));
}

void FreeFlyer::path_constraint_jacobians(const Vec& x, const Vec& u, Mat& gx,
                                          Mat& gu) const {
  const int rows = 3 + control_box_rows();
  gx = Mat::Zero(rows, 12);
  gu = Mat::Zero(rows, 6);
  gx.row(0).segment<3>(3) = 2.0 * x.segment<3>(3).transpose();
  gx.row(1).segment<3>(9) = 2.0 * x.segment<3>(9).transpose();
  gu.row(2).head<3>() = 2.0 * u.head<3>().transpose();
  control_box_jacobian(*this, 3, gu);
}

Vec FreeFlyer::state_constraints(const Vec& x) const {
  Vec g(2);
  g << x.segment<3>(3).squaredNorm() - v_max * v_max,
      x.segment<3>(9).squaredNorm() - omega_max * omega_max;
  return g;
}

Mat FreeFlyer::state_constraint_jacobian(const Vec& x) const {
  Mat gx = Mat::Zero(2, 12);
  gx.row(0).segment<3>(3) = 2.0 * x.segment<3>(3).transpose();
  gx.row(1).segment<3>(9) = 2.0 * x.segment<3>(9).transpose();
  return gx;
}

// ---------------------------------------------------------------------------
// Integration

Vec integrate(const RobotModel& model, const Vec& x, const Vec& u, double dt) {
  if (dt <= 0) throw std::invalid_argument("integration step must be > 0");
  if (!x.allFinite() || !u.allFinite())
    throw NumericError("non-finite state or control");
  const Vec k1 = model.dynamics(x, u);
  const Vec k2 = model.dynamics(x + 0.5 * dt * k1, u);
  const Vec k3 = model.dynamics(x + 0.5 * dt * k2, u);
  const Vec k4 = model.dynamics(x + dt * k3, u);
  Vec next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!next.allFinite()) throw NumericError("non-finite integration result");
  return next;
}

void integrate_with_jacobians(const RobotModel& model, const Vec& x, const Vec& u,
                              double dt, Vec& x_next, Mat& Fx, Mat& Fu) {
  if (dt <= 0) throw std::invalid_argument("integration step must be > 0");
  if (!x.allFinite() || !u.allFinite())
    throw NumericError("non-finite state or control");
  const int nx = model.state_dim();

  Mat a1, a2, a3, a4, b1, b2, b3, b4;
  const Vec k1 = model.dynamics(x, u);
  model.dynamics_jacobians(x, u, a1, b1);
  const Vec x2 = x + 0.5 * dt * k1;
  const Vec k2 = model.dynamics(x2, u);
  model.dynamics_jacobians(x2, u, a2, b2);
  const Vec x3 = x + 0.5 * dt * k2;
  const Vec k3 = model.dynamics(x3, u);
  model.dynamics_jacobians(x3, u, a3, b3);
  const Vec x4 = x + dt * k3;
  const Vec k4 = model.dynamics(x4, u);
  model.dynamics_jacobians(x4, u, a4, b4);

  const Mat eye = Mat::Identity(nx, nx);
  // Stage sensitivities chained through the RK4 evaluation points.
  const Mat K1x = a1;
  const Mat K2x = a2 * (eye + 0.5 * dt * K1x);
  const Mat K3x = a3 * (eye + 0.5 * dt * K2x);
  const Mat K4x = a4 * (eye + dt * K3x);
  const Mat K1u = b1;
  const Mat K2u = b2 + a2 * (0.5 * dt * K1u);
  const Mat K3u = b3 + a3 * (0.5 * dt * K2u);
  const Mat K4u = b4 + a4 * (dt * K3u);

  x_next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  Fx = eye + (dt / 6.0) * (K1x + 2.0 * K2x + 2.0 * K3x + K4x);
  Fu = (dt / 6.0) * (K1u + 2.0 * K2u + 2.0 * K3u + K4u);
  if (!x_next.allFinite()) throw NumericError("non-finite integration result");
}

double orientation_distance(double a, double b) {
  const double dc = std::cos(a) - std::cos(b);
  const double ds = std::sin(a) - std::sin(b);
  return std::sqrt(dc * dc + ds * ds);
}

int augmented_dim(const RobotModel& model) {
  return model.state_dim() + static_cast<int>(model.orientation_indices().size());
}

Vec augment(const RobotModel& model, const Vec& x) {
  const auto angles = model.orientation_indices();
  Vec q(augmented_dim(model));
  int out = 0;
  std::size_t a = 0;
  for (int i = 0; i < model.state_dim(); ++i) {
    if (a < angles.size() && angles[a] == i) {
      q[out++] = std::cos(x[i]);
      q[out++] = std::sin(x[i]);
      ++a;
    } else {
      q[out++] = x[i];
    }
  }
  return q;
}

Mat augment_jacobian(const RobotModel& model, const Vec& x) {
  const auto angles = model.orientation_indices();
  Mat j = Mat::Zero(augmented_dim(model), model.state_dim());
  int out = 0;
  std::size_t a = 0;
  for (int i = 0; i < model.state_dim(); ++i) {
    if (a < angles.size() && angles[a] == i) {
      j(out++, i) = -std::sin(x[i]);
      j(out++, i) = std::cos(x[i]);
      ++a;
    } else {
      j(out++, i) = 1.0;
    }
  }
  return j;
}

}  // namespace freeball
