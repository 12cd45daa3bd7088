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

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "freeball/ball.hpp"
#include "freeball/trajectory.hpp"
#include "freeball/types.hpp"
#include "freeball/world.hpp"

namespace freeball {

/// Quadratic tracking objective on the augmented state with exponentially
/// growing stage weights:
///   sum_k alpha^k |q(x_k) - q(xref_k)|_Q^2 + |u_k - uref_k|_R^2
///   + alpha^N |q(x_N) - q(xref_N)|_QN^2.
struct Objective {
  Mat Q, QN, R;
  double alpha = 1.05;

  static Objective identity_for(const RobotModel& model, double alpha = 1.05,
                                double control_weight = 0.1);
  void validate(const RobotModel& model) const;
};

double stage_cost(const Objective& obj, const RobotModel& model, const Vec& x,
                  const Vec& u, const Vec& x_ref, const Vec& u_ref, int k);
double terminal_cost(const Objective& obj, const RobotModel& model, const Vec& x,
                     const Vec& x_ref, int horizon);
/// Tracking cost J(w, r) of a whole trajectory (no slack or barrier terms).
double trajectory_cost(const Objective& obj, const RobotModel& model,
                       const Trajectory& traj, const Reference& ref);

// ---------------------------------------------------------------------------
// Collision constraint formulations

/// Ball constraints |p_k - c_k|^2 <= radius_k^2 + s_k with penalized
/// nonnegative slacks; the centers and radii enter as constants, so any
/// distance implementation (analytic or grid) can supply them.
struct BallConstraint {
  std::vector<FreeBall> balls;  // one per stage, N + 1
  Vec slack_penalty;            // mu_k, N + 1
};

/// The nonconvex constraint margin - distance(p_k) <= 0 evaluated directly.
struct ActualDistance {
  double margin = 0;
};

/// First-order expansion of the actual constraint about fixed points.
struct LinearizedDistance {
  double margin = 0;
  std::vector<Vec> points;  // linearization points, N + 1
};

/// No constraint rows; adds -weight * log(distance(p_k) - margin) per stage
/// to the objective instead.
struct LogBarrier {
  double margin = 0;
  double weight = 1.0;
};

using CollisionFormulation =
    std::variant<BallConstraint, ActualDistance, LinearizedDistance, LogBarrier>;

enum class FormulationKind { Ball, Actual, Linearized, LogBarrier };
std::string to_string(FormulationKind kind);
FormulationKind formulation_from_string(const std::string& name);

enum class TerminalSet { None, GoalEquality, FullStop };

// ---------------------------------------------------------------------------
// The discretized problem

/// Multiple-shooting transcription of the tracking problem: states at every
/// knot are decision variables tied by dynamics defect equalities, plus path
/// constraints, a terminal set, and one of the collision formulations.
struct ShootingNlp {
  const RobotModel* model = nullptr;
  const World* world = nullptr;
  double world_time = 0;  // obstacle schedules are frozen at this time

  Objective objective;
  Reference reference;
  Vec initial_state;
  TerminalSet terminal = TerminalSet::None;
  Vec goal_state;  // required for TerminalSet::GoalEquality

  int horizon = 0;
  double dt = 0;
  CollisionFormulation collision;
};

/// Solver-facing problem: callbacks over the stacked variable vector
/// z = [x_0, u_0, ..., u_{N-1}, x_N, s_0..s_N]. Derivatives are exact except
/// for the Hessian, which is the Gauss-Newton model of the objective plus
/// the exact (constant) curvature of the ball rows weighted by their
/// multipliers. Callbacks are pure and safe to call concurrently at
/// distinct points.
struct StructuredProblem {
  int num_vars = 0;
  int num_eq = 0;
  int num_ineq = 0;

  int state_dim = 0;
  int control_dim = 0;
  int horizon = 0;
  int num_slacks = 0;

  std::function<double(const Vec&)> objective;  // +inf outside barrier domain
  std::function<Vec(const Vec&)> objective_gradient;
  // (z, inequality multipliers) -> PSD Hessian model; empty multipliers = GN.
  std::function<SpMat(const Vec&, const Vec&)> lagrangian_hessian;
  std::function<Vec(const Vec&)> equality;    // rows = 0
  std::function<SpMat(const Vec&)> equality_jacobian;
  std::function<Vec(const Vec&)> inequality;  // rows <= 0
  std::function<SpMat(const Vec&)> inequality_jacobian;
};

/// Builds the structured problem. Throws NotFreeError when a ball center
/// violates its margin (callers must repair centers first) and
/// std::invalid_argument on dimension mismatches.
StructuredProblem assemble(const ShootingNlp& nlp);

/// Initial solver point for a seed trajectory: stacked variables with ball
/// slacks lifted to the seed's constraint violations.
Vec initial_point(const ShootingNlp& nlp, const Trajectory& seed);

/// Single collision residual (<= 0 means satisfied) for stage k. The
/// log-barrier variant has no residual; it throws BarrierDomainError when
/// the barrier domain is violated and returns -infinity otherwise.
double collision_residual(const CollisionFormulation& formulation,
                          const World& world, double t, const Vec& p_k, int k,
                          double s_k = 0.0);

struct FeasibilityReport {
  double max_dynamics_defect = 0;
  double max_path_violation = 0;
  double min_clearance = 0;
  bool feasible = false;
};

/// Deterministic feasibility report of a trajectory against the original
/// (non-approximated) constraints: dynamics defects, path constraints, and
/// per-stage clearance against the margins.
FeasibilityReport feasibility_check(const World& world, const RobotModel& model,
                                    const Trajectory& traj,
                                    const std::vector<double>& margins,
                                    double tol, double t = 0.0);

/// Debug dump of problem structure (dimensions, sparsity) as JSON text.
std::string dump_json(const StructuredProblem& problem);

}  // namespace freeball
