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

#include <Eigen/Core>
#include <Eigen/Sparse>

#include <stdexcept>
#include <string>

namespace freeball {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// A query point left the workspace. Signals a caller bug, never clamped away.
struct OutOfDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A point expected to be free (clearance above the margin) is not.
struct NotFreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A grid or problem would exceed a configured size budget.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A log-barrier term was evaluated outside its domain.
struct BarrierDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// No usable initial trajectory could be constructed.
struct InitializationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid search found no path between start and goal.
struct UnreachableGoalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values where finite ones are required.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace freeball
