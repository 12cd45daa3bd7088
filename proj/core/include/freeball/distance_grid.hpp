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
#include <vector>

#include "freeball/types.hpp"

namespace freeball {

/// Dense n-D (n = 2 or 3) grid of distance samples at cell centers.
/// Immutable after construction; safe for concurrent reads.
class DistanceGrid {
 public:
  DistanceGrid(Vec origin, double cell_size, std::vector<int> dims,
               std::vector<double> values);

  int dimension() const { return static_cast<int>(dims_.size()); }
  double cell_size() const { return cell_size_; }
  const Vec& origin() const { return origin_; }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t cell_count() const { return values_.size(); }

  std::size_t flat_index(const std::vector<int>& idx) const;
  double value_at(const std::vector<int>& idx) const;
  Vec cell_center(const std::vector<int>& idx) const;

  /// Multilinear interpolation over the cell-center lattice. Queries outside
  /// the lattice hull are clamped to it.
  double interpolate(const Vec& p) const;

  /// Exact Euclidean distance transform: for every cell, the distance from
  /// its center to the center of the nearest occupied cell. Cells of an
  /// all-free grid get +infinity.
  static std::vector<double> exact_edt(const std::vector<std::uint8_t>& occupied,
                                       const std::vector<int>& dims,
                                       double cell_size);

 private:
  Vec origin_;
  double cell_size_;
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::vector<double> values_;
};

}  // namespace freeball
