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

#include "freeball/distance_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace freeball {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// 1-D squared distance transform (lower envelope of parabolas).
// f: sampled squared distances, d: output, n: length.
void transform_1d(const std::vector<double>& f, std::vector<double>& d, int n) {
  static thread_local std::vector<int> v;
  static thread_local std::vector<double> z;
  v.assign(static_cast<std::size_t>(n), 0);
  z.assign(static_cast<std::size_t>(n) + 1, 0.0);

  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    double s = 0;
    while (true) {
      const int p = v[k];
      if (f[p] == kInf) {
        // Parabola at p is absent; drop it.
        if (k == 0) {
          v[0] = q;
          z[0] = -kInf;
          z[1] = kInf;
          s = -kInf;
          break;
        }
        --k;
        continue;
      }
      s = ((f[q] + q * q) - (f[p] + p * p)) / (2.0 * q - 2.0 * p);
      if (s > z[k]) break;
      if (k == 0) {
        v[0] = q;
        z[0] = -kInf;
        z[1] = kInf;
        s = -kInf;
        break;
      }
      --k;
    }
    if (s != -kInf) {
      ++k;
      v[k] = q;
      z[k] = s;
      z[k + 1] = kInf;
    }
  }

  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const int p = v[k];
    d[q] = f[p] == kInf ? kInf : (q - p) * static_cast<double>(q - p) + f[p];
  }
}
}  // namespace

DistanceGrid::DistanceGrid(Vec origin, double cell_size, std::vector<int> dims,
                           std::vector<double> values)
    : origin_(std::move(origin)),
      cell_size_(cell_size),
      dims_(std::move(dims)),
      values_(std::move(values)) {
  if (cell_size_ <= 0) throw std::invalid_argument("cell size must be > 0");
  std::size_t total = 1;
  strides_.resize(dims_.size());
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (dims_[a] <= 0) throw std::invalid_argument("grid dims must be > 0");
    strides_[a] = total;
    total *= static_cast<std::size_t>(dims_[a]);
  }
  if (values_.size() != total)
    throw std::invalid_argument("grid value count does not match dims");
}

std::size_t DistanceGrid::flat_index(const std::vector<int>& idx) const {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < dims_.size(); ++a)
    flat += strides_[a] * static_cast<std::size_t>(idx[a]);
  return flat;
}

double DistanceGrid::value_at(const std::vector<int>& idx) const {
  return values_[flat_index(idx)];
}

Vec DistanceGrid::cell_center(const std::vector<int>& idx) const {
  Vec c(dimension());
  for (int a = 0; a < dimension(); ++a)
    c[a] = origin_[a] + (idx[static_cast<std::size_t>(a)] + 0.5) * cell_size_;
  return c;
}

double DistanceGrid::interpolate(const Vec& p) const {
  const int n = dimension();
  // Continuous index into the cell-center lattice, clamped to its hull.
  std::vector<int> base(static_cast<std::size_t>(n));
  std::vector<double> frac(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    double s = (p[a] - origin_[a]) / cell_size_ - 0.5;
    s = std::clamp(s, 0.0, static_cast<double>(dims_[static_cast<std::size_t>(a)] - 1));
    int i0 = static_cast<int>(std::floor(s));
    i0 = std::min(i0, dims_[static_cast<std::size_t>(a)] - 2);
    i0 = std::max(i0, 0);
    base[static_cast<std::size_t>(a)] = i0;
    frac[static_cast<std::size_t>(a)] =
        dims_[static_cast<std::size_t>(a)] == 1 ? 0.0 : std::clamp(s - i0, 0.0, 1.0);
  }

  double acc = 0.0;
  const int corners = 1 << n;
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int c = 0; c < corners; ++c) {
    double w = 1.0;
    for (int a = 0; a < n; ++a) {
      const bool hi = (c >> a) & 1;
      const std::size_t ai = static_cast<std::size_t>(a);
      if (dims_[ai] == 1) {
        if (hi) w = 0.0;
        idx[ai] = 0;
      } else {
        w *= hi ? frac[ai] : 1.0 - frac[ai];
        idx[ai] = base[ai] + (hi ? 1 : 0);
      }
    }
    if (w > 0.0) acc += w * value_at(idx);
  }
  return acc;
}

std::vector<double> DistanceGrid::exact_edt(const std::vector<std::uint8_t>& occupied,
                                            const std::vector<int>& dims,
                                            double cell_size) {
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d);
  if (occupied.size() != total)
    throw std::invalid_argument("occupancy size does not match dims");

  std::vector<double> sq(total);
  for (std::size_t i = 0; i < total; ++i) sq[i] = occupied[i] ? 0.0 : kInf;

  // Decompose into 1-D transforms along each axis.
  const int n = static_cast<int>(dims.size());
  std::vector<std::size_t> strides(static_cast<std::size_t>(n));
  std::size_t s = 1;
  for (int a = 0; a < n; ++a) {
    strides[static_cast<std::size_t>(a)] = s;
    s *= static_cast<std::size_t>(dims[static_cast<std::size_t>(a)]);
  }

  std::vector<double> line, out;
  for (int a = 0; a < n; ++a) {
    const int len = dims[static_cast<std::size_t>(a)];
    const std::size_t stride = strides[static_cast<std::size_t>(a)];
    const std::size_t lines = total / static_cast<std::size_t>(len);
    line.resize(static_cast<std::size_t>(len));
    out.resize(static_cast<std::size_t>(len));
    for (std::size_t l = 0; l < lines; ++l) {
      // Start offset of the l-th line along axis a.
      std::size_t rem = l;
      std::size_t start = 0;
      for (int b = 0; b < n; ++b) {
        if (b == a) continue;
        const std::size_t db = static_cast<std::size_t>(dims[static_cast<std::size_t>(b)]);
        start += (rem % db) * strides[static_cast<std::size_t>(b)];
        rem /= db;
      }
      for (int i = 0; i < len; ++i) line[static_cast<std::size_t>(i)] = sq[start + stride * i];
      transform_1d(line, out, len);
      for (int i = 0; i < len; ++i) sq[start + stride * i] = out[static_cast<std::size_t>(i)];
    }
  }

  std::vector<double> dist(total);
  for (std::size_t i = 0; i < total; ++i)
    dist[i] = sq[i] == kInf ? kInf : cell_size * std::sqrt(sq[i]);
  return dist;
}

}  // namespace freeball
