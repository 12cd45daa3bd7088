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

#include "freeball/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace freeball {

namespace {
// Directions closer than this to the minimum distance count as ties and are
// averaged; a near-zero average signals a degenerate gradient.
constexpr double kTieSlack = 1e-9;
constexpr double kDegenerateNorm = 1e-6;
}  // namespace

bool AlignedBox::contains(const Vec& p) const {
  return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
}

Vec AlignedBox::clamp(const Vec& p) const {
  return p.cwiseMax(lo).cwiseMin(hi);
}

double AlignedBox::exterior_distance(const Vec& p) const {
  return (p - clamp(p)).norm();
}

Obstacle Obstacle::sphere(Vec center, double radius) {
  Obstacle o;
  o.shape = Shape::Sphere;
  o.center = std::move(center);
  o.radius = radius;
  if (o.radius <= 0) throw std::invalid_argument("sphere radius must be > 0");
  return o;
}

Obstacle Obstacle::aligned_box(Vec lo, Vec hi) {
  Obstacle o;
  o.shape = Shape::Box;
  if (((hi - lo).array() <= 0).any())
    throw std::invalid_argument("box min must be componentwise below max");
  o.box = AlignedBox{std::move(lo), std::move(hi)};
  return o;
}

Vec Obstacle::offset_at(double t) const {
  const int n = shape == Shape::Sphere ? static_cast<int>(center.size())
                                       : static_cast<int>(box.lo.size());
  if (schedule.empty()) return Vec::Zero(n);
  if (t <= schedule.front().first) return schedule.front().second;
  if (t >= schedule.back().first) return schedule.back().second;
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (t <= schedule[i].first) {
      const auto& [t0, o0] = schedule[i - 1];
      const auto& [t1, o1] = schedule[i];
      const double a = t1 > t0 ? (t - t0) / (t1 - t0) : 1.0;
      return o0 + a * (o1 - o0);
    }
  }
  return schedule.back().second;
}

double Obstacle::surface_distance(const Vec& p, double t) const {
  const Vec off = offset_at(t);
  if (shape == Shape::Sphere)
    return std::max(0.0, (p - (center + off)).norm() - radius);
  return AlignedBox{box.lo + off, box.hi + off}.exterior_distance(p);
}

bool Obstacle::contains(const Vec& p, double t) const {
  const Vec off = offset_at(t);
  if (shape == Shape::Sphere) return (p - (center + off)).norm() <= radius;
  return AlignedBox{box.lo + off, box.hi + off}.contains(p);
}

World::World(int dimension, AlignedBox bounds, std::vector<Obstacle> obstacles,
             double d_bar)
    : dimension_(dimension),
      bounds_(std::move(bounds)),
      obstacles_(std::move(obstacles)),
      d_bar_(d_bar) {
  if (dimension_ != 2 && dimension_ != 3)
    throw std::invalid_argument("world dimension must be 2 or 3");
  if (bounds_.lo.size() != dimension_ || bounds_.hi.size() != dimension_ ||
      ((bounds_.hi - bounds_.lo).array() <= 0).any())
    throw std::invalid_argument("invalid world bounds");
  if (d_bar_ <= 0) d_bar_ = bounds_.diagonal();
}

bool World::has_dynamic_obstacles() const {
  return std::any_of(obstacles_.begin(), obstacles_.end(),
                     [](const Obstacle& o) { return !o.is_static(); });
}

double World::wall_distance(const Vec& p) const {
  double d = std::numeric_limits<double>::infinity();
  for (int a = 0; a < dimension_; ++a)
    d = std::min({d, p[a] - bounds_.lo[a], bounds_.hi[a] - p[a]});
  return d;
}

double World::obstacle_distance(const Vec& p, double t) const {
  double d = std::numeric_limits<double>::infinity();
  for (const Obstacle& o : obstacles_) d = std::min(d, o.surface_distance(p, t));
  return d;
}

double World::distance(const Vec& p, double t) const {
  if (!bounds_.contains(p))
    throw OutOfDomainError("distance query outside world bounds");
  double d = std::min(d_bar_, wall_distance(p));
  if (grid_)
    d = std::min(d, grid_->interpolate(p));
  else
    d = std::min(d, obstacle_distance(p, t));
  return d;
}

std::optional<Vec> World::distance_gradient(const Vec& p, double t) const {
  const double d = distance(p, t);
  if (d <= 0.0)
    throw NotFreeError("distance gradient requested inside an obstacle");

  if (grid_) {
    // Central differences with a one-cell step, the information a distance
    // field actually carries. Falls back to one-sided steps at the bounds.
    const double h = grid_->cell_size();
    Vec g(dimension_);
    for (int a = 0; a < dimension_; ++a) {
      Vec hi = p, lo = p;
      hi[a] = std::min(p[a] + h, bounds_.hi[a]);
      lo[a] = std::max(p[a] - h, bounds_.lo[a]);
      const double span = hi[a] - lo[a];
      g[a] = span > 0 ? (distance(hi, t) - distance(lo, t)) / span : 0.0;
    }
    const double norm = g.norm();
    if (norm < kDegenerateNorm) return std::nullopt;
    return g / norm;
  }

  if (d >= d_bar_) return std::nullopt;  // saturated plateau

  // Gather (distance, outward direction) for every feature: obstacles and
  // the workspace boundary faces.
  std::vector<std::pair<double, Vec>> features;
  features.reserve(obstacles_.size() + 2 * static_cast<std::size_t>(dimension_));
  for (const Obstacle& o : obstacles_) {
    const Vec off = o.offset_at(t);
    if (o.shape == Obstacle::Shape::Sphere) {
      const Vec u = p - (o.center + off);
      const double len = u.norm();
      if (len <= o.radius) continue;  // inside; unreachable since d > 0
      features.emplace_back(len - o.radius, u / len);
    } else {
      const AlignedBox b{o.box.lo + off, o.box.hi + off};
      const Vec q = b.clamp(p);
      const Vec u = p - q;
      const double len = u.norm();
      if (len <= 0) continue;
      features.emplace_back(len, u / len);
    }
  }
  for (int a = 0; a < dimension_; ++a) {
    Vec e = Vec::Zero(dimension_);
    e[a] = 1.0;
    features.emplace_back(p[a] - bounds_.lo[a], e);
    features.emplace_back(bounds_.hi[a] - p[a], -e);
  }

  const double slack = kTieSlack * (1.0 + d);
  Vec g = Vec::Zero(dimension_);
  for (const auto& [dist, dir] : features)
    if (dist <= d + slack) g += dir;
  const double norm = g.norm();
  if (norm < kDegenerateNorm) return std::nullopt;
  return g / norm;
}

Vec World::escape_direction(const Vec& p, double t) const {
  // Inside an obstacle: leave the deepest one through its nearest boundary.
  double best_depth = -1.0;
  Vec dir;
  for (const Obstacle& o : obstacles_) {
    if (!o.contains(p, t)) continue;
    const Vec off = o.offset_at(t);
    if (o.shape == Obstacle::Shape::Sphere) {
      const Vec u = p - (o.center + off);
      const double len = u.norm();
      const double depth = o.radius - len;
      if (depth > best_depth) {
        best_depth = depth;
        dir = len > 1e-12 ? Vec(u / len) : Vec(Vec::Unit(dimension_, 0));
      }
    } else {
      const AlignedBox b{o.box.lo + off, o.box.hi + off};
      double margin = std::numeric_limits<double>::infinity();
      Vec out = Vec::Unit(dimension_, 0);
      for (int a = 0; a < dimension_; ++a) {
        if (p[a] - b.lo[a] < margin) {
          margin = p[a] - b.lo[a];
          out = -Vec::Unit(dimension_, a);
        }
        if (b.hi[a] - p[a] < margin) {
          margin = b.hi[a] - p[a];
          out = Vec::Unit(dimension_, a);
        }
      }
      const double depth = margin;
      if (depth > best_depth) {
        best_depth = depth;
        dir = out;
      }
    }
  }
  if (best_depth >= 0.0) return dir;

  if (auto g = distance_gradient(p, t)) return *g;
  return Vec::Unit(dimension_, 0);
}

DistanceGrid World::rasterize(double resolution, double t,
                              std::size_t cell_budget) const {
  if (resolution <= 0) throw std::invalid_argument("resolution must be > 0");
  std::vector<int> dims(static_cast<std::size_t>(dimension_));
  std::size_t total = 1;
  for (int a = 0; a < dimension_; ++a) {
    const double extent = bounds_.hi[a] - bounds_.lo[a];
    dims[static_cast<std::size_t>(a)] =
        std::max(1, static_cast<int>(std::ceil(extent / resolution - 1e-9)));
    total *= static_cast<std::size_t>(dims[static_cast<std::size_t>(a)]);
    if (total > cell_budget)
      throw CapacityError("rasterization exceeds the cell-count budget");
  }

  DistanceGrid shape(bounds_.lo, resolution, dims,
                     std::vector<double>(total, 0.0));
  std::vector<std::uint8_t> occupied(total, 0);
  std::vector<int> idx(static_cast<std::size_t>(dimension_), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    const Vec c = shape.cell_center(idx);
    for (const Obstacle& o : obstacles_) {
      if (o.contains(c, t)) {
        occupied[flat] = 1;
        break;
      }
    }
    for (int a = 0; a < dimension_; ++a) {
      if (++idx[static_cast<std::size_t>(a)] < dims[static_cast<std::size_t>(a)]) break;
      idx[static_cast<std::size_t>(a)] = 0;
    }
  }

  std::vector<double> values = DistanceGrid::exact_edt(occupied, dims, resolution);

  // Fold in the boundary and the d_bar clamp at each cell center.
  std::fill(idx.begin(), idx.end(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    const Vec c = shape.cell_center(idx);
    values[flat] = std::min({values[flat], wall_distance(c), d_bar_});
    for (int a = 0; a < dimension_; ++a) {
      if (++idx[static_cast<std::size_t>(a)] < dims[static_cast<std::size_t>(a)]) break;
      idx[static_cast<std::size_t>(a)] = 0;
    }
  }

  return DistanceGrid(bounds_.lo, resolution, std::move(dims), std::move(values));
}

World World::with_grid(DistanceGrid grid) const {
  World w = *this;
  w.grid_ = std::move(grid);
  return w;
}

}  // namespace freeball
