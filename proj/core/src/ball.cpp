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

#include "freeball/ball.hpp"

#include <cmath>

namespace freeball {

FreeBall free_ball(const World& world, const Vec& c, double margin, double t) {
  const double d = world.distance(c, t);
  if (!std::isfinite(d)) throw NumericError("non-finite distance at ball center");
  if (d <= margin)
    throw NotFreeError("ball center does not clear the required margin");
  return FreeBall{c, d - margin, d, margin};
}

FreeBall maximize_free_ball(const World& world, const Vec& c, double margin,
                            double t, const LineSearchParams& params) {
  const FreeBall seed = free_ball(world, c, margin, t);
  const auto gradient = world.distance_gradient(c, t);
  if (!gradient) return seed;  // degenerate gradient: keep the valid seed ball

  const Vec& g = *gradient;
  const double d0 = seed.d_at_center;
  const double tol = params.tolerance;

  // Step eta is admissible when the distance grew by at least eta (within
  // tolerance); that is exactly the containment condition for the old ball.
  const auto admissible = [&](double eta) {
    const Vec p = c + eta * g;
    if (!world.contains(p)) return false;
    const double d = world.distance(p, t);
    if (!std::isfinite(d)) throw NumericError("non-finite distance during ball search");
    return d >= d0 + eta - tol;
  };

  double lo = 0.0;
  double hi = params.initial_step;
  bool found_violation = false;
  for (int i = 0; i < params.max_expansions; ++i) {
    if (!admissible(hi)) {
      found_violation = true;
      break;
    }
    lo = hi;
    hi *= params.growth;
    // Distance is clamped at d_bar, so growth must stop by then.
    if (d0 + lo - tol >= world.d_bar()) break;
  }

  if (found_violation) {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (admissible(mid) ? lo : hi) = mid;
    }
  }

  if (lo <= 0.0) return seed;
  return free_ball(world, c + lo * g, margin, t);
}

}  // namespace freeball
