// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "mirage/geom.hpp"

namespace mirage {

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 p, Vec2 q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 p, Vec2 q) { return p.x == q.x && p.y == q.y; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 &&
           cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0)
      --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower &&
           cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool point_in_convex_polygon(std::span<const Vec2> hull, Vec2 p, double tol) {
  const std::size_t n = hull.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = hull[i];
    const Vec2 b = hull[(i + 1) % n];
    const Vec2 e = b - a;
    const double len = norm(e);
    if (!(len > 0.0)) continue;
    // Signed distance of p to edge line, positive on the interior side for a
    // counterclockwise polygon.
    const double d = cross(e, p - a) / len;
    if (d < -tol) return false;
  }
  return true;
}

}  // namespace mirage
