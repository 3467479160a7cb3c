// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace mirage {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x{0.0};
  double y{0.0};
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
inline Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

inline Vec2 normalized(Vec2 v) {
  const double n = norm(v);
  if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
  return v / n;
}

/// Unsigned angle between two directions, in [0, pi].
inline double angle_between(Vec2 a, Vec2 b) {
  return std::atan2(std::fabs(cross(a, b)), dot(a, b));
}

struct Vec3 {
  double x{0.0};
  double y{0.0};
  double z{0.0};
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator/(Vec3 v, double s) { return {v.x / s, v.y / s, v.z / s}; }

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
inline double dist(Vec3 a, Vec3 b) { return norm(a - b); }

inline Vec3 normalized(Vec3 v) {
  const double n = norm(v);
  if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
  return v / n;
}

inline double angle_between(Vec3 a, Vec3 b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

/// A ray in the plane. `dir` is kept unit length by make_ray.
struct Ray2 {
  Vec2 origin{};
  Vec2 dir{1.0, 0.0};
};

inline Ray2 make_ray(Vec2 origin, Vec2 direction) {
  return Ray2{origin, normalized(direction)};
}

inline Vec2 ray_point(const Ray2& r, double t) { return r.origin + t * r.dir; }

/// Convex hull by monotone chain; returns vertices in counterclockwise order.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

/// Point-in-convex-polygon with a signed slack: tol > 0 accepts points up to
/// tol outside the boundary, tol < 0 demands the point be at least |tol| deep.
bool point_in_convex_polygon(std::span<const Vec2> hull, Vec2 p, double tol);

}  // namespace mirage
