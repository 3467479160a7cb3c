// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/tracer.hpp"

#include <cmath>
#include <limits>

#include "mirage/conics.hpp"

namespace mirage {

namespace {

constexpr double kTangentDot = 1e-12;
constexpr double kParamSlack = 1e-12;
constexpr double kEndpointGuard = 1e-9;
constexpr double kParallelEps = 1e-14;

struct Candidate {
  double t{std::numeric_limits<double>::infinity()};
  Vec2 point{};
  Vec2 normal{};
  bool degenerate{false};
  bool valid{false};
};

Candidate best_arc_hit(const Ray2& ray, const ConicArc& arc, double t_min) {
  Candidate best;
  const RayHits hits = ray_conic_intersections(ray, arc.conic);
  for (int i = 0; i < hits.count; ++i) {
    const double t = hits.t[i];
    if (t <= t_min || t >= best.t) continue;
    const Vec2 p = ray_point(ray, t);
    const double u = conic_param(arc.conic, p);
    if (u < arc.u0 - kParamSlack || u > arc.u1 + kParamSlack) continue;
    best.t = t;
    best.point = p;
    best.normal = normal_at(arc.conic, p);
    best.degenerate = hits.tangent || (u - arc.u0) < kEndpointGuard ||
                      (arc.u1 - u) < kEndpointGuard;
    best.valid = true;
  }
  return best;
}

Candidate best_segment_hit(const Ray2& ray, const Segment& seg, double t_min) {
  Candidate best;
  const Vec2 s = seg.p1 - seg.p0;
  const double det = cross(ray.dir, s);
  const double slen = norm(s);
  if (std::fabs(det) <= kParallelEps * slen) return best;
  const Vec2 w = seg.p0 - ray.origin;
  const double t = cross(w, s) / det;
  const double u = cross(w, ray.dir) / det;
  if (t <= t_min) return best;
  if (u < -kParamSlack || u > 1.0 + kParamSlack) return best;
  best.t = t;
  best.point = seg.p0 + u * s;
  best.normal = normalized(perp(s));
  best.degenerate = u < kEndpointGuard || u > 1.0 - kEndpointGuard;
  best.valid = true;
  return best;
}

}  // namespace

Vec2 reflect(Vec2 direction, Vec2 normal) {
  const double k = dot(direction, normal);
  if (std::fabs(k) <= kTangentDot) {
    throw DegenerateIncidence(
        "reflect: incidence is tangent to working precision");
  }
  return normalized(direction - (2.0 * k) * normal);
}

const char* trace_status_name(TraceStatus s) {
  switch (s) {
    case TraceStatus::Escaped: return "escaped";
    case TraceStatus::MaxBouncesExceeded: return "max_bounces_exceeded";
    case TraceStatus::DegenerateHit: return "degenerate_hit";
  }
  return "unknown";
}

std::optional<Hit> nearest_hit_edges(const Ray2& ray, std::span<const Edge> edges,
                                     double t_min) {
  Candidate best;
  int best_edge = -1;
  EdgeClass best_cls = EdgeClass::EllipseArcB1;
  for (const Edge& e : edges) {
    const Candidate c = e.is_arc ? best_arc_hit(ray, e.arc, t_min)
                                 : best_segment_hit(ray, e.seg, t_min);
    if (c.valid && c.t < best.t) {
      best = c;
      best_edge = e.id;
      best_cls = e.cls;
    }
  }
  if (!best.valid) return std::nullopt;
  return Hit{best_edge, best_cls, best.t, best.point, best.normal,
             best.degenerate};
}

std::optional<Hit> nearest_hit(const Ray2& ray, const Body2D& body) {
  return nearest_hit_edges(ray, body.edges, 1e-9 * body.diameter);
}

Trajectory trace_edges(std::span<const Edge> edges, double diameter, Vec2 origin,
                       Vec2 direction, int max_bounces) {
  if (max_bounces < 1) {
    throw std::invalid_argument("trace: max_bounces must be at least 1");
  }
  Trajectory traj;
  traj.origin = origin;
  traj.initial_direction = normalized(direction);
  traj.final_direction = traj.initial_direction;
  const double t_min = 1e-9 * diameter;

  Vec2 pos = origin;
  Vec2 dir = traj.initial_direction;
  for (int bounce = 0; bounce < max_bounces; ++bounce) {
    const auto hit = nearest_hit_edges(Ray2{pos, dir}, edges, t_min);
    if (!hit) {
      traj.status = TraceStatus::Escaped;
      traj.final_direction = dir;
      return traj;
    }
    if (hit->degenerate || std::fabs(dot(dir, hit->normal)) <= kTangentDot) {
      traj.status = TraceStatus::DegenerateHit;
      traj.final_direction = dir;
      return traj;
    }
    const Vec2 out = reflect(dir, hit->normal);
    traj.reflections.push_back(
        Reflection{hit->edge_id, hit->cls, hit->point, dir, out, hit->normal});
    pos = hit->point;
    dir = out;
  }
  traj.final_direction = dir;
  traj.status = nearest_hit_edges(Ray2{pos, dir}, edges, t_min)
                    ? TraceStatus::MaxBouncesExceeded
                    : TraceStatus::Escaped;
  return traj;
}

Trajectory trace(const Body2D& body, Vec2 origin, Vec2 direction,
                 int max_bounces) {
  if (contains(body, origin, 1e-12 * body.pair.a)) {
    throw std::invalid_argument("trace: origin lies inside the body");
  }
  return trace_edges(body.edges, body.diameter, origin, direction, max_bounces);
}

bool no_transversal_crossings(const Trajectory& traj, const Body2D& body) {
  const double t_min = 1e-9 * body.diameter;
  const double slack = 1e-9 * body.diameter;
  Vec2 pos = traj.origin;
  for (const Reflection& r : traj.reflections) {
    const double len = dist(pos, r.point);
    if (len <= t_min) return false;
    const Ray2 leg{pos, (r.point - pos) / len};
    const auto hit = nearest_hit_edges(leg, body.edges, t_min);
    if (hit && hit->t < len - slack) return false;
    pos = r.point;
  }
  if (traj.status == TraceStatus::Escaped && !traj.reflections.empty()) {
    if (nearest_hit_edges(Ray2{pos, traj.final_direction}, body.edges, t_min)) {
      return false;
    }
  }
  return true;
}

}  // namespace mirage
