// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mirage/body.hpp"
#include "mirage/geom.hpp"

namespace mirage {

/// Raised by reflect when the incidence is tangent to working precision and
/// the mirror direction is therefore unreliable.
struct DegenerateIncidence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Specular mirror step d' = d - 2 (d.n) n for unit d, n. Throws
/// DegenerateIncidence when |d.n| <= 1e-12.
Vec2 reflect(Vec2 direction, Vec2 normal);

struct Reflection {
  int edge_id{0};
  EdgeClass cls{EdgeClass::EllipseArcB1};
  Vec2 point{};
  Vec2 incoming{};
  Vec2 outgoing{};
  Vec2 normal{};
};

enum class TraceStatus { Escaped, MaxBouncesExceeded, DegenerateHit };

const char* trace_status_name(TraceStatus s);

struct Trajectory {
  Vec2 origin{};
  Vec2 initial_direction{};
  std::vector<Reflection> reflections;
  Vec2 final_direction{};
  TraceStatus status{TraceStatus::Escaped};
};

struct Hit {
  int edge_id{0};
  EdgeClass cls{EdgeClass::EllipseArcB1};
  double t{0.0};
  Vec2 point{};
  Vec2 normal{};
  bool degenerate{false};
};

/// Nearest edge intersection with ray parameter above t_min. Hits grazing a
/// curve (double root) or landing within 1e-9 (parameter units) of an arc or
/// segment endpoint are returned with the degenerate flag set rather than
/// resolved by guesswork.
std::optional<Hit> nearest_hit_edges(const Ray2& ray, std::span<const Edge> edges,
                                     double t_min);

/// Same with the body's advance epsilon, 1e-9 times its diameter.
std::optional<Hit> nearest_hit(const Ray2& ray, const Body2D& body);

/// Iterated specular transport. The tracer is generic over the edge list and
/// encodes nothing about the expected bounce structure; claim-level
/// assertions live with the verifier.
Trajectory trace_edges(std::span<const Edge> edges, double diameter, Vec2 origin,
                       Vec2 direction, int max_bounces);

/// Traces against the full body. Requires the origin to lie outside it.
Trajectory trace(const Body2D& body, Vec2 origin, Vec2 direction,
                 int max_bounces = 16);

/// Post-hoc audit: re-intersects every free-flight leg against every edge and
/// confirms nothing is crossed before the leg's recorded endpoint, and that
/// an Escaped final leg meets nothing at all.
bool no_transversal_crossings(const Trajectory& traj, const Body2D& body);

}  // namespace mirage
