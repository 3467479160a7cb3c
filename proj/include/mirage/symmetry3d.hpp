// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mirage/body.hpp"
#include "mirage/geom.hpp"
#include "mirage/invisibility.hpp"
#include "mirage/tracer.hpp"

namespace mirage {

enum class Variant { AboutMajorAxis, AboutPerpendicularAxisThroughF1 };

const char* variant_name(Variant v);

/// Solid of revolution of the planar body. The rotation axis passes through
/// the emission focus in both variants, which is what makes every ray from
/// that focus span a meridian plane with the axis.
struct RevolutionBody {
  Body2D base;
  Variant variant{Variant::AboutMajorAxis};
  Vec3 axis_origin{};
  Vec3 axis_dir{1.0, 0.0, 0.0};
};

RevolutionBody revolve(const Body2D& base, Variant variant);

struct Reflection3D {
  int edge_id{0};
  EdgeClass cls{EdgeClass::EllipseArcB1};
  Vec3 point{};
  Vec3 incoming{};
  Vec3 outgoing{};
};

struct Trajectory3D {
  Vec3 origin{};
  Vec3 initial_direction{};
  std::vector<Reflection3D> reflections;
  Vec3 final_direction{};
  /// Unit normal of the meridian plane spanned by the axis and the ray.
  Vec3 plane_normal{};
  TraceStatus status{TraceStatus::Escaped};
  /// Largest distance of any reflection point from the meridian plane,
  /// measured after the fact rather than assumed.
  double max_plane_deviation{0.0};
};

/// Traces a ray from the emission focus through the revolved body by
/// reducing to the meridian plane, running the planar tracer there, and
/// lifting back. Directions parallel to the axis within 1e-12 are degenerate.
/// For the perpendicular-axis variant the meridian section contains a second,
/// axis-mirrored copy of the planar body; the tracer accounts for it by also
/// testing the axis-mirrored ray each bounce.
Trajectory3D trace3d_from_focus(const RevolutionBody& rb, Vec3 direction,
                                int max_bounces = 16);

/// Independent tracer for the major-axis variant only: intersects the 3D ray
/// directly with the implicit surfaces of revolution (spheroid, hyperboloid
/// sheet, cone, and their dilates) with zone bounds matching the arcs.
/// b2_scale perturbs the squared minor axis of both spheroids and exists so
/// tests can confirm the cross-check has power. Throws std::invalid_argument
/// for the perpendicular-axis variant.
Trajectory3D quadric_trace(const RevolutionBody& rb, Vec3 direction,
                           double b2_scale = 1.0, int max_bounces = 16);

/// Runs both tracers on the same direction and returns the quadric result;
/// compare against trace3d_from_focus with max_point_discrepancy.
Trajectory3D quadric_cross_check(const RevolutionBody& rb, Vec3 direction);

/// Largest distance between corresponding reflection points; infinity when
/// the bounce counts differ.
double max_point_discrepancy(const Trajectory3D& u, const Trajectory3D& v);

/// Full verdict for one 3D direction: traces in 3D, measures collinearity
/// and focus alignment on the 3D exit ray, then projects the trajectory into
/// meridian coordinates and runs the planar identity chain on it.
RayVerdict verify_direction_3d(const RevolutionBody& rb, Vec3 direction,
                               double tolerance = 1e-9);

/// Fan of directions that hit the revolved body: uniform on the sphere,
/// rejection-filtered to the angular sectors, from a seeded generator.
/// Aggregation is deterministic and thread-count independent.
VerificationReport verify_fan_3d(const RevolutionBody& rb, int n,
                                 double tolerance = 1e-9,
                                 std::uint64_t seed = 12345, int threads = 1);

}  // namespace mirage
