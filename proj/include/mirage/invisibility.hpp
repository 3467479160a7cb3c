// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mirage/body.hpp"
#include "mirage/theory.hpp"
#include "mirage/tracer.hpp"

namespace mirage {

enum class Verdict { InvisiblePass, Miss, Degenerate, Fail };

const char* verdict_name(Verdict v);

struct RayVerdict {
  double angle{0.0};
  int bounce_count{0};
  std::vector<EdgeClass> classes;
  /// Angle between exit and entry directions, radians.
  double collinearity_error{0.0};
  /// Distance from the emission focus to the exit ray's supporting line.
  double exit_line_distance{0.0};
  /// Largest off-plane excursion when the ray was traced in a meridian plane
  /// of a revolved body; zero for planar verification.
  double planarity{0.0};
  IdentityReport identity;
  Verdict verdict{Verdict::Fail};
  std::string note;
};

struct SectorStats {
  int rays{0};
  int pass{0};
  int miss{0};
  int degenerate{0};
  int fail{0};
  double max_collinearity{0.0};
};

struct VerificationReport {
  double a{0.0};
  double b{0.0};
  double phi_B{0.0};
  double lambda{0.0};
  int ray_count{0};
  double tolerance{0.0};
  std::uint64_t seed{0};
  int threads{1};
  std::string variant{"planar"};

  int pass_count{0};
  int miss_count{0};
  int degenerate_count{0};
  int fail_count{0};
  SectorStats upper;
  SectorStats lower;
  double max_collinearity_error{0.0};
  double max_exit_line_distance{0.0};
  double max_identity_residual{0.0};
  /// Largest off-plane excursion for revolved traces; zero in the plane.
  double max_planarity{0.0};
  std::vector<double> degenerate_angles;
  bool overall_pass{false};
};

/// Traces one ray from the emission focus at the given planar angle and
/// classifies the outcome. Miss means the body was never met, which satisfies
/// the invisibility definition trivially. InvisiblePass demands four bounces
/// in class order inner ellipse, inner hyperbola, outer ellipse, outer
/// hyperbola, an exit collinear with the entry on the same forward ray, a
/// passing identity chain, and the inner broken line staying inside the
/// body's convex hull. Tangent or near-endpoint incidences are Degenerate.
RayVerdict verify_ray(const Body2D& body, double angle, double tolerance = 1e-9);

/// Folds one ray verdict into a report: verdict counters, per-sector stats by
/// the sign of the angle, and running maxima. Order-independent, so parallel
/// evaluation followed by in-order folding is deterministic.
void fold_verdict(VerificationReport& rep, const RayVerdict& rv);

/// Runs verify_ray over a deterministic stratified fan: half the rays in the
/// upper angular sector, half mirrored below, each stratum jittered from a
/// seeded generator; an odd leftover ray probes a guaranteed miss angle.
/// Evaluation may be split across threads; aggregation is in ray order, so
/// the report does not depend on the thread count. Overall pass means zero
/// Fail verdicts and Degenerate strictly under 0.1 percent.
VerificationReport verify_fan(const Body2D& body, int n, double tolerance = 1e-9,
                              std::uint64_t seed = 12345, int threads = 1);

}  // namespace mirage
