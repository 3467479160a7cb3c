// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "mirage/body.hpp"
#include "mirage/geom.hpp"
#include "mirage/tracer.hpp"

namespace mirage {

/// Side and cevian lengths of a triangle ABC with a point D on side AC:
/// a1 = |AB|, a2 = |BC|, b1 = |AD|, b2 = |DC|, f = |BD|.
struct CevianConfiguration {
  double a1{0.0};
  double a2{0.0};
  double b1{0.0};
  double b2{0.0};
  double f{0.0};
};

/// Builds the length configuration from explicit points. Throws
/// std::invalid_argument when A, B, C are collinear or D is not on segment AC
/// within 1e-9 relative to |AC|.
CevianConfiguration cevian_from_points(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

/// Relative residuals of the three equivalent bisector characterizations:
/// (a) a1 b2 = a2 b1, (b) a1 a2 - b1 b2 = f^2, (c) (a1+b1)(a2-b2) = f^2.
double relation_a(const CevianConfiguration& cfg);
double relation_b(const CevianConfiguration& cfg);
double relation_c(const CevianConfiguration& cfg);

/// True iff BD bisects the angle at B, decided through characterization (c)
/// at threshold 1e-9. Input validation as in cevian_from_points.
bool is_bisector(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

/// Residual bundle for the four-bounce trajectory identities. Every entry is
/// a dimensionless relative error; angular identities are scaled by the
/// larger angle involved. structural_ok is false when the trajectory does not
/// have the expected four-reflection shape, in which case the residuals are
/// not meaningful and max_residual() is infinite.
struct IdentityReport {
  bool structural_ok{false};
  std::string structural_note;

  /// Upper and lower radial edges start at mirror-image points.
  double mirror_angle{0.0};
  /// First and second bounce stay strictly inside the angular sector.
  double sector_order{0.0};
  /// Focal sum at the first bounce matches the focal sum at the corner shared
  /// by both conics.
  double ellipse_sum{0.0};
  /// Focal difference at the second bounce matches the same corner.
  double hyperbola_diff{0.0};
  /// Product of the focal sum and focal difference equals the squared focal
  /// distance (2c)^2.
  double focal_product{0.0};
  /// The major axis bisects the angle spanned by bounces one and two at the
  /// emission focus.
  double bisector_cd{0.0};
  /// Same for bounces three and four.
  double bisector_eg{0.0};
  /// Bounces one and four sit on the same line through the emission focus.
  double exit_alignment{0.0};
  /// The leg linking bounces two and three is radial from the emission focus.
  double through_focus_de{0.0};

  double max_residual() const;
  bool pass(double tol) const;
};

/// Evaluates the identity chain on a traced trajectory against its body.
/// Expects exactly four reflections whose classes run inner ellipse, inner
/// hyperbola, outer ellipse, outer hyperbola, with the trace escaped.
IdentityReport check_identity_chain(const Trajectory& traj, const Body2D& body);

}  // namespace mirage
