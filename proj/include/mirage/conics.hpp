// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <utility>

#include "mirage/geom.hpp"
#include "mirage/kernels.hpp"

namespace mirage {

/// A confocal ellipse/hyperbola pair in the canonical frame: ellipse
/// x^2/a^2 + y^2/b^2 = 1, right hyperbola branch x^2/alpha^2 - y^2/beta^2 = 1,
/// shared foci at (-c, 0) and (c, 0). Only (a, b) are free; the hyperbola
/// semi-axes are pinned by the focus-sharing and orthogonality conditions to
/// alpha = c^2/a and beta = b*c/a.
struct ConfocalPair {
  double a{0.0};
  double b{0.0};
  double alpha{0.0};
  double beta{0.0};
  double c{0.0};
};

ConfocalPair make_confocal_pair(double a, double b);

/// (F1, F2) = ((-c, 0), (c, 0)). F1 is the emission point throughout.
std::pair<Vec2, Vec2> foci(const ConfocalPair& pair);

enum class ConicKind { Ellipse, HyperbolaRightBranch };

/// One conic in the canonical frame, optionally dilated about a center point.
/// semi_u/semi_v are the pre-dilation semi-axes; the realized curve is the
/// image of the base curve under p -> center + dilation * (p - center).
struct Conic {
  ConicKind kind{ConicKind::Ellipse};
  double semi_u{1.0};
  double semi_v{1.0};
  Vec2 dilation_center{0.0, 0.0};
  double dilation{1.0};
};

/// Flattened implicit form of the realized (dilated) curve.
kernels::ConicForm conic_form_of(const Conic& conic);

/// Implicit value F(p); zero on the curve, sign fixed by the form above
/// (positive outside an ellipse, positive on the focus-free side of the
/// right hyperbola branch).
double conic_eval(const Conic& conic, Vec2 p);

Vec2 conic_gradient(const Conic& conic, Vec2 p);

/// Unit normal at a point on the curve. Ellipse normals point away from the
/// conic's own center; hyperbola normals away from the branch's convex
/// interior (the side holding the enclosed focus). Rejects points farther
/// than 1e-9 * semi_u from the curve.
Vec2 normal_at(const Conic& conic, Vec2 p);

struct RayHits {
  std::array<double, 2> t{};
  int count{0};
  bool tangent{false};
};

/// Ascending parameters t > 0 where the ray meets the curve, branch-filtered
/// for hyperbolas, each polished by one Newton step. A grazing hit reports
/// the double root once with the tangent flag set.
RayHits ray_conic_intersections(const Ray2& ray, const Conic& conic);

/// Upper intersection H = (c, b^2/a) of the pair's two curves. The x
/// coordinate equals c exactly; this is the content of the orthogonality
/// condition tying beta to b.
Vec2 ellipse_hyperbola_intersection(const ConfocalPair& pair);

/// Arc parameter of an on-curve point: the angle parameter for ellipses,
/// asinh(y/semi_v) for hyperbolas, both measured on the pre-dilation curve.
double conic_param(const Conic& conic, Vec2 p);

/// Inverse of conic_param.
Vec2 conic_point(const Conic& conic, double u);

}  // namespace mirage
