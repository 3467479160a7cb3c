// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "mirage/conics.hpp"
#include "mirage/geom.hpp"

namespace mirage {

enum class EdgeClass {
  EllipseArcB1,
  HyperbolaArcB1,
  RadialSegmentB1,
  EllipseArcB2,
  HyperbolaArcB2,
  RadialSegmentB2,
};

const char* edge_class_name(EdgeClass cls);

struct ConicArc {
  Conic conic{};
  double u0{0.0};  // parameter interval, u0 < u1
  double u1{0.0};
  Vec2 p0{};  // endpoints at u0 and u1
  Vec2 p1{};
};

struct Segment {
  Vec2 p0{};
  Vec2 p1{};
};

struct Edge {
  int id{0};
  EdgeClass cls{EdgeClass::EllipseArcB1};
  bool is_arc{true};
  ConicArc arc{};
  Segment seg{};
};

/// The inner body before dilation: the curvilinear triangle ABH above the
/// major axis together with its mirror image below. Corners: A on the
/// ellipse, B on the hyperbola branch (both on the ray from F1 at angle
/// phi_B), H the upper curve intersection. Six edges, ids 0-5.
struct PartialBody {
  ConfocalPair pair{};
  double phi_H{0.0};
  double phi_B{0.0};
  Vec2 A{}, B{}, H{};
  std::vector<Edge> edges;
};

/// The full two-piece mirror body: the partial body plus its dilation about
/// F1 by lambda. Edge ids 0-5 are the inner piece (upper ellipse arc, upper
/// hyperbola arc, upper radial segment, then the three mirrored edges); ids
/// 6-11 are their dilated images. The two pieces share exactly the points
/// B and its mirror.
struct Body2D {
  ConfocalPair pair{};
  double phi_H{0.0};
  double phi_B{0.0};
  double lambda{1.0};
  Vec2 A{}, B{}, H{};
  std::vector<Edge> edges;
  std::array<Vec2, 2> touch_points{};
  double diameter{0.0};
  std::vector<Vec2> hull;
};

/// Angle of p about F1, measured from the positive x direction. Signed;
/// callers fold with fabs for the unsigned sector angle.
double focal_angle(const ConfocalPair& pair, Vec2 p);

double asymptote_angle(const ConfocalPair& pair);
double intersection_angle(const ConfocalPair& pair);  // phi_H

PartialBody build_B1(const ConfocalPair& pair, double phi_B);

/// lambda = |F1 B| / |F1 A| > 1, the dilation that maps A onto B.
double dilation_coefficient(const PartialBody& b1);

Body2D build_invisible_body(const ConfocalPair& pair, double phi_B);

/// Low-level assembly with the dilation coefficient supplied by the caller.
/// The document loader uses it to realize a stored lambda, and verification
/// power tests use it (together with beta_scale, which detunes the hyperbola
/// semi-axis) to build deliberately wrong bodies.
Body2D assemble_body(const ConfocalPair& pair, double phi_B, double lambda,
                     double beta_scale = 1.0);

/// Closed-set membership with a signed slack in length units: tol > 0
/// inflates the body, tol < 0 shrinks it to a strict interior test.
bool contains_B1(const Body2D& body, Vec2 p, double tol);
bool contains_B2(const Body2D& body, Vec2 p, double tol);
bool contains(const Body2D& body, Vec2 p, double tol);

/// Evenly spaced boundary points, per edge in parameter space, endpoints
/// included.
std::vector<Vec2> sample_boundary_edge(const Edge& edge, int count);

struct TangencyScan {
  int samples{0};
  int contacts{0};            // boundary samples of one piece on the other
  double worst_contact_gap{0.0};  // farthest contact from a touch point
  int interior_hits{0};       // samples strictly inside the other piece
};

/// Samples both pieces' boundaries against each other. A sound body reports
/// contacts only at the two shared points and zero interior hits.
TangencyScan tangency_scan(const Body2D& body, int samples_per_edge);

/// Largest violation (in length units) of the claim that every boundary
/// point lies in the closed angular sector [phi_H, phi_B] about F1.
double angular_extent_violation(const Body2D& body, int samples_per_edge);

}  // namespace mirage
