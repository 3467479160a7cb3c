// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/body.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "mirage/kernels.hpp"

namespace mirage {

namespace {

constexpr int kHullSamplesPerArc = 48;

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Vec2 mirror_x(Vec2 p) { return {p.x, -p.y}; }

struct B1Parts {
  double phi_H;
  Conic ellipse;
  Conic hyperbola;
  Vec2 A, B, H;
};

B1Parts build_b1_parts(const ConfocalPair& pair, double phi_B,
                       double beta_scale) {
  B1Parts parts;
  parts.ellipse = Conic{ConicKind::Ellipse, pair.a, pair.b, {}, 1.0};
  parts.hyperbola = Conic{ConicKind::HyperbolaRightBranch, pair.alpha,
                          pair.beta * beta_scale, {}, 1.0};

  if (beta_scale == 1.0) {
    parts.H = ellipse_hyperbola_intersection(pair);
  } else {
    // Re-intersect the ellipse with the detuned hyperbola; the system is
    // linear in the squared coordinates.
    const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
    const double al2 = pair.alpha * pair.alpha;
    const double be2 = parts.hyperbola.semi_v * parts.hyperbola.semi_v;
    const double Y = (1.0 - al2 / a2) / (al2 / (a2 * be2) + 1.0 / b2);
    const double X = al2 * (1.0 + Y / be2);
    if (!(X > 0.0) || !(Y > 0.0))
      throw std::invalid_argument("detuned hyperbola misses the ellipse");
    parts.H = {std::sqrt(X), std::sqrt(Y)};
  }

  const Vec2 f1{-pair.c, 0.0};
  const double phi_H = std::atan2(parts.H.y, parts.H.x - f1.x);
  parts.phi_H = phi_H;
  const double asym =
      std::atan(parts.hyperbola.semi_v / parts.hyperbola.semi_u);
  if (!(phi_B > phi_H))
    throw std::invalid_argument("phi_b below phi_H=" + format_angle(phi_H) +
                                " (the triangle would be degenerate)");
  if (!(phi_B < asym))
    throw std::invalid_argument("phi_b at or beyond the asymptote angle " +
                                format_angle(asym) +
                                " (the ray never meets the branch)");

  const Ray2 ray = make_ray(f1, {std::cos(phi_B), std::sin(phi_B)});
  const RayHits eh = ray_conic_intersections(ray, parts.ellipse);
  const RayHits hh = ray_conic_intersections(ray, parts.hyperbola);
  if (eh.count < 1 || hh.count < 1)
    throw std::logic_error("construction ray missed a curve");
  const double tA = eh.t[0];
  const double tB = hh.t[0];
  if (!(tA < tB)) throw std::logic_error("corner ordering violated");
  parts.A = ray_point(ray, tA);
  parts.B = ray_point(ray, tB);
  return parts;
}

Edge make_arc_edge(int id, EdgeClass cls, const Conic& conic, Vec2 pa, Vec2 pb) {
  Edge e;
  e.id = id;
  e.cls = cls;
  e.is_arc = true;
  e.arc.conic = conic;
  double ua = conic_param(conic, pa);
  double ub = conic_param(conic, pb);
  if (ua > ub) {
    std::swap(ua, ub);
    std::swap(pa, pb);
  }
  e.arc.u0 = ua;
  e.arc.u1 = ub;
  e.arc.p0 = pa;
  e.arc.p1 = pb;
  return e;
}

Edge make_segment_edge(int id, EdgeClass cls, Vec2 p0, Vec2 p1) {
  Edge e;
  e.id = id;
  e.cls = cls;
  e.is_arc = false;
  e.seg = Segment{p0, p1};
  return e;
}

struct PieceConics {
  Conic ellipse;
  Conic hyperbola;
};

PieceConics piece_conics(const Body2D& body, bool dilated) {
  const Edge& e = body.edges.at(dilated ? 6 : 0);
  const Edge& h = body.edges.at(dilated ? 7 : 1);
  return {e.arc.conic, h.arc.conic};
}

double signed_conic_distance(const Conic& conic, Vec2 p) {
  const double f = conic_eval(conic, p);
  const double gn = norm(conic_gradient(conic, p));
  if (!(gn > 1e-300)) return f < 0.0 ? -1e300 : 1e300;
  return f / gn;
}

bool piece_contains(const Body2D& body, const PieceConics& pc, Vec2 p,
                    double tol) {
  const double dx = p.x + body.pair.c;
  const double dy = std::fabs(p.y);
  const double lo = dy * std::cos(body.phi_H) - dx * std::sin(body.phi_H);
  const double hi = dx * std::sin(body.phi_B) - dy * std::cos(body.phi_B);
  if (lo < -tol || hi < -tol) return false;
  const Vec2 folded{p.x, dy};
  if (signed_conic_distance(pc.ellipse, folded) < -tol) return false;
  if (signed_conic_distance(pc.hyperbola, folded) > tol) return false;
  return true;
}

}  // namespace

const char* edge_class_name(EdgeClass cls) {
  switch (cls) {
    case EdgeClass::EllipseArcB1: return "EllipseArcB1";
    case EdgeClass::HyperbolaArcB1: return "HyperbolaArcB1";
    case EdgeClass::RadialSegmentB1: return "RadialSegmentB1";
    case EdgeClass::EllipseArcB2: return "EllipseArcB2";
    case EdgeClass::HyperbolaArcB2: return "HyperbolaArcB2";
    case EdgeClass::RadialSegmentB2: return "RadialSegmentB2";
  }
  return "?";
}

double focal_angle(const ConfocalPair& pair, Vec2 p) {
  return std::atan2(p.y, p.x + pair.c);
}

double asymptote_angle(const ConfocalPair& pair) {
  return std::atan(pair.beta / pair.alpha);
}

double intersection_angle(const ConfocalPair& pair) {
  return std::atan2(pair.b * pair.b / pair.a, 2.0 * pair.c);
}

PartialBody build_B1(const ConfocalPair& pair, double phi_B) {
  const B1Parts parts = build_b1_parts(pair, phi_B, 1.0);
  PartialBody body;
  body.pair = pair;
  body.phi_H = parts.phi_H;
  body.phi_B = phi_B;
  body.A = parts.A;
  body.B = parts.B;
  body.H = parts.H;
  body.edges.push_back(
      make_arc_edge(0, EdgeClass::EllipseArcB1, parts.ellipse, parts.A, parts.H));
  body.edges.push_back(make_arc_edge(1, EdgeClass::HyperbolaArcB1,
                                     parts.hyperbola, parts.H, parts.B));
  body.edges.push_back(
      make_segment_edge(2, EdgeClass::RadialSegmentB1, parts.A, parts.B));
  body.edges.push_back(make_arc_edge(3, EdgeClass::EllipseArcB1, parts.ellipse,
                                     mirror_x(parts.A), mirror_x(parts.H)));
  body.edges.push_back(make_arc_edge(4, EdgeClass::HyperbolaArcB1,
                                     parts.hyperbola, mirror_x(parts.H),
                                     mirror_x(parts.B)));
  body.edges.push_back(make_segment_edge(5, EdgeClass::RadialSegmentB1,
                                         mirror_x(parts.A), mirror_x(parts.B)));
  return body;
}

double dilation_coefficient(const PartialBody& b1) {
  const Vec2 f1{-b1.pair.c, 0.0};
  return dist(f1, b1.B) / dist(f1, b1.A);
}

Body2D assemble_body(const ConfocalPair& pair, double phi_B, double lambda,
                     double beta_scale) {
  if (!(lambda > 1.0))
    throw std::invalid_argument("dilation coefficient must exceed 1");
  const B1Parts parts = build_b1_parts(pair, phi_B, beta_scale);
  const Vec2 f1{-pair.c, 0.0};

  Body2D body;
  body.pair = pair;
  body.phi_H = parts.phi_H;
  body.phi_B = phi_B;
  body.lambda = lambda;
  body.A = parts.A;
  body.B = parts.B;
  body.H = parts.H;
  body.touch_points = {parts.B, mirror_x(parts.B)};

  const auto dilate = [&](Vec2 p) { return f1 + lambda * (p - f1); };
  Conic e2 = parts.ellipse;
  Conic h2 = parts.hyperbola;
  e2.dilation_center = f1;
  e2.dilation = lambda;
  h2.dilation_center = f1;
  h2.dilation = lambda;

  const Vec2 A = parts.A, B = parts.B, H = parts.H;
  body.edges.push_back(make_arc_edge(0, EdgeClass::EllipseArcB1, parts.ellipse, A, H));
  body.edges.push_back(make_arc_edge(1, EdgeClass::HyperbolaArcB1, parts.hyperbola, H, B));
  body.edges.push_back(make_segment_edge(2, EdgeClass::RadialSegmentB1, A, B));
  body.edges.push_back(make_arc_edge(3, EdgeClass::EllipseArcB1, parts.ellipse,
                                     mirror_x(A), mirror_x(H)));
  body.edges.push_back(make_arc_edge(4, EdgeClass::HyperbolaArcB1, parts.hyperbola,
                                     mirror_x(H), mirror_x(B)));
  body.edges.push_back(make_segment_edge(5, EdgeClass::RadialSegmentB1,
                                         mirror_x(A), mirror_x(B)));
  body.edges.push_back(make_arc_edge(6, EdgeClass::EllipseArcB2, e2, dilate(A), dilate(H)));
  body.edges.push_back(make_arc_edge(7, EdgeClass::HyperbolaArcB2, h2, dilate(H), dilate(B)));
  body.edges.push_back(make_segment_edge(8, EdgeClass::RadialSegmentB2, dilate(A), dilate(B)));
  body.edges.push_back(make_arc_edge(9, EdgeClass::EllipseArcB2, e2,
                                     mirror_x(dilate(A)), mirror_x(dilate(H))));
  body.edges.push_back(make_arc_edge(10, EdgeClass::HyperbolaArcB2, h2,
                                     mirror_x(dilate(H)), mirror_x(dilate(B))));
  body.edges.push_back(make_segment_edge(11, EdgeClass::RadialSegmentB2,
                                         mirror_x(dilate(A)), mirror_x(dilate(B))));

  std::vector<Vec2> corners;
  for (const Edge& e : body.edges) {
    corners.push_back(e.is_arc ? e.arc.p0 : e.seg.p0);
    corners.push_back(e.is_arc ? e.arc.p1 : e.seg.p1);
  }
  for (const Vec2& p : corners)
    for (const Vec2& q : corners)
      body.diameter = std::max(body.diameter, dist(p, q));

  std::vector<Vec2> cloud = corners;
  for (const Edge& e : body.edges)
    if (e.is_arc)
      for (const Vec2& p : sample_boundary_edge(e, kHullSamplesPerArc))
        cloud.push_back(p);
  body.hull = convex_hull(std::move(cloud));
  return body;
}

Body2D build_invisible_body(const ConfocalPair& pair, double phi_B) {
  const PartialBody b1 = build_B1(pair, phi_B);
  const double lambda = dilation_coefficient(b1);
  Body2D body = assemble_body(pair, phi_B, lambda);
  const Vec2 f1{-pair.c, 0.0};
  const Vec2 dilA = f1 + lambda * (b1.A - f1);
  if (dist(dilA, b1.B) > 1e-12 * pair.a)
    throw std::logic_error("dilated inner corner drifted off the touch point");
  return body;
}

bool contains_B1(const Body2D& body, Vec2 p, double tol) {
  return piece_contains(body, piece_conics(body, false), p, tol);
}

bool contains_B2(const Body2D& body, Vec2 p, double tol) {
  return piece_contains(body, piece_conics(body, true), p, tol);
}

bool contains(const Body2D& body, Vec2 p, double tol) {
  return contains_B1(body, p, tol) || contains_B2(body, p, tol);
}

std::vector<Vec2> sample_boundary_edge(const Edge& edge, int count) {
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count < 2) count = 2;
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    if (edge.is_arc) {
      const double u = edge.arc.u0 + f * (edge.arc.u1 - edge.arc.u0);
      // Pin the ends to the stored corner points so corner samples are exact.
      if (i == 0)
        out.push_back(edge.arc.p0);
      else if (i == count - 1)
        out.push_back(edge.arc.p1);
      else
        out.push_back(conic_point(edge.arc.conic, u));
    } else {
      out.push_back(edge.seg.p0 + f * (edge.seg.p1 - edge.seg.p0));
    }
  }
  return out;
}

namespace {

void scan_one_direction(const Body2D& body, bool source_inner,
                        int samples_per_edge, TangencyScan& scan) {
  std::vector<double> xs, ys;
  for (int ei = source_inner ? 0 : 6, end = ei + 6; ei < end; ++ei)
    for (const Vec2& p : sample_boundary_edge(body.edges[ei], samples_per_edge)) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
  const std::size_t n = xs.size();
  const PieceConics target = piece_conics(body, source_inner);

  std::vector<double> fe(n), fh(n), lo(n), hi(n);
  kernels::conic_form_eval(conic_form_of(target.ellipse), xs.data(), ys.data(),
                           fe.data(), n);
  kernels::conic_form_eval(conic_form_of(target.hyperbola), xs.data(),
                           ys.data(), fh.data(), n);
  kernels::sector_margins(-body.pair.c, 0.0, std::cos(body.phi_H),
                          std::sin(body.phi_H), std::cos(body.phi_B),
                          std::sin(body.phi_B), xs.data(), ys.data(), lo.data(),
                          hi.data(), n);

  const double contact_tol = 1e-12 * body.pair.a;
  const double interior_tol = 1e-9 * body.pair.a;
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] < -interior_tol || hi[i] < -interior_tol) continue;
    const Vec2 folded{xs[i], std::fabs(ys[i])};
    const double de =
        fe[i] / std::max(norm(conic_gradient(target.ellipse, folded)), 1e-300);
    const double dh =
        fh[i] / std::max(norm(conic_gradient(target.hyperbola, folded)), 1e-300);
    const bool contact = lo[i] >= -contact_tol && hi[i] >= -contact_tol &&
                         de >= -contact_tol && dh <= contact_tol;
    const bool interior = lo[i] >= interior_tol && hi[i] >= interior_tol &&
                          de >= interior_tol && dh <= -interior_tol;
    if (contact) {
      ++scan.contacts;
      const Vec2 p{xs[i], ys[i]};
      const double gap = std::min(dist(p, body.touch_points[0]),
                                  dist(p, body.touch_points[1]));
      scan.worst_contact_gap = std::max(scan.worst_contact_gap, gap);
    }
    if (interior) ++scan.interior_hits;
  }
  scan.samples += static_cast<int>(n);
}

}  // namespace

TangencyScan tangency_scan(const Body2D& body, int samples_per_edge) {
  TangencyScan scan;
  scan_one_direction(body, true, samples_per_edge, scan);
  scan_one_direction(body, false, samples_per_edge, scan);
  return scan;
}

double angular_extent_violation(const Body2D& body, int samples_per_edge) {
  std::vector<double> xs, ys;
  for (const Edge& e : body.edges)
    for (const Vec2& p : sample_boundary_edge(e, samples_per_edge)) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
  const std::size_t n = xs.size();
  std::vector<double> lo(n), hi(n);
  kernels::sector_margins(-body.pair.c, 0.0, std::cos(body.phi_H),
                          std::sin(body.phi_H), std::cos(body.phi_B),
                          std::sin(body.phi_B), xs.data(), ys.data(), lo.data(),
                          hi.data(), n);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max({worst, -lo[i], -hi[i]});
  return worst;
}

}  // namespace mirage
