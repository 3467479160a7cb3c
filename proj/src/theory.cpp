// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mirage/conics.hpp"

namespace mirage {

namespace {

void validate_cfg(const CevianConfiguration& cfg) {
  const double vals[] = {cfg.a1, cfg.a2, cfg.b1, cfg.b2, cfg.f};
  for (double v : vals) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::invalid_argument(
          "cevian configuration lengths must be finite and positive");
    }
  }
}

double rel(double lhs, double rhs, double denom) {
  return std::fabs(lhs - rhs) / denom;
}

double angle_from_axis(Vec2 p, Vec2 f1, Vec2 axis) {
  return angle_between(p - f1, axis);
}

}  // namespace

CevianConfiguration cevian_from_points(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const Vec2 ab = b - a;
  const Vec2 ac = c - a;
  const double ab_len = norm(ab);
  const double ac_len = norm(ac);
  if (std::fabs(cross(ab, ac)) <= 1e-12 * ab_len * ac_len) {
    throw std::invalid_argument("cevian_from_points: A, B, C are collinear");
  }
  const Vec2 ad = d - a;
  const double along = dot(ad, ac) / (ac_len * ac_len);
  const double off = std::fabs(cross(ac, ad)) / ac_len;
  if (along < -1e-9 || along > 1.0 + 1e-9 || off > 1e-9 * ac_len) {
    throw std::invalid_argument(
        "cevian_from_points: D must lie on segment AC");
  }
  CevianConfiguration cfg;
  cfg.a1 = ab_len;
  cfg.a2 = dist(b, c);
  cfg.b1 = norm(ad);
  cfg.b2 = dist(d, c);
  cfg.f = dist(b, d);
  validate_cfg(cfg);
  return cfg;
}

double relation_a(const CevianConfiguration& cfg) {
  validate_cfg(cfg);
  return std::fabs(cfg.a1 * cfg.b2 - cfg.a2 * cfg.b1) / (cfg.a1 * cfg.b2);
}

double relation_b(const CevianConfiguration& cfg) {
  validate_cfg(cfg);
  const double f2 = cfg.f * cfg.f;
  return std::fabs(cfg.a1 * cfg.a2 - cfg.b1 * cfg.b2 - f2) / f2;
}

double relation_c(const CevianConfiguration& cfg) {
  validate_cfg(cfg);
  const double f2 = cfg.f * cfg.f;
  return std::fabs((cfg.a1 + cfg.b1) * (cfg.a2 - cfg.b2) - f2) / f2;
}

bool is_bisector(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  return relation_c(cevian_from_points(a, b, c, d)) < 1e-9;
}

double IdentityReport::max_residual() const {
  if (!structural_ok) return std::numeric_limits<double>::infinity();
  return std::max({mirror_angle, sector_order, ellipse_sum, hyperbola_diff,
                   focal_product, bisector_cd, bisector_eg, exit_alignment,
                   through_focus_de});
}

bool IdentityReport::pass(double tol) const {
  return structural_ok && max_residual() < tol;
}

IdentityReport check_identity_chain(const Trajectory& traj,
                                    const Body2D& body) {
  IdentityReport rep;
  if (traj.reflections.size() != 4) {
    rep.structural_note = "expected 4 reflections, got " +
                          std::to_string(traj.reflections.size());
    return rep;
  }
  static constexpr EdgeClass kExpected[4] = {
      EdgeClass::EllipseArcB1, EdgeClass::HyperbolaArcB1,
      EdgeClass::EllipseArcB2, EdgeClass::HyperbolaArcB2};
  for (int i = 0; i < 4; ++i) {
    if (traj.reflections[static_cast<size_t>(i)].cls != kExpected[i]) {
      rep.structural_note =
          std::string("reflection ") + std::to_string(i + 1) + " hit " +
          edge_class_name(traj.reflections[static_cast<size_t>(i)].cls) +
          ", expected " + edge_class_name(kExpected[i]);
      return rep;
    }
  }
  if (traj.status != TraceStatus::Escaped) {
    rep.structural_note = std::string("trace ended with status ") +
                          trace_status_name(traj.status);
    return rep;
  }
  rep.structural_ok = true;

  const auto [f1, f2] = foci(body.pair);
  const Vec2 axis = f2 - f1;
  const Vec2 pc = traj.reflections[0].point;
  const Vec2 pd = traj.reflections[1].point;
  const Vec2 pe = traj.reflections[2].point;
  const Vec2 pg = traj.reflections[3].point;

  const double tc = angle_from_axis(pc, f1, axis);
  const double td = angle_from_axis(pd, f1, axis);
  const double te = angle_from_axis(pe, f1, axis);
  const double tg = angle_from_axis(pg, f1, axis);
  const auto angle_rel = [](double x, double y) {
    return std::fabs(x - y) / std::max({x, y, 1e-300});
  };

  Vec2 radial_up{};
  Vec2 radial_low{};
  for (const Edge& e : body.edges) {
    if (e.cls != EdgeClass::RadialSegmentB1) continue;
    if (e.seg.p0.y >= 0.0) {
      radial_up = e.seg.p0;
    } else {
      radial_low = e.seg.p0;
    }
  }
  rep.mirror_angle = angle_rel(angle_from_axis(radial_up, f1, axis),
                               angle_from_axis(radial_low, f1, axis));

  rep.sector_order =
      std::max(0.0, std::max(tc, td) - body.phi_B) / body.phi_B;

  const double sum_c = dist(f1, pc) + dist(f2, pc);
  const double sum_h = dist(f1, body.H) + dist(f2, body.H);
  rep.ellipse_sum = rel(sum_c, sum_h, sum_h);

  const double diff_d = dist(f1, pd) - dist(f2, pd);
  const double diff_h = dist(f1, body.H) - dist(f2, body.H);
  rep.hyperbola_diff = rel(diff_d, diff_h, std::fabs(diff_h));

  const double c = body.pair.c;
  const double four_c2 = 4.0 * c * c;
  rep.focal_product = rel(sum_c * diff_d, four_c2, four_c2);

  rep.bisector_cd = angle_rel(tc, td);
  rep.bisector_eg = angle_rel(te, tg);
  rep.exit_alignment = angle_rel(tc, tg);
  rep.through_focus_de = angle_between(pd - f1, pe - f1);
  return rep;
}

}  // namespace mirage
