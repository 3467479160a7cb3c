// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mirage/body.hpp"
#include "mirage/conics.hpp"
#include "oracle_helpers.hpp"

using namespace mirage;

namespace {

std::pair<Vec2, Vec2> edge_endpoints(const Edge& e) {
  if (e.is_arc) return {e.arc.p0, e.arc.p1};
  return {e.seg.p0, e.seg.p1};
}

bool same_point(Vec2 a, Vec2 b, double tol) { return dist(a, b) <= tol; }

}  // namespace

TEST_CASE("sector angles of the worked example") {
  const ConfocalPair pair = oracle::canonical_pair();
  CHECK(intersection_angle(pair) ==
        doctest::Approx(oracle::kPhiH).epsilon(1e-13));
  CHECK(asymptote_angle(pair) ==
        doctest::Approx(oracle::kAsymptote).epsilon(1e-13));
}

TEST_CASE("B1 vertices match the frozen reference") {
  const PartialBody b1 = build_B1(oracle::canonical_pair(), oracle::kPhiB);
  CHECK(oracle::rel_err(b1.A.x, oracle::kAx) < 1e-12);
  CHECK(oracle::rel_err(b1.A.y, oracle::kAy) < 1e-12);
  CHECK(oracle::rel_err(b1.B.x, oracle::kBx) < 1e-12);
  CHECK(oracle::rel_err(b1.B.y, oracle::kBy) < 1e-12);
  CHECK(oracle::rel_err(b1.H.x, oracle::kHx) < 1e-12);
  CHECK(oracle::rel_err(b1.H.y, oracle::kHy) < 1e-12);

  const auto [f1, f2] = foci(b1.pair);
  CHECK(std::fabs(focal_angle(b1.pair, b1.A) - oracle::kPhiB) < 1e-12);
  CHECK(std::fabs(focal_angle(b1.pair, b1.B) - oracle::kPhiB) < 1e-12);
  CHECK(oracle::rel_err(dist(b1.A, f1), oracle::kTA) < 1e-12);
  CHECK(oracle::rel_err(dist(b1.B, f1), oracle::kTB) < 1e-12);

  const double lambda = dilation_coefficient(b1);
  CHECK(oracle::rel_err(lambda, oracle::kLambda) < 1e-12);
  CHECK(lambda > 1.0);
  const Vec2 mapped = f1 + lambda * (b1.A - f1);
  CHECK(oracle::rel_err(mapped.x, b1.B.x) < 1e-12);
  CHECK(oracle::rel_err(mapped.y, b1.B.y) < 1e-12);
}

TEST_CASE("the opening angle must stay inside the feasible interval") {
  const ConfocalPair pair = oracle::canonical_pair();
  CHECK_THROWS_AS(build_B1(pair, intersection_angle(pair)),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_B1(pair, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_B1(pair, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(build_B1(pair, asymptote_angle(pair)),
                  std::invalid_argument);
  CHECK_NOTHROW(build_B1(pair, 0.65));
  CHECK_NOTHROW(build_B1(pair, 1.04));
}

TEST_CASE("full body has twelve edges in mirrored dilated pairs") {
  const Body2D body = oracle::canonical_body();
  REQUIRE(body.edges.size() == 12);
  for (int i = 0; i < 12; ++i) CHECK(body.edges[i].id == i);

  int per_class[6] = {0, 0, 0, 0, 0, 0};
  for (const Edge& e : body.edges) ++per_class[static_cast<int>(e.cls)];
  for (int k = 0; k < 6; ++k) CHECK(per_class[k] == 2);

  // Dilated edges are the inner edges mapped about F1 by lambda.
  const auto [f1, f2] = foci(body.pair);
  const double tol = 1e-9 * body.pair.a;
  for (int i = 0; i < 6; ++i) {
    const auto [p0, p1] = edge_endpoints(body.edges[i]);
    const auto [q0, q1] = edge_endpoints(body.edges[i + 6]);
    CHECK(same_point(f1 + body.lambda * (p0 - f1), q0, tol));
    CHECK(same_point(f1 + body.lambda * (p1 - f1), q1, tol));
  }
}

TEST_CASE("edge endpoints lie on their geometry") {
  const Body2D body = oracle::canonical_body();
  const auto [f1, f2] = foci(body.pair);
  for (const Edge& e : body.edges) {
    if (e.is_arc) {
      CHECK(e.arc.u0 < e.arc.u1);
      CHECK(std::fabs(conic_eval(e.arc.conic, e.arc.p0)) < 1e-9);
      CHECK(std::fabs(conic_eval(e.arc.conic, e.arc.p1)) < 1e-9);
      CHECK(same_point(conic_point(e.arc.conic, e.arc.u0), e.arc.p0,
                       1e-9 * body.pair.a));
      CHECK(same_point(conic_point(e.arc.conic, e.arc.u1), e.arc.p1,
                       1e-9 * body.pair.a));
    } else {
      CHECK(dist(e.seg.p0, e.seg.p1) > 1e-9);
      // Radial segments are collinear with the emission point.
      CHECK(std::fabs(cross(e.seg.p0 - f1, e.seg.p1 - f1)) <
            1e-9 * body.pair.a * body.pair.a);
    }
  }
}

TEST_CASE("edge set is mirror symmetric about the major axis") {
  const Body2D body = oracle::canonical_body();
  const double tol = 1e-12 * body.pair.a * 10.0;
  for (const Edge& e : body.edges) {
    const auto [p0, p1] = edge_endpoints(e);
    const Vec2 m0{p0.x, -p0.y};
    const Vec2 m1{p1.x, -p1.y};
    const bool found =
        std::any_of(body.edges.begin(), body.edges.end(), [&](const Edge& f) {
          if (f.cls != e.cls) return false;
          const auto [q0, q1] = edge_endpoints(f);
          return (same_point(q0, m0, tol) && same_point(q1, m1, tol)) ||
                 (same_point(q0, m1, tol) && same_point(q1, m0, tol));
        });
    CHECK(found);
  }
}

TEST_CASE("touch points are B and its mirror image") {
  const Body2D body = oracle::canonical_body();
  const double tol = 1e-12 * oracle::kTB;
  const Vec2 b_mirror{body.B.x, -body.B.y};
  const bool direct = same_point(body.touch_points[0], body.B, tol) &&
                      same_point(body.touch_points[1], b_mirror, tol);
  const bool swapped = same_point(body.touch_points[0], b_mirror, tol) &&
                       same_point(body.touch_points[1], body.B, tol);
  CHECK((direct || swapped));
}

TEST_CASE("H coincides with the conic intersection and lies on both curves") {
  oracle::BodySampler sampler(61);
  for (int i = 0; i < 25; ++i) {
    const Body2D body = sampler.next_body();
    const Vec2 h = ellipse_hyperbola_intersection(body.pair);
    CHECK(same_point(body.H, h, 1e-12 * body.pair.a));
    CHECK(oracle::rel_err(body.H.x, body.pair.c) < 1e-12);
  }
}

TEST_CASE("random bodies satisfy all structural invariants") {
  oracle::BodySampler sampler(67);
  for (int i = 0; i < 25; ++i) {
    const Body2D body = sampler.next_body();
    REQUIRE(body.edges.size() == 12);
    CHECK(body.lambda > 1.0);
    CHECK(0.0 < body.phi_H);
    CHECK(body.phi_H < body.phi_B);
    CHECK(body.phi_B < asymptote_angle(body.pair));
    CHECK(std::fabs(body.phi_H -
                    std::atan2(body.pair.b * body.pair.b / body.pair.a,
                               2.0 * body.pair.c)) < 1e-13);
    const double scale = norm(body.B) + body.pair.a;
    CHECK(dist(body.touch_points[0], body.B) < 1e-12 * scale);
  }
}

TEST_CASE("interior membership along mid-sector rays") {
  const Body2D body = oracle::canonical_body();
  const auto [f1, f2] = foci(body.pair);
  const Conic ellipse{ConicKind::Ellipse, body.pair.a, body.pair.b, {0, 0},
                      1.0};
  const Conic hyper{ConicKind::HyperbolaRightBranch, body.pair.alpha,
                    body.pair.beta, {0, 0}, 1.0};
  for (double frac : {0.25, 0.5, 0.75}) {
    const double th = body.phi_H + frac * (body.phi_B - body.phi_H);
    const Ray2 ray = make_ray(f1, {std::cos(th), std::sin(th)});
    const RayHits he = ray_conic_intersections(ray, ellipse);
    const RayHits hh = ray_conic_intersections(ray, hyper);
    REQUIRE(he.count >= 1);
    REQUIRE(hh.count >= 1);
    const Vec2 inside = ray_point(ray, 0.5 * (he.t[0] + hh.t[0]));
    CHECK(contains_B1(body, inside, 0.0));
    CHECK(contains(body, inside, 0.0));
  }
  CHECK_FALSE(contains(body, f1, 1e-6));
  CHECK_FALSE(contains(body, {0.0, 0.0}, 1e-6));
  CHECK(contains(body, body.A, 1e-9));
  CHECK(contains(body, body.B, 1e-9));
}

TEST_CASE("construction commutes with uniform scaling") {
  const ConfocalPair base = oracle::canonical_pair();
  const Body2D body = build_invisible_body(base, oracle::kPhiB);
  for (double s : {0.01, 3.0, 100.0}) {
    const Body2D scaled = build_invisible_body(
        make_confocal_pair(s * base.a, s * base.b), oracle::kPhiB);
    CHECK(oracle::rel_err(scaled.lambda, body.lambda) < 1e-12);
    CHECK(std::fabs(scaled.phi_H - body.phi_H) < 1e-12);
    CHECK(std::fabs(scaled.phi_B - body.phi_B) < 1e-12);
    CHECK(oracle::rel_err(scaled.A.x, s * body.A.x) < 1e-11);
    CHECK(oracle::rel_err(scaled.A.y, s * body.A.y) < 1e-11);
    CHECK(oracle::rel_err(scaled.B.x, s * body.B.x) < 1e-11);
    CHECK(oracle::rel_err(scaled.B.y, s * body.B.y) < 1e-11);
    CHECK(oracle::rel_err(scaled.H.y, s * body.H.y) < 1e-11);
  }
}

TEST_CASE("the three generating parameters reconstruct the body") {
  oracle::BodySampler sampler(71);
  for (int i = 0; i < 10; ++i) {
    const Body2D body = sampler.next_body();
    const double a = body.pair.a;
    // Invert phi_H = atan2(b^2/a, 2c) with c^2 = a^2 - b^2: substitute
    // u = b^2 into u = 2 a tan(phi_H) sqrt(a^2 - u) and solve the quadratic.
    const double t = std::tan(body.phi_H);
    const double u =
        2.0 * a * a * t * (std::sqrt(t * t + 1.0) - t);
    const double b = std::sqrt(u);
    const Body2D rebuilt =
        build_invisible_body(make_confocal_pair(a, b), body.phi_B);
    CHECK(dist(rebuilt.A, body.A) < 1e-9 * a);
    CHECK(dist(rebuilt.B, body.B) < 1e-9 * a);
    CHECK(dist(rebuilt.H, body.H) < 1e-9 * a);
    CHECK(std::fabs(rebuilt.lambda - body.lambda) < 1e-9);
  }
}

TEST_CASE("angular extent of the boundary stays inside the sector") {
  const Body2D body = oracle::canonical_body();
  CHECK(angular_extent_violation(body, 850) < 1e-9 * body.pair.a);
}

TEST_CASE("the two pieces touch only at the shared points") {
  oracle::BodySampler sampler(73);
  for (int i = 0; i < 4; ++i) {
    const Body2D body = (i == 0) ? oracle::canonical_body()
                                 : sampler.next_body();
    const TangencyScan scan = tangency_scan(body, 800);
    CHECK(scan.samples > 0);
    CHECK(scan.interior_hits == 0);
    const double scale = norm(body.touch_points[0] - Vec2{0, 0}) +
                         body.pair.a;
    if (scan.contacts > 0) {
      CHECK(scan.worst_contact_gap < 1e-6 * scale);
    }
  }
}

TEST_CASE("boundary sampling spans each edge") {
  const Body2D body = oracle::canonical_body();
  for (const Edge& e : body.edges) {
    const auto pts = sample_boundary_edge(e, 17);
    REQUIRE(pts.size() == 17);
    const auto [p0, p1] = edge_endpoints(e);
    CHECK(same_point(pts.front(), p0, 1e-12 * body.pair.a));
    CHECK(same_point(pts.back(), p1, 1e-12 * body.pair.a));
    if (e.is_arc) {
      for (const Vec2& p : pts) {
        CHECK(std::fabs(conic_eval(e.arc.conic, p)) < 1e-9);
      }
    }
  }
}
